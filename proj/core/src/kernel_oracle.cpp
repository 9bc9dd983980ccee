/*
   Copyright 2026 The charcong Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "charcong/kernel_oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace charcong {

namespace {

std::string budget_message(const BigInt& required, std::uint64_t budget) {
  std::ostringstream os;
  os << "search space of " << required << " vectors exceeds budget " << budget;
  return os.str();
}

// Flattened coefficient form: d coefficients per position.
std::vector<Coeff> flatten(std::span<const Element> v) {
  std::vector<Coeff> out;
  for (const auto& a : v) out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return out;
}

Vec unflatten(const Ring& ring, std::span<const Coeff> flat, std::size_t n) {
  const auto d = static_cast<std::size_t>(ring.degree());
  Vec out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.push_back(ring.from_coeffs(flat.subspan(j * d, d)));
  }
  return out;
}

}  // namespace

BigInt search_space_size(Coeff modulus, int degree, std::size_t n) {
  if (modulus < 1 || degree < 1) throw DomainError("search_space_size: modulus and degree must be positive");
  BigInt result = 1;
  const std::size_t exponent = static_cast<std::size_t>(degree) * n;
  for (std::size_t k = 0; k < exponent; ++k) result *= modulus;
  return result;
}

BudgetExceeded::BudgetExceeded(BigInt required, std::uint64_t budget)
    : Error(budget_message(required, budget)), required_(std::move(required)), budget_(budget) {}

std::vector<Vec> brute_force_kernel(const Ring& ring, const Matrix& b, std::uint64_t budget) {
  if (!ring.is_quotient()) throw UnsupportedRing("brute_force_kernel requires a quotient ring");
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  const BigInt required = search_space_size(ring.modulus(), ring.degree(), n);
  if (required > budget) throw BudgetExceeded(required, budget);

  const std::vector<Element> values(ring.elements().begin(), ring.elements().end());
  const std::size_t q = values.size();
  const auto d = static_cast<std::size_t>(ring.degree());
  const Coeff modulus = ring.modulus();

  // contribution[j][t] = column j of B times values[t], flattened (m*d)
  std::vector<std::vector<std::vector<Coeff>>> contribution(n, std::vector<std::vector<Coeff>>(q));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t t = 0; t < q; ++t) {
      std::vector<Coeff> flat;
      flat.reserve(m * d);
      for (std::size_t i = 0; i < m; ++i) {
        const Element p = ring.mul(b.at(i, j), values[t]);
        flat.insert(flat.end(), p.coeffs().begin(), p.coeffs().end());
      }
      contribution[j][t] = std::move(flat);
    }
  }

  std::vector<Vec> kernel;
  std::vector<std::size_t> digits(n, 0);
  std::vector<Coeff> image(m * d, 0);  // contributions of values[0] = 0 vanish
  auto shift = [&](std::size_t j, std::size_t from, std::size_t to) {
    const auto& sub = contribution[j][from];
    const auto& add = contribution[j][to];
    for (std::size_t k = 0; k < image.size(); ++k) {
      Coeff v = image[k] - sub[k] + add[k];
      v %= modulus;
      if (v < 0) v += modulus;
      image[k] = v;
    }
  };
  while (true) {
    if (std::all_of(image.begin(), image.end(), [](Coeff c) { return c == 0; })) {
      Vec v;
      v.reserve(n);
      for (auto t : digits) v.push_back(values[t]);
      kernel.push_back(std::move(v));
    }
    std::size_t pos = 0;
    for (; pos < n; ++pos) {
      const std::size_t next = digits[pos] + 1;
      if (next < q) {
        shift(pos, digits[pos], next);
        digits[pos] = next;
        break;
      }
      shift(pos, digits[pos], 0);
      digits[pos] = 0;
    }
    if (pos == n) break;
  }
  return kernel;
}

zmod::Matrix scalar_lift(const Ring& ring, const Matrix& b) {
  const auto d = static_cast<std::size_t>(ring.degree());
  zmod::Matrix lifted(b.rows() * d, zmod::Vector(b.cols() * d, 0));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto block = ring.multiplication_matrix(b.at(i, j));
      for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t w = 0; w < d; ++w) lifted[i * d + u][j * d + w] = block[u][w];
      }
    }
  }
  return lifted;
}

std::vector<Vec> scalar_lift_kernel(const Ring& ring, const Matrix& b) {
  if (!ring.is_quotient()) throw UnsupportedRing("scalar_lift_kernel requires a quotient ring");
  const auto d = static_cast<std::size_t>(ring.degree());
  const auto flat_gens = zmod::kernel_generators(scalar_lift(ring, b), b.cols() * d, ring.modulus());
  std::set<Vec> unique;
  std::vector<Vec> out;
  for (const auto& g : flat_gens) {
    Vec v = unflatten(ring, g, b.cols());
    if (std::all_of(v.begin(), v.end(), [](const Element& a) { return a.is_zero(); })) continue;
    if (unique.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

bool kernel_membership(const Ring& ring, const Matrix& b, std::span<const Element> v) {
  const auto image = multiply(ring, b, v);
  return std::all_of(image.begin(), image.end(), [](const Element& a) { return a.is_zero(); });
}

std::vector<Vec> enumerate_span(const Ring& ring, std::span<const Vec> generators, std::size_t n,
                                std::uint64_t limit) {
  // Breadth-first closure of {0} under adding generators; finite additive
  // groups are closed under Z/M-multiples, so this is the full span.
  std::set<std::vector<Coeff>> seen;
  std::vector<std::vector<Coeff>> frontier;
  const Vec zero_vec(n, ring.zero());
  frontier.push_back(flatten(zero_vec));
  seen.insert(frontier.front());
  std::vector<std::vector<Coeff>> flat_gens;
  for (const auto& g : generators) {
    if (g.size() != n) throw DomainError("enumerate_span: generator length mismatch");
    flat_gens.push_back(flatten(g));
  }
  const Coeff modulus = ring.modulus();
  while (!frontier.empty()) {
    std::vector<std::vector<Coeff>> next;
    for (const auto& v : frontier) {
      for (const auto& g : flat_gens) {
        std::vector<Coeff> w(v.size());
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = (v[k] + g[k]) % modulus;
        if (seen.insert(w).second) {
          if (seen.size() > limit) throw BudgetExceeded(BigInt(seen.size()), limit);
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Vec> out;
  out.reserve(seen.size());
  for (const auto& flat : seen) out.push_back(unflatten(ring, flat, n));
  return out;
}

}  // namespace charcong
