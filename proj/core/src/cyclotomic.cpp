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

#include "charcong/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "charcong/error.hpp"

namespace charcong {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  std::int64_t result = n;
  std::int64_t prev = 0;
  for (auto p : prime_factors(n)) {
    if (p == prev) continue;
    result = result / p * (p - 1);
    prev = p;
  }
  return result;
}

namespace {

// Exact quotient of num by a monic divisor; the remainder must vanish.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly rem = num;
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Coeff c = rem[i + dn];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dn; ++k) {
    if (rem[k] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

IntPoly cyclotomic_polynomial(int e) {
  if (e < 1) throw DomainError("cyclotomic_polynomial: e must be >= 1");
  // x^f - 1 = prod_{g | f} Phi_g(x), solved for Phi_f over the divisors of e.
  std::map<int, IntPoly> known;
  for (int f = 1; f <= e; ++f) {
    if (e % f != 0) continue;
    IntPoly poly(static_cast<std::size_t>(f) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (const auto& [g, phi_g] : known) {
      if (f % g == 0) poly = divide_exact(poly, phi_g);
    }
    known.emplace(f, std::move(poly));
  }
  return known.at(e);
}

}  // namespace charcong
