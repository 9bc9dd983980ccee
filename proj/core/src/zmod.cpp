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

#include "charcong/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "charcong/error.hpp"

namespace charcong::zmod {

namespace {

struct Bezout {
  Coeff g, s, t;  // s*a + t*b = g
};

Bezout extended_gcd(Coeff a, Coeff b) {
  Coeff old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Coeff q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

// Applies the determinant-one transform that moves gcd(x[col], y[col])
// into x and zeroes y[col]. Both rows must have the same length.
void combine_rows(Vector& x, Vector& y, std::size_t col, Coeff modulus) {
  const Coeff a = x[col];
  const Coeff b = y[col];
  if (b == 0) return;
  const auto [g, s, t] = extended_gcd(a, b);
  const Coeff u = -b / g;
  const Coeff v = a / g;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Wide xk = x[k];
    const Wide yk = y[k];
    x[k] = reduce(s * xk + t * yk, modulus);
    y[k] = reduce(u * xk + v * yk, modulus);
  }
}

}  // namespace

Coeff reduce(Wide x, Coeff modulus) {
  Wide r = x % modulus;
  if (r < 0) r += modulus;
  return static_cast<Coeff>(r);
}

std::optional<Coeff> inverse(Coeff a, Coeff modulus) {
  a = reduce(a, modulus);
  const auto [g, s, t] = extended_gcd(a, modulus);
  (void)t;
  if (g != 1) return std::nullopt;
  return reduce(s, modulus);
}

Coeff determinant(Matrix a, Coeff modulus) {
  const std::size_t n = a.size();
  Wide det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = c + 1; i < n; ++i) combine_rows(a[c], a[i], c, modulus);
    det = reduce(det * a[c][c], modulus);
    if (det == 0) return 0;
  }
  return reduce(det, modulus);
}

std::optional<Vector> solve_unimodular(Matrix a, Vector b, Coeff modulus) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("solve_unimodular: size mismatch");
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(reduce(b[i], modulus));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = c + 1; i < n; ++i) combine_rows(a[c], a[i], c, modulus);
  }
  // Upper triangular with det = product of the diagonal; each pivot must be a unit.
  Vector x(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    const auto inv = inverse(a[i][i], modulus);
    if (!inv) return std::nullopt;
    Wide acc = a[i][n];
    for (std::size_t k = i + 1; k < n; ++k) acc -= static_cast<Wide>(a[i][k]) * x[k];
    x[i] = reduce(reduce(acc, modulus) * static_cast<Wide>(*inv), modulus);
  }
  return x;
}

std::vector<Vector> kernel_generators(const Matrix& a, std::size_t cols, Coeff modulus) {
  // Row-reduce [a^T | I] on its left block, appending the annihilator
  // multiple of every pivot row (weak Howell form). The rows whose left
  // block vanishes then generate the left kernel of a^T.
  const std::size_t rows = a.size();
  std::vector<Vector> pool;
  pool.reserve(cols + rows);
  for (std::size_t j = 0; j < cols; ++j) {
    Vector row(rows + cols, 0);
    for (std::size_t i = 0; i < rows; ++i) row[i] = reduce(a[i][j], modulus);
    row[rows + j] = 1;
    pool.push_back(std::move(row));
  }

  for (std::size_t c = 0; c < rows; ++c) {
    auto it = std::find_if(pool.begin(), pool.end(), [c](const Vector& r) { return r[c] != 0; });
    if (it == pool.end()) continue;
    Vector pivot = std::move(*it);
    pool.erase(it);
    for (auto& other : pool) combine_rows(pivot, other, c, modulus);
    const Coeff annihilator = modulus / std::gcd(pivot[c], modulus);
    if (annihilator != modulus) {
      Vector extra(pivot.size());
      bool nonzero = false;
      for (std::size_t k = 0; k < pivot.size(); ++k) {
        extra[k] = reduce(static_cast<Wide>(annihilator) * pivot[k], modulus);
        nonzero = nonzero || extra[k] != 0;
      }
      if (nonzero) pool.push_back(std::move(extra));
    }
  }

  std::vector<Vector> gens;
  for (const auto& row : pool) {
    Vector g(row.begin() + static_cast<std::ptrdiff_t>(rows), row.end());
    if (std::any_of(g.begin(), g.end(), [](Coeff v) { return v != 0; })) gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace charcong::zmod
