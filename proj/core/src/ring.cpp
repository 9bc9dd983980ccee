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

#include "charcong/ring.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "charcong/error.hpp"

namespace charcong {

namespace {

constexpr std::size_t kUnitCacheLimit = 1u << 16;

Coeff canon(Wide x, Coeff modulus) {
  if (modulus == 0) return static_cast<Coeff>(x);
  return zmod::reduce(x, modulus);
}

}  // namespace

bool Element::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

std::size_t ElementHash::operator()(const Element& a) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Coeff c : a.coeffs()) h ^= std::hash<Coeff>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct Ring::Impl {
  RingDescriptor desc;
  // zeta^k in canonical form for k in [0, max(e, 2d - 1)).
  std::vector<std::vector<Coeff>> zeta_table;

  mutable std::mutex cache_mutex;
  mutable std::unordered_map<Element, bool, ElementHash> unit_cache;
};

Ring::Ring(int e, Coeff modulus) {
  if (e < 1) throw DomainError("ring: root order e must be >= 1");
  if (modulus < 0 || modulus == 1) throw DomainError("ring: modulus must be 0 or >= 2");
  auto impl = std::make_shared<Impl>();
  impl->desc.e = e;
  impl->desc.min_poly = cyclotomic_polynomial(e);
  impl->desc.d = static_cast<int>(impl->desc.min_poly.size()) - 1;
  impl->desc.modulus = modulus;

  const auto d = static_cast<std::size_t>(impl->desc.d);
  const auto& phi = impl->desc.min_poly;
  const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(e), 2 * d - 1);
  std::vector<Wide> cur(d, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Coeff> entry(d);
    for (std::size_t j = 0; j < d; ++j) entry[j] = canon(cur[j], modulus);
    impl->zeta_table.push_back(std::move(entry));
    // multiply by zeta: shift up, fold x^d back with the monic minimal polynomial
    const Wide top = cur[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (std::size_t j = 0; j < d; ++j) cur[j] -= top * phi[j];
    if (modulus != 0) {
      for (auto& c : cur) c = zmod::reduce(c, modulus);
    }
  }
  impl_ = std::move(impl);
}

const RingDescriptor& Ring::descriptor() const noexcept { return impl_->desc; }

Ring Ring::with_modulus(Coeff modulus) const { return Ring(order(), modulus); }

Element Ring::zero() const { return Element(std::vector<Coeff>(static_cast<std::size_t>(degree()), 0)); }

Element Ring::one() const { return embed_integer(1); }

Element Ring::embed_integer(Coeff n) const {
  std::vector<Coeff> c(static_cast<std::size_t>(degree()), 0);
  c[0] = canon(n, modulus());
  return Element(std::move(c));
}

Element Ring::zeta_power(std::int64_t k) const {
  const std::int64_t e = order();
  const auto idx = static_cast<std::size_t>(((k % e) + e) % e);
  return Element(impl_->zeta_table[idx]);
}

Element Ring::from_coeffs(std::span<const Coeff> coeffs) const {
  const auto d = static_cast<std::size_t>(degree());
  const Coeff m = modulus();
  std::vector<Wide> acc(d, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& z = impl_->zeta_table[k % static_cast<std::size_t>(order())];
    for (std::size_t j = 0; j < d; ++j) {
      acc[j] += static_cast<Wide>(coeffs[k]) * z[j];
      if (m != 0) acc[j] %= m;
    }
  }
  std::vector<Coeff> out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = canon(acc[j], m);
  return Element(std::move(out));
}

Element Ring::lift(const Element& a) const { return from_coeffs(a.coeffs()); }

void Ring::check(const Element& a) const {
  if (a.size() != static_cast<std::size_t>(degree())) {
    throw DomainError("element has " + std::to_string(a.size()) + " coefficients, ring degree is " +
                      std::to_string(degree()));
  }
  if (is_quotient()) {
    for (Coeff c : a.coeffs()) {
      if (c < 0 || c >= modulus()) throw DomainError("element is not in canonical form");
    }
  }
}

Element Ring::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<Coeff> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = canon(static_cast<Wide>(a[k]) + b[k], modulus());
  return Element(std::move(out));
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::neg(const Element& a) const {
  check(a);
  std::vector<Coeff> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = canon(-static_cast<Wide>(a[k]), modulus());
  return Element(std::move(out));
}

Element Ring::scale(Coeff k, const Element& a) const {
  check(a);
  std::vector<Coeff> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = canon(static_cast<Wide>(k) * a[j], modulus());
  return Element(std::move(out));
}

Element Ring::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  const auto d = static_cast<std::size_t>(degree());
  const Coeff m = modulus();
  std::vector<Wide> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += static_cast<Wide>(a[i]) * b[j];
  }
  if (m != 0) {
    for (auto& c : prod) c %= m;
  }
  std::vector<Wide> low(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& z = impl_->zeta_table[k];
    for (std::size_t j = 0; j < d; ++j) {
      low[j] += prod[k] * z[j];
      if (m != 0) low[j] %= m;
    }
  }
  std::vector<Coeff> out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = canon(low[j], m);
  return Element(std::move(out));
}

Element Ring::pow(const Element& a, std::uint64_t k) const {
  Element result = one();
  Element base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Element Ring::galois_apply(std::int64_t s, const Element& a) const {
  check(a);
  const std::int64_t e = order();
  const std::int64_t sr = ((s % e) + e) % e;
  if (std::gcd(sr, e) != 1) {
    throw InvalidAutomorphism("galois_apply: " + std::to_string(s) + " is not coprime to " + std::to_string(e));
  }
  const auto d = static_cast<std::size_t>(degree());
  std::vector<Wide> acc(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k] == 0) continue;
    const auto& z = impl_->zeta_table[static_cast<std::size_t>((sr * static_cast<std::int64_t>(k)) % e)];
    for (std::size_t j = 0; j < d; ++j) acc[j] += static_cast<Wide>(a[k]) * z[j];
  }
  std::vector<Coeff> out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = canon(acc[j], modulus());
  return Element(std::move(out));
}

zmod::Matrix Ring::multiplication_matrix(const Element& a) const {
  const auto d = static_cast<std::size_t>(degree());
  zmod::Matrix mat(d, zmod::Vector(d, 0));
  for (std::size_t k = 0; k < d; ++k) {
    const Element col = mul(a, Element(impl_->zeta_table[k]));
    for (std::size_t i = 0; i < d; ++i) mat[i][k] = col[i];
  }
  return mat;
}

bool Ring::is_unit(const Element& a) const {
  if (!is_quotient()) throw UnsupportedRing("is_unit requires a quotient ring (M > 0)");
  check(a);
  if (a.is_zero()) return false;
  {
    std::lock_guard lock(impl_->cache_mutex);
    if (auto it = impl_->unit_cache.find(a); it != impl_->unit_cache.end()) return it->second;
  }
  const Coeff det = zmod::determinant(multiplication_matrix(a), modulus());
  const bool unit = std::gcd(det, modulus()) == 1;
  std::lock_guard lock(impl_->cache_mutex);
  if (impl_->unit_cache.size() >= kUnitCacheLimit) impl_->unit_cache.clear();
  impl_->unit_cache.emplace(a, unit);
  return unit;
}

bool Ring::is_rational(const Element& a) const {
  check(a);
  return std::all_of(a.coeffs().begin() + 1, a.coeffs().end(), [](Coeff c) { return c == 0; });
}

bool Ring::is_rational_unit(const Element& a) const {
  if (!is_quotient()) throw UnsupportedRing("is_rational_unit requires a quotient ring (M > 0)");
  return is_rational(a) && std::gcd(a[0], modulus()) == 1;
}

Element Ring::invert(const Element& a) const {
  if (!is_quotient()) throw UnsupportedRing("invert requires a quotient ring (M > 0)");
  check(a);
  zmod::Vector rhs(static_cast<std::size_t>(degree()), 0);
  rhs[0] = 1;
  auto sol = zmod::solve_unimodular(multiplication_matrix(a), std::move(rhs), modulus());
  if (!sol) throw NotInvertible("element is not a unit modulo " + std::to_string(modulus()));
  return Element(std::move(*sol));
}

ElementRange Ring::elements() const {
  if (!is_quotient()) throw UnsupportedRing("element enumeration requires a quotient ring (M > 0)");
  return ElementRange(degree(), modulus());
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  for (auto& digit : digits_) {
    if (++digit < modulus_) {
      current_ = Element(digits_);
      return *this;
    }
    digit = 0;
  }
  done_ = true;
  return *this;
}

ElementRange::iterator ElementRange::begin() const {
  return iterator(std::vector<Coeff>(static_cast<std::size_t>(degree_), 0), modulus_, false);
}

std::uint64_t ElementRange::size() const {
  std::uint64_t total = 1;
  for (int k = 0; k < degree_; ++k) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(modulus_)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(modulus_);
  }
  return total;
}

}  // namespace charcong
