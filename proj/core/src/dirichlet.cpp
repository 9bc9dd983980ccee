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

#include "charcong/dirichlet.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <numeric>
#include <string>

#include "charcong/cyclotomic.hpp"
#include "charcong/error.hpp"

namespace charcong {

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

int smallest_primitive_root(int prime, int prime_power) {
  const std::int64_t phi = prime_power / prime * (prime - 1);
  std::vector<std::int64_t> qs = prime_factors(phi);
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (int g = 2; g < prime_power; ++g) {
    if (g % prime == 0) continue;
    bool generates = true;
    for (auto q : qs) {
      if (pow_mod(g, phi / q, prime_power) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("no primitive root found");
}

// x = residue mod q, x = 1 mod (N / q)
int crt_lift(int residue, int q, int modulus) {
  const int other = modulus / q;
  for (int x = 0; x < modulus; ++x) {
    if (x % q == ((residue % q) + q) % q && x % other == 1 % other) return x;
  }
  throw std::logic_error("CRT lift failed");
}

// Lexicographic successor (last position fastest); false once the tuple wraps to zero.
bool next_tuple(std::vector<int>& tuple, const std::vector<int>& orders) {
  for (std::size_t pos = tuple.size(); pos-- > 0;) {
    if (++tuple[pos] < orders[pos]) return true;
    tuple[pos] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> UnitGroupStructure::discrete_log(std::int64_t x) const {
  const auto r = static_cast<std::size_t>(((x % modulus) + modulus) % modulus);
  return dlog_[r];
}

std::int64_t UnitGroupStructure::order() const {
  return std::accumulate(orders.begin(), orders.end(), std::int64_t{1}, std::multiplies<>());
}

UnitGroupStructure unit_group_structure(int modulus) {
  if (modulus < 2) throw DomainError("unit_group_structure: N must be >= 2");
  UnitGroupStructure g;
  g.modulus = modulus;

  std::map<int, int> factorization;
  for (auto p : prime_factors(modulus)) ++factorization[static_cast<int>(p)];
  for (const auto& [p, k] : factorization) {
    int q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (p == 2) {
      if (k == 2) {
        g.generators.push_back(crt_lift(3, q, modulus));
        g.orders.push_back(2);
      } else if (k >= 3) {
        g.generators.push_back(crt_lift(q - 1, q, modulus));
        g.orders.push_back(2);
        g.generators.push_back(crt_lift(5, q, modulus));
        g.orders.push_back(q / 4);
      }
    } else {
      g.generators.push_back(crt_lift(smallest_primitive_root(p, q), q, modulus));
      g.orders.push_back(q / p * (p - 1));
    }
  }
  g.exponent = std::accumulate(g.orders.begin(), g.orders.end(), 1,
                               [](int a, int b) { return static_cast<int>(std::lcm(a, b)); });

  // Discrete logs by enumerating every exponent tuple.
  g.dlog_.assign(static_cast<std::size_t>(modulus), std::nullopt);
  std::vector<int> tuple(g.orders.size(), 0);
  do {
    std::int64_t x = 1 % modulus;
    for (std::size_t i = 0; i < tuple.size(); ++i) x = x * pow_mod(g.generators[i], tuple[i], modulus) % modulus;
    auto& slot = g.dlog_[static_cast<std::size_t>(x)];
    if (slot) throw std::logic_error("generators are not independent");
    slot = tuple;
  } while (next_tuple(tuple, g.orders));
  return g;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<int> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->orders.size()) throw DomainError("character: wrong number of exponents");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] < 0 || exponents_[i] >= group_->orders[i]) throw DomainError("character: exponent out of range");
  }
}

bool DirichletCharacter::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int k) { return k == 0; });
}

std::optional<int> DirichletCharacter::zeta_exponent(std::int64_t x) const {
  const auto tuple = group_->discrete_log(x);
  if (!tuple) return std::nullopt;
  const int e = group_->exponent;
  std::int64_t k = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    k += static_cast<std::int64_t>(e / group_->orders[i]) * exponents_[i] * (*tuple)[i];
  }
  return static_cast<int>(k % e);
}

Element DirichletCharacter::evaluate(const Ring& ring, std::int64_t x) const {
  if (ring.order() != group_->exponent) {
    throw DomainError("evaluate: ring root order " + std::to_string(ring.order()) + " differs from group exponent " +
                      std::to_string(group_->exponent));
  }
  const auto k = zeta_exponent(x);
  return k ? ring.zeta_power(*k) : ring.zero();
}

DirichletCharacter DirichletCharacter::power(std::int64_t s) const {
  std::vector<int> ex(exponents_.size());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const std::int64_t o = group_->orders[i];
    ex[i] = static_cast<int>((((exponents_[i] * (s % o)) % o) + o) % o);
  }
  return DirichletCharacter(group_, std::move(ex));
}

std::vector<DirichletCharacter> characters(int modulus) {
  auto group = std::make_shared<const UnitGroupStructure>(unit_group_structure(modulus));
  std::vector<DirichletCharacter> out;
  std::vector<int> tuple(group->orders.size(), 0);
  do {
    out.emplace_back(group, tuple);
  } while (next_tuple(tuple, group->orders));
  return out;
}

Ring character_ring(int modulus, Coeff congruence_modulus) {
  if (modulus < 2) throw DomainError("character_ring: N must be >= 2");
  return Ring(unit_group_structure(modulus).exponent, congruence_modulus);
}

Matrix CharacterMatrix::reduced(Coeff congruence_modulus) const {
  if (congruence_modulus < 2) throw DomainError("congruence modulus M must be >= 2");
  return lift(ring.with_modulus(congruence_modulus), entries);
}

CharacterMatrix character_matrix(int modulus) {
  CharacterMatrix cm;
  cm.modulus = modulus;
  cm.characters = characters(modulus);
  cm.ring = Ring(cm.characters.front().group().exponent, 0);
  const auto n = cm.characters.size();
  const auto m = static_cast<std::size_t>(modulus);
  cm.entries = Matrix::zeros(cm.ring, m, n);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t j = 0; j < n; ++j) cm.entries.at(x, j) = cm.characters[j].evaluate(cm.ring, static_cast<std::int64_t>(x));
  }
  return cm;
}

CongruenceVerdict verify_congruence(int modulus, Coeff congruence_modulus, std::span<const Element> alpha) {
  if (congruence_modulus < 2) throw DomainError("verify_congruence: M must be >= 2");
  const auto chars = characters(modulus);
  if (alpha.size() != chars.size()) {
    throw DomainError("verify_congruence: expected " + std::to_string(chars.size()) + " coefficients, got " +
                      std::to_string(alpha.size()));
  }
  const Ring ring = Ring(chars.front().group().exponent, congruence_modulus);
  for (const auto& a : alpha) ring.check(a);

  CongruenceVerdict verdict;
  for (int x = 0; x < modulus; ++x) {
    Element sum = ring.zero();
    for (std::size_t j = 0; j < chars.size(); ++j) sum = ring.add(sum, ring.mul(alpha[j], chars[j].evaluate(ring, x)));
    if (!sum.is_zero()) verdict.failing_x.push_back(x);
  }
  verdict.full_period = verdict.failing_x.empty();
  verdict.matrix_rows = verdict.failing_x.empty() || verdict.failing_x.front() == modulus - 1;
  return verdict;
}

}  // namespace charcong
