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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "charcong/matrix.hpp"
#include "charcong/ring.hpp"

namespace charcong {

/// CRT decomposition of (Z/NZ)^* into cyclic factors.
///
/// Odd prime powers use their smallest primitive root, the factor 4 uses 3,
/// and 2^k (k >= 3) uses {-1, 5} with orders {2, 2^(k-2)}. Generators are
/// lifted to Z/NZ so that they are 1 modulo every other prime-power factor.
struct UnitGroupStructure {
  int modulus = 0;
  std::vector<int> generators;
  std::vector<int> orders;
  int exponent = 1;  // lcm of orders; the root order e of all character values

  /// Exponent tuple of x against `generators`, or nullopt if gcd(x, N) > 1.
  std::optional<std::vector<int>> discrete_log(std::int64_t x) const;

  std::int64_t order() const;  // phi(N)

  // dlog_[x] for x in [0, N)
  std::vector<std::optional<std::vector<int>>> dlog_;
};

UnitGroupStructure unit_group_structure(int modulus);

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<int> exponents);

  int modulus() const noexcept { return group_->modulus; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  const UnitGroupStructure& group() const noexcept { return *group_; }

  bool is_trivial() const;

  /// chi(x) = zeta_e^k; returns k in [0, e), or nullopt when gcd(x, N) > 1.
  std::optional<int> zeta_exponent(std::int64_t x) const;

  /// chi(x) as an element of `ring`, whose root order must equal the group exponent.
  Element evaluate(const Ring& ring, std::int64_t x) const;

  /// chi^s (exponents scaled by s, reduced per factor).
  DirichletCharacter power(std::int64_t s) const;

  bool operator==(const DirichletCharacter& other) const {
    return modulus() == other.modulus() && exponents_ == other.exponents_;
  }

 private:
  std::shared_ptr<const UnitGroupStructure> group_;
  std::vector<int> exponents_;
};

/// All phi(N) characters, lexicographic on exponent tuples (trivial first).
std::vector<DirichletCharacter> characters(int modulus);

/// Z[zeta_e]/(M) for the character group mod N (M = 0 for Z[zeta_e]).
Ring character_ring(int modulus, Coeff congruence_modulus = 0);

/// Character values chi_j(x) for x = 0, ..., N-1 (rows) and the characters
/// in canonical order (columns), over Z[zeta_e].
struct CharacterMatrix {
  int modulus = 0;
  Ring ring{1, 0};
  std::vector<DirichletCharacter> characters;
  Matrix entries;

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }

  /// Image over Z[zeta_e]/(M).
  Matrix reduced(Coeff congruence_modulus) const;
};

CharacterMatrix character_matrix(int modulus);

struct CongruenceVerdict {
  bool full_period = false;  // every x in [0, N-1]
  bool matrix_rows = false;  // x in [0, N-2]
  std::vector<int> failing_x;
};

/// Checks sum_j alpha_j chi_j(x) == 0 mod M residue by residue.
/// `alpha` lives in character_ring(N, M) and follows the canonical character order.
CongruenceVerdict verify_congruence(int modulus, Coeff congruence_modulus, std::span<const Element> alpha);

}  // namespace charcong
