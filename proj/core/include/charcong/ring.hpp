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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <span>
#include <vector>

#include "charcong/cyclotomic.hpp"
#include "charcong/zmod.hpp"

namespace charcong {

/// The ambient ring Z[zeta_e], optionally reduced modulo M (M = 0 means no quotient).
struct RingDescriptor {
  int e = 1;
  int d = 1;
  IntPoly min_poly;
  Coeff modulus = 0;

  bool operator==(const RingDescriptor&) const = default;
};

/// Element of Z[zeta_e] or Z[zeta_e]/(M) in the power basis 1, zeta, ..., zeta^(d-1).
///
/// Elements are plain values; the Ring that produced them does the arithmetic.
/// Canonical form (coefficients in [0, M) for quotient rings) is unique, so
/// equality is coefficientwise.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Coeff operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const noexcept;

  bool operator==(const Element&) const = default;
  auto operator<=>(const Element&) const = default;

 private:
  std::vector<Coeff> coeffs_;
};

struct ElementHash {
  std::size_t operator()(const Element& a) const noexcept;
};

class ElementRange;

class Ring {
 public:
  /// Z[zeta_e] when modulus == 0, Z[zeta_e]/(modulus) otherwise (modulus >= 2).
  Ring(int e, Coeff modulus);

  const RingDescriptor& descriptor() const noexcept;
  int order() const noexcept { return descriptor().e; }
  int degree() const noexcept { return descriptor().d; }
  Coeff modulus() const noexcept { return descriptor().modulus; }
  bool is_quotient() const noexcept { return modulus() != 0; }

  /// Same cyclotomic ring with a different modulus.
  Ring with_modulus(Coeff modulus) const;

  Element zero() const;
  Element one() const;
  Element embed_integer(Coeff n) const;
  Element zeta_power(std::int64_t k) const;

  /// Canonicalizes an arbitrary-length coefficient list (reduces by Phi_e, then mod M).
  Element from_coeffs(std::span<const Coeff> coeffs) const;
  /// Maps an element of another ring with the same e into this one.
  Element lift(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(Coeff k, const Element& a) const;
  Element pow(const Element& a, std::uint64_t k) const;

  /// Applies zeta -> zeta^s; s must be coprime to e.
  Element galois_apply(std::int64_t s, const Element& a) const;

  /// d x d integer matrix of x -> a*x in the power basis (column k = a*zeta^k).
  zmod::Matrix multiplication_matrix(const Element& a) const;

  /// Invertibility in Z[zeta_e]/(M): gcd(det(multiplication matrix), M) = 1.
  bool is_unit(const Element& a) const;
  /// True iff a is a rational integer coprime to M.
  bool is_rational_unit(const Element& a) const;
  Element invert(const Element& a) const;

  bool is_rational(const Element& a) const;

  /// All M^d elements in canonical form; coefficient 0 varies fastest.
  ElementRange elements() const;

  /// Throws DomainError unless a has this ring's length and canonical coefficients.
  void check(const Element& a) const;

  bool operator==(const Ring& other) const { return descriptor() == other.descriptor(); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Forward range over every element of a finite quotient ring.
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = const Element&;

    iterator() = default;
    iterator(std::vector<Coeff> digits, Coeff modulus, bool done)
        : current_(digits), digits_(std::move(digits)), modulus_(modulus), done_(done) {}

    const Element& operator*() const { return current_; }
    const Element* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const {
      return done_ == other.done_ && (done_ || digits_ == other.digits_);
    }

   private:
    Element current_;
    std::vector<Coeff> digits_;
    Coeff modulus_ = 0;
    bool done_ = true;
  };

  ElementRange(int degree, Coeff modulus) : degree_(degree), modulus_(modulus) {}
  iterator begin() const;
  iterator end() const { return {}; }
  /// M^d, saturating at UINT64_MAX.
  std::uint64_t size() const;

 private:
  int degree_;
  Coeff modulus_;
};

}  // namespace charcong
