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

// Ground-truth kernel computations over Z[zeta_e]/(M), independent of the
// triplet reduction: exhaustive enumeration and an exact "scalar lift" that
// replaces each entry by its d x d multiplication block over Z/M.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charcong/error.hpp"
#include "charcong/matrix.hpp"
#include "charcong/ring.hpp"
#include "charcong/zmod.hpp"

namespace charcong {

using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<Element>;

/// M^(d*n): the number of candidate vectors for exhaustive search.
BigInt search_space_size(Coeff modulus, int degree, std::size_t n);

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(BigInt required, std::uint64_t budget);
  const BigInt& required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

/// Every v with B*v = 0, in enumeration order (position 0 varies fastest,
/// each position follows Ring::elements()). Includes the zero vector.
std::vector<Vec> brute_force_kernel(const Ring& ring, const Matrix& b, std::uint64_t budget);

/// The (d*m) x (d*n) matrix over Z/M whose kernel is the kernel of B
/// read through the power-basis coordinates.
zmod::Matrix scalar_lift(const Ring& ring, const Matrix& b);

/// Generators over Z/M of ker B, canonical and deduplicated (zero omitted).
std::vector<Vec> scalar_lift_kernel(const Ring& ring, const Matrix& b);

bool kernel_membership(const Ring& ring, const Matrix& b, std::span<const Element> v);

/// All Z/M-linear combinations of the generators; throws BudgetExceeded
/// once more than `limit` distinct vectors appear.
std::vector<Vec> enumerate_span(const Ring& ring, std::span<const Vec> generators, std::size_t n,
                                std::uint64_t limit);

}  // namespace charcong
