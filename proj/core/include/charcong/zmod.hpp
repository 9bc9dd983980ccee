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

// Dense linear algebra over Z/MZ for arbitrary (composite) M.
//
// Every elimination here uses determinant-one integer row transforms
// [s t; -b/g a/g] built from extended gcds, so no division by zero
// divisors ever happens and determinants are preserved exactly mod M.

#include <cstdint>
#include <optional>
#include <vector>

#include "charcong/cyclotomic.hpp"

namespace charcong::zmod {

/// Row-major matrix with entries in [0, M).
using Matrix = std::vector<std::vector<Coeff>>;
using Vector = std::vector<Coeff>;

Coeff reduce(Wide x, Coeff modulus);

/// Multiplicative inverse of a mod M, if gcd(a, M) = 1.
std::optional<Coeff> inverse(Coeff a, Coeff modulus);

/// Determinant of a square matrix, reduced into [0, M).
Coeff determinant(Matrix a, Coeff modulus);

/// Solves a x = b for square a whose determinant is a unit mod M.
/// Returns nullopt when det(a) is not a unit.
std::optional<Vector> solve_unimodular(Matrix a, Vector b, Coeff modulus);

/// Generators (over Z/M) of the right kernel {x : a x = 0 mod M}.
/// `cols` is the number of unknowns; needed when `a` has no rows.
std::vector<Vector> kernel_generators(const Matrix& a, std::size_t cols, Coeff modulus);

}  // namespace charcong::zmod
