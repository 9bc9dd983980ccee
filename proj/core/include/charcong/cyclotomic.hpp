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
#include <vector>

namespace charcong {

using Coeff = std::int64_t;
/// Double-width accumulator for products of two reduced coefficients.
__extension__ typedef __int128 Wide;

/// Integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<Coeff>;

/// The e-th cyclotomic polynomial, monic of degree phi(e).
IntPoly cyclotomic_polynomial(int e);

std::int64_t euler_phi(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Prime factorization by trial division, primes ascending with multiplicity.
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace charcong
