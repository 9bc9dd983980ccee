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

#include <string_view>
#include <vector>

#include <json.hpp>

#include "charcong/ring.hpp"

namespace charcong {

/// Parses a polynomial in the generator, e.g. "4*z - 4", "5(z+1)", "-zeta^3".
/// The generator may be written z, zeta, a (the quotient-ring name) or
/// zeta<e> matching the ring's root order. Whitespace is ignored; products
/// may be implicit. The result is canonicalized in `ring`.
Element parse_element(const Ring& ring, std::string_view text);

/// An element given as a JSON integer, a polynomial string, a bare
/// coefficient array, or {"coeffs": [...]}.
Element element_from_json(const Ring& ring, const nlohmann::json& j);

/// A vector of elements from a JSON array, or from bracketed text such as
/// "[0, 8, 0, 4*z-4]" that is not strict JSON.
std::vector<Element> parse_coefficient_list(const Ring& ring, std::string_view text);
std::vector<Element> coefficient_list_from_json(const Ring& ring, const nlohmann::json& j);

}  // namespace charcong
