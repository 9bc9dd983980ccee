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

#include <span>
#include <vector>

#include <json.hpp>

#include "charcong/dirichlet.hpp"
#include "charcong/kernel_oracle.hpp"
#include "charcong/matrix.hpp"
#include "charcong/ring.hpp"
#include "charcong/sweep.hpp"
#include "charcong/triplet.hpp"

namespace charcong {

using nlohmann::json;

json to_json(const Element& a);
json to_json(const RingDescriptor& desc);
json to_json(const Matrix& m);
json to_json(std::span<const Element> v);
json to_json(const ReductionReport& rep);
json to_json(const ElementaryOp& op);
json to_json(const DirichletCharacter& chi);
json to_json(const CharacterMatrix& cm);
json to_json(const SweepRecord& r);

/// {"m", "n", "ring", "L", "E", "R", "report", "log", "units"}; "units"
/// flags the pivot-eligible entries of E.
json snapshot(const Triplet& t, PivotPolicy policy = PivotPolicy::any_unit);

Matrix matrix_from_json(const Ring& ring, const json& j);
ElementaryOp op_from_json(const Ring& ring, const json& j);

/// Round trip for `matrix N --json`.
CharacterMatrix character_matrix_from_json(const json& j);

/// {"generators": [...], "checked_full_period": [...]} for a character matrix.
json kernel_report(int N, Coeff M, std::span<const Vec> generators);

/// Symmetric representative in (-M/2, M/2] for display.
Coeff balanced(Coeff c, Coeff modulus);
std::string to_text(const Element& a, Coeff modulus);

}  // namespace charcong
