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

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "charcong/dirichlet.hpp"
#include "charcong/triplet.hpp"

namespace charcong {

/// A triplet over the character matrix of (N, M) plus the JSON-level
/// operation vocabulary shared by session scripts and the HTTP service.
///
/// Op objects are {"kind": ..., "args": [...]} with the elementary kinds of
/// OpKind, plus "pivot", "migrate", "normalize" and "undo" (no args).
class Workbench {
 public:
  Workbench(int N, Coeff M, PivotPolicy policy = PivotPolicy::any_unit);

  int N() const noexcept { return n_; }
  Coeff M() const noexcept { return m_; }
  PivotPolicy policy() const noexcept { return policy_; }
  const Ring& ring() const noexcept { return triplet_.ring(); }
  const Triplet& triplet() const noexcept { return triplet_; }
  Triplet& triplet() noexcept { return triplet_; }

  /// Applies one mutating op. Returns the reduction report for pivot,
  /// migrate and normalize, null otherwise.
  nlohmann::json apply(const nlohmann::json& op);

  /// check_kernel_vector followed by verify_congruence on success:
  /// {"in_kernel", "vector" (R*v or E*v), "full_period"}.
  nlohmann::json check(const nlohmann::json& coeffs) const;

  nlohmann::json snapshot() const;

  /// Replayable script {"N", "M", "policy", "log"} of the elementary ops so far.
  nlohmann::json export_script() const;

 private:
  int n_;
  Coeff m_;
  PivotPolicy policy_;
  Triplet triplet_;
};

bool is_mutating_kind(const std::string& kind);

struct ReplayResult {
  bool ok = true;                 // every invariant held and every expectation matched
  std::vector<nlohmann::json> steps;
  nlohmann::json final_snapshot;
};

/// Replays {"N", "M", ["policy"], "log": [op | {"kind": "check", "args": [coeffs],
/// ["expect": {"in_kernel": bool, "full_period": bool}]}]}, asserting
/// B*R = L*E after every mutating step. Writes one line per step to `trace`.
ReplayResult replay_session(const nlohmann::json& script, std::ostream* trace = nullptr);

}  // namespace charcong
