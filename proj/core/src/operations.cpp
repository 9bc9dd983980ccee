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

#include "charcong/operations.hpp"

#include <ostream>

#include "charcong/error.hpp"
#include "charcong/parse.hpp"
#include "charcong/serialize.hpp"

namespace charcong {

using nlohmann::json;

namespace {

Triplet fresh_triplet(int N, Coeff M) {
  const auto cm = character_matrix(N);
  return Triplet(cm.ring.with_modulus(M), cm.reduced(M));
}

}  // namespace

Workbench::Workbench(int N, Coeff M, PivotPolicy policy)
    : n_(N), m_(M), policy_(policy), triplet_(fresh_triplet(N, M)) {}

bool is_mutating_kind(const std::string& kind) {
  return parse_op_kind(kind).has_value() || kind == "pivot" || kind == "migrate" || kind == "normalize" ||
         kind == "undo";
}

json Workbench::apply(const json& op) {
  if (!op.is_object() || !op.contains("kind") || !op.at("kind").is_string()) {
    throw ParseError("op must be an object with a string \"kind\"");
  }
  const auto kind = op.at("kind").get<std::string>();
  if (kind == "normalize") return to_json(triplet_.normalize(policy_));
  if (kind == "pivot") {
    triplet_.pivot(policy_);
    return to_json(triplet_.report(policy_));
  }
  if (kind == "migrate") {
    triplet_.migrate_zeros();
    return to_json(triplet_.report(policy_));
  }
  if (kind == "undo") {
    triplet_.undo();
    return nullptr;
  }
  triplet_.apply(op_from_json(ring(), op));
  return nullptr;
}

json Workbench::check(const json& coeffs) const {
  const auto v = coefficient_list_from_json(ring(), coeffs);
  const auto result = triplet_.check_kernel_vector(v);
  json out{{"in_kernel", result.in_kernel}, {"vector", to_json(std::span<const Element>(result.vector))}};
  out["full_period"] = result.in_kernel && verify_congruence(n_, m_, result.vector).full_period;
  return out;
}

json Workbench::snapshot() const {
  json s = charcong::snapshot(triplet_, policy_);
  s["N"] = n_;
  s["M"] = m_;
  s["policy"] = to_string(policy_);
  return s;
}

json Workbench::export_script() const {
  json log = json::array();
  for (const auto& op : triplet_.op_log()) log.push_back(to_json(op));
  return json{{"N", n_}, {"M", m_}, {"policy", to_string(policy_)}, {"log", std::move(log)}};
}

ReplayResult replay_session(const json& script, std::ostream* trace) {
  const int N = script.at("N").get<int>();
  const Coeff M = script.at("M").get<Coeff>();
  PivotPolicy policy = PivotPolicy::any_unit;
  if (script.contains("policy")) {
    const auto p = parse_pivot_policy(script.at("policy").get<std::string>());
    if (!p) throw ParseError("unknown pivot policy " + script.at("policy").dump());
    policy = *p;
  }
  Workbench bench(N, M, policy);
  ReplayResult result;

  std::size_t index = 0;
  for (const auto& step : script.at("log")) {
    const auto kind = step.at("kind").get<std::string>();
    json record{{"step", index}, {"kind", kind}};
    if (step.contains("args")) record["args"] = step.at("args");
    if (kind == "check") {
      const json& coeffs = step.contains("coeffs") ? step.at("coeffs") : step.at("args").at(0);
      json verdict = bench.check(coeffs);
      record["check"] = verdict;
      if (step.contains("expect")) {
        bool matched = true;
        for (const auto& [key, expected] : step.at("expect").items()) {
          if (verdict.value(key, json()) != expected) matched = false;
        }
        record["expectation_met"] = matched;
        result.ok = result.ok && matched;
      }
    } else if (is_mutating_kind(kind)) {
      json out = bench.apply(step);
      if (!out.is_null()) record["report"] = out;
      const bool invariant = bench.triplet().assert_invariant();
      record["invariant"] = invariant;
      result.ok = result.ok && invariant;
    } else {
      throw ParseError("unknown script step kind \"" + kind + "\"");
    }
    if (trace) *trace << record.dump() << '\n';
    result.steps.push_back(std::move(record));
    ++index;
  }
  result.final_snapshot = bench.snapshot();
  return result;
}

}  // namespace charcong
