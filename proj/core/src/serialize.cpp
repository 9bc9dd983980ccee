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

#include "charcong/serialize.hpp"

#include <sstream>

#include "charcong/error.hpp"
#include "charcong/parse.hpp"

namespace charcong {

json to_json(const Element& a) { return json{{"coeffs", std::vector<Coeff>(a.coeffs().begin(), a.coeffs().end())}}; }

json to_json(const RingDescriptor& desc) {
  return json{{"e", desc.e}, {"d", desc.d}, {"min_poly", desc.min_poly}, {"M", desc.modulus}};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& a : m.row(i)) row.push_back(to_json(a));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(std::span<const Element> v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(to_json(a));
  return out;
}

json to_json(const ReductionReport& rep) {
  return json{{"pseudo_rank", rep.pseudo_rank}, {"guaranteed_kernel", rep.guaranteed_kernel},
              {"q_rows", rep.q_rows},           {"q_cols", rep.q_cols},
              {"q_has_unit", rep.q_has_unit}};
}

json to_json(const ElementaryOp& op) {
  json args = json::array();
  switch (op.kind) {
    case OpKind::row_add:
    case OpKind::col_add:
      args = json::array({op.i, op.j, to_json(op.a)});
      break;
    case OpKind::swap_rows:
    case OpKind::swap_cols:
      args = json::array({op.i, op.j});
      break;
    case OpKind::dilate_row:
    case OpKind::dilate_col:
      args = json::array({op.i, to_json(op.a)});
      break;
  }
  return json{{"kind", to_string(op.kind)}, {"args", std::move(args)}};
}

json to_json(const DirichletCharacter& chi) { return json{{"modulus", chi.modulus()}, {"exponents", chi.exponents()}}; }

json to_json(const CharacterMatrix& cm) {
  json chars = json::array();
  for (const auto& chi : cm.characters) chars.push_back(to_json(chi));
  return json{{"N", cm.modulus},           {"e", cm.ring.order()},
              {"rows", cm.rows()},         {"cols", cm.cols()},
              {"characters", std::move(chars)}, {"entries", to_json(cm.entries)}};
}

json to_json(const SweepRecord& r) {
  return json{{"N", r.N},
              {"M", r.M},
              {"e", r.e},
              {"d", r.d},
              {"m", r.m},
              {"n", r.n},
              {"pseudo_rank", r.pseudo_rank},
              {"guaranteed_kernel", r.guaranteed_kernel},
              {"q_rows", r.q_rows},
              {"q_cols", r.q_cols},
              {"elapsed_ms", r.elapsed_ms}};
}

json snapshot(const Triplet& t, PivotPolicy policy) {
  json log = json::array();
  for (const auto& op : t.op_log()) log.push_back(to_json(op));
  json units = json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    json row = json::array();
    for (const auto& a : t.E().row(i)) row.push_back(t.pivot_eligible(a, policy));
    units.push_back(std::move(row));
  }
  return json{{"m", t.rows()},
              {"n", t.cols()},
              {"ring", to_json(t.ring().descriptor())},
              {"L", to_json(t.L())},
              {"E", to_json(t.E())},
              {"R", to_json(t.R())},
              {"report", to_json(t.report(policy))},
              {"log", std::move(log)},
              {"units", std::move(units)}};
}

Matrix matrix_from_json(const Ring& ring, const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix m = Matrix::zeros(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = element_from_json(ring, j.at(i).at(k));
  }
  return m;
}

ElementaryOp op_from_json(const Ring& ring, const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("op must be an object with a \"kind\"");
  const auto name = j.at("kind").get<std::string>();
  const auto kind = parse_op_kind(name);
  if (!kind) throw ParseError("unknown elementary op kind \"" + name + "\"");
  const json args = j.value("args", json::array());
  auto index = [&](std::size_t k) -> std::size_t {
    if (k >= args.size() || !args.at(k).is_number_integer()) {
      throw ParseError(name + ": argument " + std::to_string(k) + " must be an integer index");
    }
    const auto v = args.at(k).get<std::int64_t>();
    if (v < 0) throw InvalidOperation("bad_index", name + ": negative index");
    return static_cast<std::size_t>(v);
  };
  auto coefficient = [&](std::size_t k) {
    if (k >= args.size()) throw ParseError(name + ": missing coefficient argument");
    return element_from_json(ring, args.at(k));
  };
  switch (*kind) {
    case OpKind::row_add:
    case OpKind::col_add:
      if (args.size() != 3) throw ParseError(name + " takes [i, j, a]");
      return {*kind, index(0), index(1), coefficient(2)};
    case OpKind::swap_rows:
    case OpKind::swap_cols:
      if (args.size() != 2) throw ParseError(name + " takes [i, j]");
      return {*kind, index(0), index(1), ring.zero()};
    case OpKind::dilate_row:
    case OpKind::dilate_col:
      if (args.size() != 2) throw ParseError(name + " takes [i, a]");
      return {*kind, index(0), 0, coefficient(1)};
  }
  throw ParseError("unreachable op kind");
}

CharacterMatrix character_matrix_from_json(const json& j) {
  CharacterMatrix cm;
  cm.modulus = j.at("N").get<int>();
  const auto group = std::make_shared<const UnitGroupStructure>(unit_group_structure(cm.modulus));
  if (j.at("e").get<int>() != group->exponent) throw ParseError("matrix JSON: e does not match N");
  cm.ring = Ring(group->exponent, 0);
  for (const auto& c : j.at("characters")) cm.characters.emplace_back(group, c.at("exponents").get<std::vector<int>>());
  cm.entries = matrix_from_json(cm.ring, j.at("entries"));
  if (cm.entries.rows() != j.at("rows").get<std::size_t>() || cm.entries.cols() != j.at("cols").get<std::size_t>()) {
    throw ParseError("matrix JSON: dimensions disagree with entries");
  }
  return cm;
}

json kernel_report(int N, Coeff M, std::span<const Vec> generators) {
  json gens = json::array();
  json verdicts = json::array();
  for (const auto& g : generators) {
    gens.push_back(to_json(std::span<const Element>(g)));
    verdicts.push_back(verify_congruence(N, M, g).full_period);
  }
  return json{{"N", N}, {"M", M}, {"generators", std::move(gens)}, {"checked_full_period", std::move(verdicts)}};
}

Coeff balanced(Coeff c, Coeff modulus) {
  if (modulus == 0) return c;
  return c > modulus / 2 ? c - modulus : c;
}

std::string to_text(const Element& a, Coeff modulus) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Coeff c = balanced(a[k], modulus);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'z';
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace charcong
