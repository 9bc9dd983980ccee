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

#include "charcong/triplet.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "charcong/error.hpp"

namespace charcong {

namespace {

constexpr std::array<std::string_view, 6> kOpNames = {"row_add",  "col_add",    "swap_rows",
                                                      "swap_cols", "dilate_row", "dilate_col"};

bool is_row_op(OpKind k) { return k == OpKind::row_add || k == OpKind::swap_rows || k == OpKind::dilate_row; }

bool is_binary(OpKind k) { return k != OpKind::dilate_row && k != OpKind::dilate_col; }

}  // namespace

std::string_view to_string(OpKind kind) { return kOpNames[static_cast<std::size_t>(kind)]; }

std::optional<OpKind> parse_op_kind(std::string_view name) {
  for (std::size_t k = 0; k < kOpNames.size(); ++k) {
    if (kOpNames[k] == name) return static_cast<OpKind>(k);
  }
  return std::nullopt;
}

std::string_view to_string(PivotPolicy policy) {
  return policy == PivotPolicy::any_unit ? "any_unit" : "rational_units";
}

std::optional<PivotPolicy> parse_pivot_policy(std::string_view name) {
  if (name == "any_unit" || name == "any") return PivotPolicy::any_unit;
  if (name == "rational_units" || name == "rational") return PivotPolicy::rational_units;
  return std::nullopt;
}

Triplet::Triplet(Ring ring, Matrix b)
    : ring_(std::move(ring)),
      b_(std::move(b)),
      l_(Matrix::identity(ring_, b_.rows())),
      e_(b_),
      r_(Matrix::identity(ring_, b_.cols())),
      r_inv_(r_) {
  if (!ring_.is_quotient()) throw DomainError("triplet: B must live over a quotient ring (M >= 2)");
  for (std::size_t i = 0; i < b_.rows(); ++i) {
    for (const auto& a : b_.row(i)) ring_.check(a);
  }
}

void Triplet::validate(const ElementaryOp& op) const {
  const std::size_t bound = is_row_op(op.kind) ? rows() : cols();
  const auto name = std::string(to_string(op.kind));
  if (op.i >= bound || (is_binary(op.kind) && op.j >= bound)) {
    throw InvalidOperation("bad_index", name + ": index out of range (bound " + std::to_string(bound) + ")");
  }
  if (is_binary(op.kind) && op.i == op.j) {
    throw InvalidOperation("same_index", name + ": indices must be distinct");
  }
  if (op.kind == OpKind::row_add || op.kind == OpKind::col_add || !is_binary(op.kind)) {
    try {
      ring_.check(op.a);
    } catch (const DomainError& err) {
      throw InvalidOperation("bad_coefficient", name + ": " + err.what());
    }
  }
  if (!is_binary(op.kind) && !ring_.is_unit(op.a)) {
    throw InvalidOperation("non_unit", name + ": coefficient is not a unit modulo " + std::to_string(ring_.modulus()));
  }
}

void Triplet::perform(const ElementaryOp& op) {
  const Ring& R = ring_;
  switch (op.kind) {
    case OpKind::row_add: {
      // E <- T_ij(a) E,  L <- L T_ij(-a)
      for (std::size_t c = 0; c < cols(); ++c) e_.at(op.i, c) = R.add(e_.at(op.i, c), R.mul(op.a, e_.at(op.j, c)));
      for (std::size_t r = 0; r < rows(); ++r) l_.at(r, op.j) = R.sub(l_.at(r, op.j), R.mul(op.a, l_.at(r, op.i)));
      break;
    }
    case OpKind::col_add: {
      for (std::size_t r = 0; r < rows(); ++r) e_.at(r, op.i) = R.add(e_.at(r, op.i), R.mul(op.a, e_.at(r, op.j)));
      for (std::size_t r = 0; r < cols(); ++r) r_.at(r, op.i) = R.add(r_.at(r, op.i), R.mul(op.a, r_.at(r, op.j)));
      for (std::size_t c = 0; c < cols(); ++c) {
        r_inv_.at(op.j, c) = R.sub(r_inv_.at(op.j, c), R.mul(op.a, r_inv_.at(op.i, c)));
      }
      break;
    }
    case OpKind::swap_rows:
      e_.swap_rows(op.i, op.j);
      l_.swap_cols(op.i, op.j);
      break;
    case OpKind::swap_cols:
      e_.swap_cols(op.i, op.j);
      r_.swap_cols(op.i, op.j);
      r_inv_.swap_rows(op.i, op.j);
      break;
    case OpKind::dilate_row: {
      const Element inv = R.invert(op.a);
      for (std::size_t c = 0; c < cols(); ++c) e_.at(op.i, c) = R.mul(op.a, e_.at(op.i, c));
      for (std::size_t r = 0; r < rows(); ++r) l_.at(r, op.i) = R.mul(l_.at(r, op.i), inv);
      break;
    }
    case OpKind::dilate_col: {
      const Element inv = R.invert(op.a);
      for (std::size_t r = 0; r < rows(); ++r) e_.at(r, op.i) = R.mul(e_.at(r, op.i), op.a);
      for (std::size_t r = 0; r < cols(); ++r) r_.at(r, op.i) = R.mul(r_.at(r, op.i), op.a);
      for (std::size_t c = 0; c < cols(); ++c) r_inv_.at(op.i, c) = R.mul(inv, r_inv_.at(op.i, c));
      break;
    }
  }
}

void Triplet::apply(const ElementaryOp& op) {
  validate(op);
  perform(op);
  log_.push_back(op);
}

void Triplet::row_addition(std::size_t i, std::size_t j, const Element& a) { apply({OpKind::row_add, i, j, a}); }

void Triplet::column_addition(std::size_t i, std::size_t j, const Element& a) { apply({OpKind::col_add, i, j, a}); }

void Triplet::swap_rows(std::size_t i, std::size_t j) { apply({OpKind::swap_rows, i, j, ring_.zero()}); }

void Triplet::swap_columns(std::size_t i, std::size_t j) { apply({OpKind::swap_cols, i, j, ring_.zero()}); }

void Triplet::dilate_row(std::size_t i, const Element& a) { apply({OpKind::dilate_row, i, 0, a}); }

void Triplet::dilate_column(std::size_t i, const Element& a) { apply({OpKind::dilate_col, i, 0, a}); }

bool Triplet::pivot_eligible(const Element& a, PivotPolicy policy) const {
  if (a.is_zero()) return false;
  return policy == PivotPolicy::any_unit ? ring_.is_unit(a) : ring_.is_rational_unit(a);
}

std::size_t Triplet::pivot(PivotPolicy policy) {
  const std::size_t limit = std::min(rows(), cols());
  std::size_t k = 0;
  for (; k < limit; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t l = k; l < rows() && !found; ++l) {
      for (std::size_t c = k; c < cols(); ++c) {
        if (pivot_eligible(e_.at(l, c), policy)) {
          found = {l, c};
          break;
        }
      }
    }
    if (!found) break;
    const auto [l, c] = *found;
    if (l != k) swap_rows(l, k);
    if (c != k) swap_columns(c, k);
    if (e_.at(k, k) != ring_.one()) dilate_row(k, ring_.invert(e_.at(k, k)));
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i != k && !e_.at(i, k).is_zero()) row_addition(i, k, ring_.neg(e_.at(i, k)));
    }
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j != k && !e_.at(k, j).is_zero()) column_addition(j, k, ring_.neg(e_.at(k, j)));
    }
  }
  return k;
}

void Triplet::migrate_zeros() {
  std::size_t target = 0;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (e_.row_is_zero(i)) continue;
    if (i != target) swap_rows(i, target);
    ++target;
  }
  target = 0;
  for (std::size_t j = 0; j < cols(); ++j) {
    if (e_.col_is_zero(j)) continue;
    if (j != target) swap_columns(j, target);
    ++target;
  }
}

ReductionReport Triplet::normalize(PivotPolicy policy) {
  pivot(policy);
  migrate_zeros();
  return report(policy);
}

ReductionReport Triplet::report(PivotPolicy policy) const {
  ReductionReport rep;
  const std::size_t limit = std::min(rows(), cols());
  const Element one = ring_.one();
  std::size_t r = 0;
  for (; r < limit; ++r) {
    if (e_.at(r, r) != one) break;
    bool clean = true;
    for (std::size_t j = 0; j < cols() && clean; ++j) clean = j == r || e_.at(r, j).is_zero();
    for (std::size_t i = 0; i < rows() && clean; ++i) clean = i == r || e_.at(i, r).is_zero();
    if (!clean) break;
  }
  rep.pseudo_rank = r;

  std::size_t last_row = r;
  for (std::size_t i = r; i < rows(); ++i) {
    if (!e_.row_is_zero(i)) last_row = i + 1;
  }
  std::size_t last_col = r;
  for (std::size_t j = r; j < cols(); ++j) {
    if (!e_.col_is_zero(j)) last_col = j + 1;
  }
  rep.q_rows = last_row - r;
  rep.q_cols = last_col - r;
  for (std::size_t j = 0; j < cols(); ++j) {
    if (e_.col_is_zero(j)) ++rep.guaranteed_kernel;
  }
  for (std::size_t i = r; i < last_row && !rep.q_has_unit; ++i) {
    for (std::size_t j = r; j < last_col; ++j) {
      if (pivot_eligible(e_.at(i, j), policy)) {
        rep.q_has_unit = true;
        break;
      }
    }
  }
  return rep;
}

bool Triplet::assert_invariant() const { return multiply(ring_, b_, r_) == multiply(ring_, l_, e_); }

KernelCheck Triplet::check_kernel_vector(std::span<const Element> coeffs) const {
  if (coeffs.size() != cols()) {
    throw DomainError("check_kernel_vector: expected " + std::to_string(cols()) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  }
  for (const auto& a : coeffs) ring_.check(a);
  auto image = multiply(ring_, e_, coeffs);
  const bool in_kernel = std::all_of(image.begin(), image.end(), [](const Element& a) { return a.is_zero(); });
  if (!in_kernel) return {false, std::move(image)};
  return {true, multiply(ring_, r_, coeffs)};
}

void Triplet::undo() {
  if (log_.empty()) throw NothingToUndo();
  ElementaryOp inverse = log_.back();
  switch (inverse.kind) {
    case OpKind::row_add:
    case OpKind::col_add:
      inverse.a = ring_.neg(inverse.a);
      break;
    case OpKind::dilate_row:
    case OpKind::dilate_col:
      inverse.a = ring_.invert(inverse.a);
      break;
    case OpKind::swap_rows:
    case OpKind::swap_cols:
      break;
  }
  perform(inverse);
  log_.pop_back();
}

void Triplet::corrupt_entry_for_testing(std::size_t i, std::size_t j, const Element& value) { e_.at(i, j) = value; }

}  // namespace charcong
