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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charcong/matrix.hpp"
#include "charcong/ring.hpp"

namespace charcong {

enum class OpKind { row_add, col_add, swap_rows, swap_cols, dilate_row, dilate_col };

std::string_view to_string(OpKind kind);
std::optional<OpKind> parse_op_kind(std::string_view name);

/// One elementary operation. Indices are 0-based.
///   row_add(i, j, a):  row i of E += a * row j
///   col_add(i, j, a):  column i of E += a * column j
///   swap_*(i, j):      exchange i and j
///   dilate_*(i, a):    scale row/column i by the unit a (j unused)
struct ElementaryOp {
  OpKind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  Element a;

  bool operator==(const ElementaryOp&) const = default;
};

/// Which entries the automatic pivot may use.
enum class PivotPolicy {
  any_unit,        // every unit of Z[zeta]/(M)
  rational_units,  // only rational integers coprime to M
};

std::string_view to_string(PivotPolicy policy);
std::optional<PivotPolicy> parse_pivot_policy(std::string_view name);

/// Shape of E read off its block structure [[I_r, 0, 0], [0, Q, 0], [0, 0, 0]].
struct ReductionReport {
  std::size_t pseudo_rank = 0;
  std::size_t guaranteed_kernel = 0;  // zero columns of E
  std::size_t q_rows = 0;
  std::size_t q_cols = 0;
  bool q_has_unit = false;  // pivot-eligible entry left in Q under the report's policy

  bool operator==(const ReductionReport&) const = default;
};

struct KernelCheck {
  bool in_kernel = false;
  /// R*v when v is in ker E (an explicit congruence vector), otherwise E*v.
  std::vector<Element> vector;
};

/// The invariant triplet (L, E, R) for a frozen matrix B over Z[zeta]/(M),
/// maintaining B*R = L*E under elementary operations on E.
///
/// Row operations on E are compensated by column operations on L, column
/// operations are mirrored on R. L and R stay invertible because every
/// operation is a transvection, a transposition or a unit dilation.
class Triplet {
 public:
  Triplet(Ring ring, Matrix b);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return b_.rows(); }
  std::size_t cols() const noexcept { return b_.cols(); }

  const Matrix& B() const noexcept { return b_; }
  const Matrix& L() const noexcept { return l_; }
  const Matrix& E() const noexcept { return e_; }
  const Matrix& R() const noexcept { return r_; }
  /// R^{-1}, maintained alongside R.
  const Matrix& R_inverse() const noexcept { return r_inv_; }

  const std::vector<ElementaryOp>& op_log() const noexcept { return log_; }

  void row_addition(std::size_t i, std::size_t j, const Element& a);
  void column_addition(std::size_t i, std::size_t j, const Element& a);
  void swap_rows(std::size_t i, std::size_t j);
  void swap_columns(std::size_t i, std::size_t j);
  void dilate_row(std::size_t i, const Element& a);
  void dilate_column(std::size_t i, const Element& a);

  /// Applies any elementary op (validated, logged).
  void apply(const ElementaryOp& op);

  /// Gaussian pivoting on unit entries. Scans row-major from (k, k) over
  /// rows >= k and columns >= k; the first eligible entry is moved to (k, k),
  /// scaled to 1 and its row and column are cleared. Returns the pivot count.
  std::size_t pivot(PivotPolicy policy = PivotPolicy::any_unit);

  /// Moves zero rows to the bottom and zero columns to the right, keeping
  /// the relative order of nonzero rows and columns.
  void migrate_zeros();

  ReductionReport normalize(PivotPolicy policy = PivotPolicy::any_unit);

  ReductionReport report(PivotPolicy policy = PivotPolicy::any_unit) const;

  bool assert_invariant() const;

  KernelCheck check_kernel_vector(std::span<const Element> coeffs) const;

  /// Reverts the last logged operation.
  void undo();

  /// Overwrites one entry of E without compensation; for invariant tests only.
  void corrupt_entry_for_testing(std::size_t i, std::size_t j, const Element& value);

  bool pivot_eligible(const Element& a, PivotPolicy policy) const;

 private:
  void validate(const ElementaryOp& op) const;
  void perform(const ElementaryOp& op);

  Ring ring_;
  Matrix b_;
  Matrix l_;
  Matrix e_;
  Matrix r_;
  Matrix r_inv_;
  std::vector<ElementaryOp> log_;
};

}  // namespace charcong
