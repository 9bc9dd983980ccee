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

#include <gtest/gtest.h>

#include "charcong/error.hpp"
#include "charcong/kernel_oracle.hpp"
#include "generators.hpp"

namespace charcong {
namespace {

using testing::Rng;

Triplet character_triplet(int N, Coeff M) {
  const auto cm = character_matrix(N);
  return Triplet(cm.ring.with_modulus(M), cm.reduced(M));
}

Ring random_ring(Rng& rng) {
  static const int kOrders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  const int e = kOrders[testing::uniform(rng, 0, 7)];
  return Ring(e, testing::uniform(rng, 2, 20));
}

void expect_block_structure(const Triplet& t, const ReductionReport& rep, PivotPolicy policy) {
  const Ring& ring = t.ring();
  const std::size_t r = rep.pseudo_rank;
  EXPECT_EQ(r + rep.q_cols + rep.guaranteed_kernel, t.cols());
  EXPECT_FALSE(rep.q_has_unit);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const auto& a = t.E().at(i, j);
      const bool in_identity = i < r && j < r;
      const bool in_q = i >= r && i < r + rep.q_rows && j >= r && j < r + rep.q_cols;
      if (in_identity) {
        EXPECT_EQ(a, i == j ? ring.one() : ring.zero());
      } else if (in_q) {
        EXPECT_FALSE(t.pivot_eligible(a, policy)) << "unit left in Q at " << i << "," << j;
      } else {
        EXPECT_TRUE(a.is_zero()) << "nonzero outside the blocks at " << i << "," << j;
      }
    }
  }
  for (std::size_t i = r; i < r + rep.q_rows; ++i) EXPECT_FALSE(t.E().row_is_zero(i));
  for (std::size_t j = r; j < r + rep.q_cols; ++j) EXPECT_FALSE(t.E().col_is_zero(j));
}

TEST(Triplet, FreshTripletIsIdentityWrapped) {
  auto t = character_triplet(5, 16);
  EXPECT_EQ(t.E(), t.B());
  EXPECT_EQ(t.L(), Matrix::identity(t.ring(), 5));
  EXPECT_EQ(t.R(), Matrix::identity(t.ring(), 4));
  EXPECT_TRUE(t.assert_invariant());
}

TEST(Triplet, RandomOpSequencesPreserveInvariant) {
  Rng rng(testing::base_seed() + 10);
  for (int trial = 0; trial < 300; ++trial) {
    const Ring ring = random_ring(rng);
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    Triplet t(ring, testing::random_matrix(ring, rows, cols, rng));
    for (int step = 0; step < 20; ++step) {
      t.apply(testing::random_op(t, rng));
      ASSERT_TRUE(t.assert_invariant()) << "trial " << trial << " step " << step;
    }
    EXPECT_EQ(multiply(ring, t.R(), t.R_inverse()), Matrix::identity(ring, cols));
    EXPECT_TRUE(ring.is_unit(testing::leibniz_det(ring, t.L())));
    EXPECT_TRUE(ring.is_unit(testing::leibniz_det(ring, t.R())));
  }
}

TEST(Triplet, RandomOpsOnCharacterMatrices) {
  Rng rng(testing::base_seed() + 11);
  for (int N : {3, 4, 5, 7, 8, 12}) {
    for (Coeff M : {2, 6, 15, 16}) {
      auto t = character_triplet(N, M);
      for (int step = 0; step < 40; ++step) {
        t.apply(testing::random_op(t, rng));
        ASSERT_TRUE(t.assert_invariant()) << "N=" << N << " M=" << M;
      }
      t.normalize();
      ASSERT_TRUE(t.assert_invariant());
    }
  }
}

TEST(Triplet, UndoRestoresEveryPriorState) {
  Rng rng(testing::base_seed() + 12);
  for (int trial = 0; trial < 50; ++trial) {
    const Ring ring = random_ring(rng);
    Triplet t(ring, testing::random_matrix(ring, 4, 3, rng));
    std::vector<std::tuple<Matrix, Matrix, Matrix, Matrix>> history;
    for (int step = 0; step < 15; ++step) {
      history.emplace_back(t.L(), t.E(), t.R(), t.R_inverse());
      t.apply(testing::random_op(t, rng));
    }
    while (!history.empty()) {
      t.undo();
      EXPECT_EQ(std::make_tuple(t.L(), t.E(), t.R(), t.R_inverse()), history.back());
      history.pop_back();
    }
    EXPECT_TRUE(t.op_log().empty());
    EXPECT_THROW(t.undo(), NothingToUndo);
  }
}

TEST(Triplet, NormalizeBlockStructure) {
  for (PivotPolicy policy : {PivotPolicy::any_unit, PivotPolicy::rational_units}) {
    for (int N = 2; N <= 20; ++N) {
      for (Coeff M : {2, 3, 4, 8, 12, 16, 15}) {
        auto t = character_triplet(N, M);
        const auto rep = t.normalize(policy);
        ASSERT_TRUE(t.assert_invariant());
        SCOPED_TRACE("N=" + std::to_string(N) + " M=" + std::to_string(M) + " " + std::string(to_string(policy)));
        EXPECT_EQ(rep, t.report(policy));
        expect_block_structure(t, rep, policy);
      }
    }
  }
}

TEST(Triplet, ZeroColumnsOfEGiveKernelVectorsOfB) {
  for (int N = 2; N <= 20; ++N) {
    for (Coeff M : {2, 4, 6, 9, 16}) {
      auto t = character_triplet(N, M);
      t.normalize();
      const Ring& ring = t.ring();
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (!t.E().col_is_zero(j)) continue;
        std::vector<Element> basis(t.cols(), ring.zero());
        basis[j] = ring.one();
        const auto check = t.check_kernel_vector(basis);
        ASSERT_TRUE(check.in_kernel);
        EXPECT_TRUE(kernel_membership(ring, t.B(), check.vector)) << "N=" << N << " M=" << M;
        EXPECT_TRUE(verify_congruence(N, M, check.vector).matrix_rows);
      }
    }
  }
}

TEST(Triplet, CheckKernelVectorImpliesCongruence) {
  Rng rng(testing::base_seed() + 13);
  for (int N : {5, 7, 8, 9, 12}) {
    for (Coeff M : {4, 15, 16}) {
      auto t = character_triplet(N, M);
      t.normalize();
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<Element> v(t.cols());
        for (auto& a : v) a = testing::uniform(rng, 0, 2) ? t.ring().zero() : testing::random_element(t.ring(), rng);
        const auto check = t.check_kernel_vector(v);
        if (!check.in_kernel) {
          EXPECT_EQ(check.vector.size(), t.rows());
          continue;
        }
        EXPECT_TRUE(kernel_membership(t.ring(), t.B(), check.vector));
        EXPECT_TRUE(verify_congruence(N, M, check.vector).matrix_rows);
      }
    }
  }
}

TEST(Triplet, InvalidOperationsCarryReasons) {
  auto t = character_triplet(5, 16);
  const Ring& ring = t.ring();
  auto reason_of = [&](const ElementaryOp& op) -> std::string {
    try {
      t.apply(op);
    } catch (const InvalidOperation& ex) {
      return ex.reason();
    }
    return "accepted";
  };
  EXPECT_EQ(reason_of({OpKind::dilate_row, 1, 0, ring.embed_integer(2)}), "non_unit");
  EXPECT_EQ(reason_of({OpKind::dilate_col, 0, 0, ring.zero()}), "non_unit");
  EXPECT_EQ(reason_of({OpKind::row_add, 5, 0, ring.one()}), "bad_index");
  EXPECT_EQ(reason_of({OpKind::col_add, 0, 4, ring.one()}), "bad_index");
  EXPECT_EQ(reason_of({OpKind::swap_rows, 2, 2, ring.zero()}), "same_index");
  EXPECT_EQ(reason_of({OpKind::row_add, 1, 2, Element({1, 2, 3})}), "bad_coefficient");
  EXPECT_EQ(reason_of({OpKind::row_add, 1, 2, Element({16, 0})}), "bad_coefficient");
  EXPECT_TRUE(t.op_log().empty()) << "rejected ops must not be logged";
  EXPECT_EQ(reason_of({OpKind::dilate_row, 1, 0, ring.zeta_power(1)}), "accepted");
  EXPECT_EQ(t.op_log().size(), 1u);
  EXPECT_THROW(t.check_kernel_vector(std::vector<Element>(3, ring.zero())), DomainError);
}

TEST(Triplet, CorruptionIsDetected) {
  auto t = character_triplet(5, 16);
  t.normalize();
  ASSERT_TRUE(t.assert_invariant());
  t.corrupt_entry_for_testing(2, 2, t.ring().add(t.E().at(2, 2), t.ring().one()));
  EXPECT_FALSE(t.assert_invariant());
}

TEST(Triplet, EdgeCaseNEqualsTwo) {
  auto t = character_triplet(2, 5);
  EXPECT_EQ(t.rows(), 2u);
  EXPECT_EQ(t.cols(), 1u);
  const auto rep = t.normalize();
  EXPECT_EQ(rep.pseudo_rank, 1u);
  EXPECT_EQ(rep.guaranteed_kernel, 0u);
}

TEST(Triplet, PolicyNames) {
  EXPECT_EQ(parse_pivot_policy("any_unit"), PivotPolicy::any_unit);
  EXPECT_EQ(parse_pivot_policy("rational"), PivotPolicy::rational_units);
  EXPECT_FALSE(parse_pivot_policy("bogus").has_value());
  for (auto kind : {OpKind::row_add, OpKind::col_add, OpKind::swap_rows, OpKind::swap_cols, OpKind::dilate_row,
                    OpKind::dilate_col}) {
    EXPECT_EQ(parse_op_kind(to_string(kind)), kind);
  }
}

}  // namespace
}  // namespace charcong
