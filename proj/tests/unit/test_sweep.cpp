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

#include "charcong/sweep.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "charcong/error.hpp"

namespace charcong {
namespace {

std::filesystem::path temp_csv(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("charcong_" + name + ".csv");
  std::filesystem::remove(p);
  return p;
}

void expect_same(const std::vector<SweepRecord>& a, const std::vector<SweepRecord>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_TRUE(a[k].same_result(b[k])) << "N=" << a[k].N << " M=" << a[k].M;
}

TEST(Sweep, RecordFields) {
  const auto r = reduce_pair(5, 16);
  EXPECT_EQ(r.N, 5);
  EXPECT_EQ(r.M, 16);
  EXPECT_EQ(r.e, 4);
  EXPECT_EQ(r.d, 2);
  EXPECT_EQ(r.m, 5u);
  EXPECT_EQ(r.n, 4u);
  EXPECT_EQ(r.pseudo_rank + r.q_cols + r.guaranteed_kernel, r.n);
}

TEST(Sweep, OrderedAndDeterministicAcrossThreadCounts) {
  const IntRange n{2, 12};
  const IntRange m{2, 12};
  const auto single = run_sweep(n, m, {PivotPolicy::any_unit, 1, std::nullopt});
  const auto pooled = run_sweep(n, m, {PivotPolicy::any_unit, 4, std::nullopt});
  ASSERT_EQ(single.size(), 121u);
  for (std::size_t k = 1; k < single.size(); ++k) {
    EXPECT_LT(std::make_pair(single[k - 1].N, single[k - 1].M), std::make_pair(single[k].N, single[k].M));
  }
  expect_same(single, pooled);
  expect_same(single, run_sweep(n, m, {PivotPolicy::any_unit, 1, std::nullopt}));
}

TEST(Sweep, ResumeFromPartialCsv) {
  const auto path = temp_csv("resume");
  const IntRange n{2, 10};
  const IntRange m{2, 10};
  const auto fresh = run_sweep(n, m);
  run_sweep(IntRange{2, 6}, m, {PivotPolicy::any_unit, 1, path});
  {
    std::ofstream torn(path, std::ios::app);
    torn << "7,2,6";  // interrupted write
  }
  const auto resumed = run_sweep(n, m, {PivotPolicy::any_unit, 2, path});
  expect_same(fresh, resumed);
  std::ifstream in(path);
  EXPECT_EQ(read_csv(in).size(), fresh.size());
  std::filesystem::remove(path);
}

TEST(Sweep, CsvRoundTrip) {
  const auto records = run_sweep(IntRange{2, 8}, IntRange{2, 5});
  std::stringstream ss;
  write_csv_header(ss);
  for (const auto& r : records) write_csv_row(ss, r);
  expect_same(read_csv(ss), records);
}

TEST(Sweep, HistogramTotalsAgree) {
  for (auto policy : {PivotPolicy::any_unit, PivotPolicy::rational_units}) {
    const auto records = run_sweep(IntRange{2, 20}, IntRange{2, 20}, {policy, 2, std::nullopt});
    const auto h = histograms(records);
    EXPECT_EQ(h.total, 361u);
    std::size_t rank_sum = 0;
    std::size_t kernel_sum = 0;
    for (const auto& [k, v] : h.pseudo_rank) rank_sum += v;
    for (const auto& [k, v] : h.guaranteed_kernel) kernel_sum += v;
    EXPECT_EQ(rank_sum, h.total - h.full_rank);
    EXPECT_EQ(kernel_sum, h.total - h.full_rank);
  }
}

TEST(Sweep, RejectsEmptyRanges) {
  EXPECT_THROW(run_sweep(IntRange{5, 4}, IntRange{2, 3}), DomainError);
  EXPECT_THROW(run_sweep(IntRange{1, 4}, IntRange{2, 3}), DomainError);
}

}  // namespace
}  // namespace charcong
