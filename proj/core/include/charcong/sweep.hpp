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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "charcong/triplet.hpp"

namespace charcong {

struct SweepRecord {
  int N = 0;
  Coeff M = 0;
  int e = 0;
  int d = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t pseudo_rank = 0;
  std::size_t guaranteed_kernel = 0;
  std::size_t q_rows = 0;
  std::size_t q_cols = 0;
  double elapsed_ms = 0.0;

  /// Equality on everything except timing.
  bool same_result(const SweepRecord& other) const;
};

/// Inclusive integer range [lo, hi].
struct IntRange {
  std::int64_t lo = 2;
  std::int64_t hi = 2;
};

struct SweepOptions {
  PivotPolicy policy = PivotPolicy::any_unit;
  unsigned threads = 1;
  /// When set, records are appended to this CSV as they finish and pairs
  /// already present in it are loaded instead of recomputed.
  std::optional<std::filesystem::path> csv_path;
};

/// new_triplet(character_matrix(N) mod M) followed by normalize().
SweepRecord reduce_pair(int N, Coeff M, PivotPolicy policy = PivotPolicy::any_unit);

/// One record per (N, M), ordered by N then M.
std::vector<SweepRecord> run_sweep(IntRange n_range, IntRange m_range, const SweepOptions& options = {});

struct Histograms {
  std::size_t total = 0;
  std::size_t full_rank = 0;                              // pseudo_rank == n
  std::map<std::size_t, std::size_t> pseudo_rank;         // over pairs with pseudo_rank < n
  std::map<std::size_t, std::size_t> guaranteed_kernel;   // over pairs with pseudo_rank < n
};

Histograms histograms(std::span<const SweepRecord> records);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const SweepRecord& r);
std::vector<SweepRecord> read_csv(std::istream& is);

}  // namespace charcong
