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

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "charcong/dirichlet.hpp"
#include "charcong/error.hpp"

namespace charcong {

bool SweepRecord::same_result(const SweepRecord& o) const {
  return N == o.N && M == o.M && e == o.e && d == o.d && m == o.m && n == o.n && pseudo_rank == o.pseudo_rank &&
         guaranteed_kernel == o.guaranteed_kernel && q_rows == o.q_rows && q_cols == o.q_cols;
}

SweepRecord reduce_pair(int N, Coeff M, PivotPolicy policy) {
  const auto start = std::chrono::steady_clock::now();
  const auto cm = character_matrix(N);
  const Ring ring = cm.ring.with_modulus(M);
  Triplet triplet(ring, cm.reduced(M));
  const auto rep = triplet.normalize(policy);
  const auto stop = std::chrono::steady_clock::now();

  SweepRecord rec;
  rec.N = N;
  rec.M = M;
  rec.e = ring.order();
  rec.d = ring.degree();
  rec.m = cm.rows();
  rec.n = cm.cols();
  rec.pseudo_rank = rep.pseudo_rank;
  rec.guaranteed_kernel = rep.guaranteed_kernel;
  rec.q_rows = rep.q_rows;
  rec.q_cols = rep.q_cols;
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rec;
}

void write_csv_header(std::ostream& os) {
  os << "N,M,e,d,m,n,pseudo_rank,guaranteed_kernel,q_rows,q_cols,elapsed_ms\n";
}

void write_csv_row(std::ostream& os, const SweepRecord& r) {
  os << r.N << ',' << r.M << ',' << r.e << ',' << r.d << ',' << r.m << ',' << r.n << ',' << r.pseudo_rank << ','
     << r.guaranteed_kernel << ',' << r.q_rows << ',' << r.q_cols << ',' << std::fixed << std::setprecision(3)
     << r.elapsed_ms << '\n';
  os.unsetf(std::ios::floatfield);
}

std::vector<SweepRecord> read_csv(std::istream& is) {
  std::vector<SweepRecord> out;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("N,", 0) == 0) continue;
    }
    std::istringstream ls(line);
    SweepRecord r;
    char c = 0;
    if (!(ls >> r.N >> c >> r.M >> c >> r.e >> c >> r.d >> c >> r.m >> c >> r.n >> c >> r.pseudo_rank >> c >>
          r.guaranteed_kernel >> c >> r.q_rows >> c >> r.q_cols >> c >> r.elapsed_ms)) {
      // A torn final line from an interrupted run is dropped and recomputed.
      continue;
    }
    out.push_back(r);
  }
  return out;
}

std::vector<SweepRecord> run_sweep(IntRange n_range, IntRange m_range, const SweepOptions& options) {
  if (n_range.lo < 2 || m_range.lo < 2 || n_range.hi < n_range.lo || m_range.hi < m_range.lo) {
    throw DomainError("run_sweep: ranges must be nonempty with bounds >= 2");
  }
  std::vector<std::pair<int, Coeff>> pairs;
  for (auto N = n_range.lo; N <= n_range.hi; ++N) {
    for (auto M = m_range.lo; M <= m_range.hi; ++M) pairs.emplace_back(static_cast<int>(N), M);
  }

  std::map<std::pair<int, Coeff>, SweepRecord> done;
  std::ofstream csv;
  if (options.csv_path) {
    const bool exists = std::filesystem::exists(*options.csv_path);
    if (exists) {
      std::ifstream in(*options.csv_path);
      for (const auto& r : read_csv(in)) done.emplace(std::make_pair(r.N, r.M), r);
    }
    // Rewrite the surviving prefix so a torn line does not linger.
    csv.open(*options.csv_path, std::ios::trunc);
    if (!csv) throw Error("cannot open " + options.csv_path->string());
    write_csv_header(csv);
    for (const auto& [key, r] : done) write_csv_row(csv, r);
    csv.flush();
  }

  std::vector<std::pair<int, Coeff>> todo;
  for (const auto& p : pairs) {
    if (!done.count(p)) todo.push_back(p);
  }

  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= todo.size()) return;
      const auto rec = reduce_pair(todo[idx].first, todo[idx].second, options.policy);
      std::lock_guard lock(mutex);
      done.emplace(todo[idx], rec);
      if (csv.is_open()) {
        write_csv_row(csv, rec);
        csv.flush();
      }
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<SweepRecord> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(done.at(p));
  return out;
}

Histograms histograms(std::span<const SweepRecord> records) {
  Histograms h;
  h.total = records.size();
  for (const auto& r : records) {
    if (r.pseudo_rank == r.n) {
      ++h.full_rank;
      continue;
    }
    ++h.pseudo_rank[r.pseudo_rank];
    ++h.guaranteed_kernel[r.guaranteed_kernel];
  }
  return h;
}

}  // namespace charcong
