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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charcong/dirichlet.hpp"
#include "charcong/error.hpp"
#include "charcong/kernel_oracle.hpp"
#include "charcong/operations.hpp"
#include "charcong/parse.hpp"
#include "charcong/serialize.hpp"
#include "charcong/sweep.hpp"
#include "charcong/triplet.hpp"

#ifdef CHARCONG_HAVE_SERVICE
#include "charcong/service.hpp"
#endif

namespace charcong::cli {

using nlohmann::json;

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline text, or the contents of the file it names.
std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

PivotPolicy policy_from(const std::string& name) {
  const auto p = parse_pivot_policy(name);
  if (!p) throw Error("unknown pivot policy \"" + name + "\" (any_unit | rational_units)");
  return *p;
}

void print_matrix(std::ostream& out, const Matrix& m, Coeff modulus, std::string_view row_label) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(to_text(m.at(i, j), modulus));
      width[j] = std::max(width[j], cells[i].back().size());
    }
  }
  const std::size_t label_width = std::to_string(m.rows() == 0 ? 0 : m.rows() - 1).size();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string label = std::to_string(i);
    out << row_label << label << std::string(label_width - label.size(), ' ') << " |";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << ' ' << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
    out << '\n';
  }
}

void print_report(std::ostream& out, const ReductionReport& r, std::size_t n) {
  out << "pseudo-rank " << r.pseudo_rank << " of " << n << ", guaranteed kernel " << r.guaranteed_kernel
      << ", Q block " << r.q_rows << 'x' << r.q_cols << (r.q_has_unit ? " (still holds a pivot)" : "") << '\n';
}

void print_vector(std::ostream& out, std::span<const Element> v, Coeff modulus) {
  out << '(';
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << to_text(v[k], modulus);
  out << ')';
}

std::string histogram_line(const std::map<std::size_t, std::size_t>& h) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : h) {
    os << (first ? "" : "  ") << k << ':' << v;
    first = false;
  }
  return os.str();
}

void write_report(const std::filesystem::path& path, const Histograms& h, std::string_view policy) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  auto table = [&](std::string_view title, const std::map<std::size_t, std::size_t>& data) {
    std::size_t peak = 1;
    for (const auto& [k, v] : data) peak = std::max(peak, v);
    out << "## " << title << "\n\n| value | count | |\n|---:|---:|:---|\n";
    for (const auto& [k, v] : data) {
      out << "| " << k << " | " << v << " | " << std::string((v * 40 + peak - 1) / peak, '#') << " |\n";
    }
    out << '\n';
  };
  out << "# Sweep report\n\n";
  out << "Policy `" << policy << "`: " << h.total << " pairs, " << h.full_rank << " full pseudo-rank, "
      << h.total - h.full_rank << " with pseudo-rank below n.\n\n";
  table("Pseudo-rank (pairs below full rank)", h.pseudo_rank);
  table("Guaranteed kernel dimension (pairs below full rank)", h.guaranteed_kernel);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
};

int cmd_matrix(Context& ctx, int N) {
  const auto cm = character_matrix(N);
  if (ctx.json_output) {
    ctx.out << to_json(cm).dump() << '\n';
    return kOk;
  }
  const auto& desc = cm.ring.descriptor();
  ctx.out << "character matrix for N=" << N << ": " << cm.rows() << "x" << cm.cols() << " over Z[z], z^" << desc.e
          << " = 1, degree " << desc.d << '\n';
  ctx.out << "columns:";
  for (const auto& chi : cm.characters) {
    ctx.out << " (";
    for (std::size_t k = 0; k < chi.exponents().size(); ++k) ctx.out << (k ? "," : "") << chi.exponents()[k];
    ctx.out << ')';
  }
  ctx.out << '\n';
  print_matrix(ctx.out, cm.entries, 0, "x=");
  return kOk;
}

int cmd_normalize(Context& ctx, int N, Coeff M, const std::string& policy_name) {
  Workbench bench(N, M, policy_from(policy_name));
  const auto report = bench.triplet().normalize(bench.policy());
  if (!bench.triplet().assert_invariant()) throw Error("invariant B*R = L*E violated after normalize");
  if (ctx.json_output) {
    ctx.out << bench.snapshot().dump() << '\n';
    return kOk;
  }
  ctx.out << "N=" << N << " M=" << M << " policy " << to_string(bench.policy()) << ", " << bench.triplet().op_log().size()
          << " elementary ops\n";
  print_report(ctx.out, report, bench.triplet().cols());
  ctx.out << "E:\n";
  print_matrix(ctx.out, bench.triplet().E(), M, "");
  return kOk;
}

int cmd_kernel(Context& ctx, int N, Coeff M) {
  const auto cm = character_matrix(N);
  const Ring ring = cm.ring.with_modulus(M);
  const auto gens = scalar_lift_kernel(ring, cm.reduced(M));
  const json report = kernel_report(N, M, gens);
  if (ctx.json_output) {
    ctx.out << report.dump() << '\n';
    return kOk;
  }
  ctx.out << gens.size() << " kernel generator" << (gens.size() == 1 ? "" : "s") << " over Z/" << M << '\n';
  for (std::size_t k = 0; k < gens.size(); ++k) {
    print_vector(ctx.out, gens[k], M);
    ctx.out << (report["checked_full_period"][k].get<bool>() ? "  full period" : "  FAILS full period") << '\n';
  }
  return kOk;
}

int cmd_brute(Context& ctx, int N, Coeff M, std::uint64_t budget) {
  const auto cm = character_matrix(N);
  const Ring ring = cm.ring.with_modulus(M);
  try {
    const auto kernel = brute_force_kernel(ring, cm.reduced(M), budget);
    if (ctx.json_output) {
      json vs = json::array();
      for (const auto& v : kernel) vs.push_back(to_json(std::span<const Element>(v)));
      ctx.out << json{{"N", N}, {"M", M}, {"size", kernel.size()}, {"kernel", std::move(vs)}}.dump() << '\n';
      return kOk;
    }
    ctx.out << "kernel has " << kernel.size() << " element" << (kernel.size() == 1 ? "" : "s") << '\n';
    for (const auto& v : kernel) {
      print_vector(ctx.out, v, M);
      ctx.out << '\n';
    }
    return kOk;
  } catch (const BudgetExceeded& ex) {
    if (ctx.json_output) {
      ctx.out << json{{"refused", true}, {"required", ex.required().str()}, {"budget", ex.budget()}}.dump() << '\n';
    }
    ctx.err << "refused: exhaustive search needs " << ex.required().str() << " candidates, budget is " << ex.budget()
            << '\n';
    return kBudgetRefused;
  }
}

int cmd_check(Context& ctx, int N, Coeff M, const std::string& coeffs_arg) {
  const Ring ring = character_ring(N, M);
  const auto alpha = parse_coefficient_list(ring, file_or_inline(coeffs_arg));
  const auto verdict = verify_congruence(N, M, alpha);
  if (ctx.json_output) {
    ctx.out << json{{"full_period", verdict.full_period},
                    {"matrix_rows", verdict.matrix_rows},
                    {"failing_x", verdict.failing_x}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "alpha = ";
    print_vector(ctx.out, alpha, M);
    ctx.out << "\nfull period (x in [0, " << N - 1 << "]): " << (verdict.full_period ? "yes" : "no")
            << "\nmatrix rows (x in [0, " << N - 2 << "]): " << (verdict.matrix_rows ? "yes" : "no") << '\n';
    if (!verdict.failing_x.empty()) {
      ctx.out << "failing x:";
      for (int x : verdict.failing_x) ctx.out << ' ' << x;
      ctx.out << '\n';
    }
  }
  return verdict.full_period ? kOk : kVerificationFailed;
}

int cmd_sweep(Context& ctx, const std::string& n_text, const std::string& m_text, const std::string& csv,
              const std::string& report, const std::string& policy_name, unsigned threads) {
  const auto n_range = parse_range(n_text);
  const auto m_range = parse_range(m_text);
  if (!n_range || n_range->lo < 2) throw Error("--n must be a range lo..hi with lo >= 2");
  if (!m_range || m_range->lo < 2) throw Error("--m must be a range lo..hi with lo >= 2");
  SweepOptions options;
  options.policy = policy_from(policy_name);
  options.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  if (!csv.empty()) options.csv_path = csv;

  const auto start = std::chrono::steady_clock::now();
  const auto records = run_sweep(*n_range, *m_range, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto h = histograms(records);
  if (!report.empty()) write_report(report, h, to_string(options.policy));

  if (ctx.json_output) {
    ctx.out << json{{"pairs", h.total},
                    {"policy", to_string(options.policy)},
                    {"full_rank", h.full_rank},
                    {"pseudo_rank", h.pseudo_rank},
                    {"guaranteed_kernel", h.guaranteed_kernel},
                    {"seconds", seconds}}
                   .dump()
            << '\n';
    return kOk;
  }
  ctx.out << h.total << " pairs (N " << n_range->lo << ".." << n_range->hi << ", M " << m_range->lo << ".."
          << m_range->hi << "), policy " << to_string(options.policy) << ", " << std::fixed << std::setprecision(2)
          << seconds << " s\n";
  ctx.out << "full pseudo-rank: " << h.full_rank << '\n';
  ctx.out << "below full rank: " << h.total - h.full_rank << '\n';
  ctx.out << "  pseudo-rank histogram:       " << histogram_line(h.pseudo_rank) << '\n';
  ctx.out << "  guaranteed-kernel histogram: " << histogram_line(h.guaranteed_kernel) << '\n';
  if (!csv.empty()) ctx.out << "records: " << csv << '\n';
  if (!report.empty()) ctx.out << "report: " << report << '\n';
  return kOk;
}

/// Renders a JSON element list as "(a, b, ...)" in balanced residues.
std::string vector_text(const json& v, Coeff modulus) {
  std::ostringstream os;
  std::vector<Element> elems;
  for (const auto& a : v) elems.emplace_back(a.at("coeffs").get<std::vector<Coeff>>());
  print_vector(os, elems, modulus);
  return os.str();
}

int cmd_replay(Context& ctx, const std::string& script_path) {
  const json script = json::parse(read_file(script_path));
  std::ostringstream trace;
  const auto result = replay_session(script, &trace);
  if (ctx.json_output) {
    ctx.out << json{{"ok", result.ok}, {"steps", result.steps}, {"snapshot", result.final_snapshot}}.dump() << '\n';
    return result.ok ? kOk : kVerificationFailed;
  }
  const Coeff modulus = script.at("M").get<Coeff>();
  for (const auto& step : result.steps) {
    ctx.out << '#' << step["step"].get<std::size_t>() << ' ' << step["kind"].get<std::string>();
    if (step.contains("args")) ctx.out << ' ' << step["args"].dump();
    if (step.contains("invariant")) ctx.out << (step["invariant"].get<bool>() ? "  invariant ok" : "  INVARIANT BROKEN");
    if (step.contains("check")) {
      const auto& c = step["check"];
      ctx.out << (c["in_kernel"].get<bool>() ? "  in ker E, R*v = " : "  not in ker E, E*v = ")
              << vector_text(c["vector"], modulus);
      if (c["in_kernel"].get<bool>()) ctx.out << (c["full_period"].get<bool>() ? ", full period" : ", fails full period");
    }
    if (step.contains("expectation_met")) ctx.out << (step["expectation_met"].get<bool>() ? "  [as expected]" : "  [UNEXPECTED]");
    ctx.out << '\n';
  }
  ctx.out << (result.ok ? "replay ok" : "replay FAILED") << '\n';
  return result.ok ? kOk : kVerificationFailed;
}

}  // namespace

std::optional<IntRange> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    if (!v) return std::nullopt;
    return IntRange{*v, *v};
  }
  const auto lo = parse_int(text.substr(0, dots));
  const auto hi = parse_int(text.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return IntRange{*lo, *hi};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"charcong: congruences among Dirichlet characters over Z[zeta]/(M)"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--json", ctx.json_output, "Machine-readable output");

  int N = 0;
  Coeff M = 0;
  std::string policy = "any_unit";
  auto add_nm = [&](CLI::App* sub) {
    sub->add_option("N", N, "Character modulus")->required()->check(CLI::Range(2, 100000));
  };
  auto add_m = [&](CLI::App* sub) {
    sub->add_option("M", M, "Congruence modulus")->required()->check(CLI::Range(Coeff{2}, Coeff{1} << 40));
  };

  auto* matrix = app.add_subcommand("matrix", "Print the character matrix of N");
  add_nm(matrix);
  matrix->add_flag("--json", ctx.json_output, "Machine-readable output");

  auto* normalize = app.add_subcommand("normalize", "Normalize the character matrix over Z[zeta]/(M)");
  add_nm(normalize);
  add_m(normalize);
  normalize->add_option("--policy", policy, "Pivot policy: any_unit | rational_units");
  normalize->add_flag("--json", ctx.json_output, "Machine-readable output");

  auto* kernel = app.add_subcommand("kernel", "Kernel generators via the scalar lift");
  add_nm(kernel);
  add_m(kernel);
  kernel->add_flag("--json", ctx.json_output, "Machine-readable output");

  std::uint64_t budget = 1'000'000;
  auto* brute = app.add_subcommand("brute", "Exhaustive kernel search under a budget");
  add_nm(brute);
  add_m(brute);
  brute->add_option("--budget", budget, "Largest search space to enumerate");
  brute->add_flag("--json", ctx.json_output, "Machine-readable output");

  std::string coeffs;
  auto* check = app.add_subcommand("check", "Verify a candidate congruence vector");
  add_nm(check);
  add_m(check);
  check->add_option("--coeffs", coeffs, "Coefficient list, inline or a file")->required();
  check->add_flag("--json", ctx.json_output, "Machine-readable output");

  std::string n_text = "2..20";
  std::string m_text = "2..20";
  std::string csv;
  std::string report;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Normalize every (N, M) pair in a grid");
  sweep->add_option("--n", n_text, "Range of N, lo..hi");
  sweep->add_option("--m", m_text, "Range of M, lo..hi");
  sweep->add_option("--out", csv, "CSV of records; existing rows are resumed");
  sweep->add_option("--report", report, "Markdown histogram report");
  sweep->add_option("--policy", policy, "Pivot policy: any_unit | rational_units");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
  sweep->add_flag("--json", ctx.json_output, "Machine-readable output");

  std::string script;
  auto* session = app.add_subcommand("session", "Session scripts");
  session->require_subcommand(1);
  auto* replay = session->add_subcommand("replay", "Replay an op log, asserting B*R = L*E after each step");
  replay->add_option("script", script, "Script JSON {N, M, log}")->required()->check(CLI::ExistingFile);
  replay->add_flag("--json", ctx.json_output, "Machine-readable output");

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string journal;
  std::string origin = "*";
  auto* serve = app.add_subcommand("serve", "Start the HTTP session service");
  serve->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--journal", journal, "JSON-lines session journal");
  serve->add_option("--origin", origin, "Allowed CORS origin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*matrix) return cmd_matrix(ctx, N);
    if (*normalize) return cmd_normalize(ctx, N, M, policy);
    if (*kernel) return cmd_kernel(ctx, N, M);
    if (*brute) return cmd_brute(ctx, N, M, budget);
    if (*check) return cmd_check(ctx, N, M, coeffs);
    if (*sweep) return cmd_sweep(ctx, n_text, m_text, csv, report, policy, threads);
    if (*replay) return cmd_replay(ctx, script);
    if (*serve) {
#ifdef CHARCONG_HAVE_SERVICE
      ServiceOptions options;
      if (!journal.empty()) options.journal = journal;
      options.allowed_origin = origin;
      SessionService service(options);
      return service.serve(host, port) ? kOk : kError;
#else
      err << "error: built without the session service\n";
      return kError;
#endif
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace charcong::cli
