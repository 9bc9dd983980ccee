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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "charcong/serialize.hpp"

namespace charcong {
namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "charcong");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (std::filesystem::path(CHARCONG_FIXTURE_DIR) / name).string(); }

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", "5", "16", "--coeffs", "[0,8,0,8]"}).code, cli::kOk);
  EXPECT_EQ(run({"check", "5", "16", "--coeffs", "[8*z, 4*z+4, 0, 4*z-4]"}).code, cli::kOk);
  EXPECT_EQ(run({"check", "5", "16", "--coeffs", "[0,8,0,4]"}).code, cli::kVerificationFailed);
  EXPECT_EQ(run({"check", "5", "16", "--coeffs", "[0,8]"}).code, cli::kError);
  EXPECT_EQ(run({"check", "5", "16", "--coeffs", "[0,8,0,q]"}).code, cli::kError);

  const auto path = std::filesystem::temp_directory_path() / "charcong_cli_coeffs.json";
  std::ofstream(path) << R"([4, -4, 4, -4])";
  EXPECT_EQ(run({"check", "5", "16", "--coeffs", path.string()}).code, cli::kOk);
  std::filesystem::remove(path);
}

TEST(Cli, BruteRefusalCitesSearchSpace) {
  const auto r = run({"brute", "5", "16", "--budget", "1000000"});
  EXPECT_EQ(r.code, cli::kBudgetRefused);
  EXPECT_NE(r.err.find("4294967296"), std::string::npos);
  const auto ok = run({"brute", "3", "4", "--json"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_EQ(json::parse(ok.out).at("size"), 2);  // a + b = a - b = 0 mod 4
}

TEST(Cli, MatrixJsonRoundTrip) {
  for (int N : {2, 5, 7, 12, 20}) {
    const auto r = run({"matrix", std::to_string(N), "--json"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(character_matrix_from_json(json::parse(r.out)).entries, character_matrix(N).entries);
  }
}

TEST(Cli, SweepSummary) {
  const auto r = run({"sweep", "--n", "2..20", "--m", "2..20", "--policy", "rational_units"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("361 pairs"), std::string::npos);
  EXPECT_NE(r.out.find("full pseudo-rank: 64"), std::string::npos);
  EXPECT_EQ(run({"sweep", "--n", "9..3"}).code, cli::kError);
  EXPECT_EQ(run({"sweep", "--policy", "greedy"}).code, cli::kError);
}

TEST(Cli, SessionReplay) {
  EXPECT_EQ(run({"session", "replay", fixture("session_n5_m16_corrected.json")}).code, cli::kOk);
  const auto scripted = run({"session", "replay", fixture("session_n5_m16.json")});
  EXPECT_EQ(scripted.code, cli::kVerificationFailed);
  EXPECT_NE(scripted.out.find("not in ker E"), std::string::npos);
  EXPECT_EQ(run({"session", "replay", "/nonexistent.json"}).code, cli::kError);
}

TEST(Cli, OtherCommandsAndUsageErrors) {
  EXPECT_EQ(run({"normalize", "5", "16"}).code, cli::kOk);
  EXPECT_EQ(run({"kernel", "7", "15", "--json"}).code, cli::kOk);
  EXPECT_EQ(run({}).code, cli::kError);
  EXPECT_EQ(run({"matrix", "1"}).code, cli::kError);
  EXPECT_EQ(run({"normalize", "5"}).code, cli::kError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, ParseRange) {
  EXPECT_EQ(cli::parse_range("2..20")->hi, 20);
  EXPECT_EQ(cli::parse_range("7")->lo, 7);
  EXPECT_FALSE(cli::parse_range("3..2"));
  EXPECT_FALSE(cli::parse_range("a..b"));
}

}  // namespace
}  // namespace charcong
