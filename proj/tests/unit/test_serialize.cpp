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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "charcong/error.hpp"
#include "charcong/operations.hpp"
#include "charcong/parse.hpp"
#include "charcong/serialize.hpp"
#include "generators.hpp"

namespace charcong {
namespace {

using nlohmann::json;
using testing::Rng;

json load_fixture(const std::string& name) {
  std::ifstream in(std::filesystem::path(CHARCONG_FIXTURE_DIR) / name);
  return json::parse(in);
}

TEST(Parse, PolynomialText) {
  const Ring r(4, 16);
  EXPECT_EQ(parse_element(r, "4*z - 4"), Element({12, 4}));
  EXPECT_EQ(parse_element(r, " 4 z-4 "), Element({12, 4}));
  EXPECT_EQ(parse_element(r, "4*zeta4-4"), Element({12, 4}));
  EXPECT_EQ(parse_element(r, "a"), r.zeta_power(1));
  EXPECT_EQ(parse_element(r, "z^4"), r.one());
  EXPECT_EQ(parse_element(r, "z^-1"), Element({0, 15}));
  EXPECT_EQ(parse_element(r, "(z+1)^2"), Element({0, 2}));
  EXPECT_EQ(parse_element(r, "-3(z+1)"), Element({13, 13}));
  EXPECT_EQ(parse_element(r, "2^5"), r.zero());
  EXPECT_EQ(parse_element(r, "-17"), Element({15, 0}));
  for (const char* bad : {"", "z^^2", "q", "1/2", "(z+1", "2^-1", "z+"}) {
    EXPECT_THROW(parse_element(r, bad), ParseError) << bad;
  }
}

TEST(Parse, JsonElementForms) {
  const Ring r(6, 15);
  EXPECT_EQ(element_from_json(r, json(-1)), Element({14, 0}));
  EXPECT_EQ(element_from_json(r, json("5*z+5")), Element({5, 5}));
  EXPECT_EQ(element_from_json(r, json::array({5, 5})), Element({5, 5}));
  EXPECT_EQ(element_from_json(r, json{{"coeffs", {1}}}), r.one());
  EXPECT_THROW(element_from_json(r, json::array({1, 2, 3})), ParseError);
  EXPECT_THROW(element_from_json(r, json(1.5)), ParseError);
  EXPECT_THROW(element_from_json(r, json{{"coefs", {1}}}), ParseError);
}

TEST(Parse, CoefficientLists) {
  const Ring r(4, 16);
  const std::vector<Element> expected{r.zero(), r.embed_integer(8), r.zero(), Element({12, 4})};
  EXPECT_EQ(parse_coefficient_list(r, R"([0, 8, 0, "4*z-4"])"), expected);
  EXPECT_EQ(parse_coefficient_list(r, "[0, 8, 0, 4*z-4]"), expected);
  EXPECT_EQ(parse_coefficient_list(r, R"([0, 8, {"coeffs": [0]}, [12, 4]])"), expected);
  EXPECT_THROW(parse_coefficient_list(r, "0, 8"), ParseError);
  EXPECT_THROW(parse_coefficient_list(r, "[0, 8"), ParseError);
}

TEST(Serialize, CharacterMatrixRoundTrip) {
  for (int N = 2; N <= 20; ++N) {
    const auto cm = character_matrix(N);
    const auto back = character_matrix_from_json(json::parse(to_json(cm).dump()));
    EXPECT_EQ(back.modulus, N);
    EXPECT_EQ(back.entries, cm.entries) << "N=" << N;
    EXPECT_EQ(back.characters, cm.characters);
    EXPECT_EQ(back.ring, cm.ring);
  }
}

TEST(Serialize, OpRoundTrip) {
  Rng rng(testing::base_seed() + 30);
  const auto cm = character_matrix(7);
  Triplet t(cm.ring.with_modulus(15), cm.reduced(15));
  for (int trial = 0; trial < 500; ++trial) {
    const auto op = testing::random_op(t, rng);
    EXPECT_EQ(op_from_json(t.ring(), json::parse(to_json(op).dump())), op);
  }
  EXPECT_THROW(op_from_json(t.ring(), json{{"kind", "row_add"}, {"args", {1, 2}}}), ParseError);
  EXPECT_THROW(op_from_json(t.ring(), json{{"kind", "teleport"}}), ParseError);
  EXPECT_THROW(op_from_json(t.ring(), json{{"kind", "swap_rows"}, {"args", {-1, 2}}}), InvalidOperation);
}

TEST(Serialize, MatrixRoundTripAndBalancedText) {
  Rng rng(testing::base_seed() + 31);
  const Ring r(12, 10);
  const Matrix m = testing::random_matrix(r, 3, 4, rng);
  EXPECT_EQ(matrix_from_json(r, json::parse(to_json(m).dump())), m);
  EXPECT_EQ(to_text(Element({12, 4}), 16), "-4 + 4*z");
  EXPECT_EQ(to_text(Element({0, 0}), 16), "0");
  EXPECT_EQ(to_text(Element({0, 15}), 16), "-z");
  EXPECT_EQ(balanced(9, 16), -7);
  EXPECT_EQ(balanced(8, 16), 8);
}

TEST(Workbench, ExportedScriptReplaysToSameSnapshot) {
  Rng rng(testing::base_seed() + 32);
  for (int N : {5, 7, 12}) {
    Workbench bench(N, 16);
    bench.apply(json{{"kind", "normalize"}});
    for (int step = 0; step < 25; ++step) bench.apply(to_json(testing::random_op(bench.triplet(), rng)));
    bench.apply(json{{"kind", "undo"}});
    const auto replayed = replay_session(bench.export_script());
    EXPECT_TRUE(replayed.ok);
    EXPECT_EQ(replayed.final_snapshot, bench.snapshot()) << "N=" << N;
  }
}

TEST(Workbench, UnknownStepKindsAreRejected) {
  Workbench bench(5, 16);
  EXPECT_THROW(bench.apply(json{{"kind", "teleport"}}), ParseError);
  EXPECT_THROW(bench.apply(json{{"args", json::array()}}), ParseError);
  EXPECT_THROW(replay_session(json{{"N", 5}, {"M", 16}, {"log", {{{"kind", "explode"}}}}}), ParseError);
  EXPECT_THROW(replay_session(json{{"N", 5}, {"M", 16}, {"policy", "greedy"}, {"log", json::array()}}), ParseError);
}

TEST(Workbench, SessionFixtureReplay) {
  const auto result = replay_session(load_fixture("session_n5_m16.json"));
  ASSERT_EQ(result.steps.size(), 9u);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_TRUE(result.steps[k]["invariant"].get<bool>());
  EXPECT_TRUE(result.steps[6]["check"]["in_kernel"].get<bool>());
  EXPECT_FALSE(result.steps[7]["check"]["in_kernel"].get<bool>());  // the printed [0,0,4,0]
  EXPECT_TRUE(result.steps[8]["check"]["in_kernel"].get<bool>());
  EXPECT_FALSE(result.ok);

  const auto corrected = replay_session(load_fixture("session_n5_m16_corrected.json"));
  EXPECT_TRUE(corrected.ok);
}

}  // namespace
}  // namespace charcong
