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

#include "charcong/service.hpp"

#include <atomic>
#include <filesystem>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "charcong/cyclotomic.hpp"

namespace charcong {
namespace {

using nlohmann::json;

json coeffs(std::initializer_list<std::initializer_list<Coeff>> v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(json{{"coeffs", std::vector<Coeff>(c)}});
  return out;
}

class ServiceTest : public ::testing::Test {
 protected:
  std::string create(int N, Coeff M) {
    const auto r = service.handle("POST", "/sessions", json{{"N", N}, {"M", M}}.dump());
    EXPECT_EQ(r.status, 201);
    return r.body.at("id").get<std::string>();
  }

  Response op(const std::string& id, const json& body) {
    return service.handle("POST", "/sessions/" + id + "/ops", body.dump());
  }

  Response check(const std::string& id, const json& v) {
    return service.handle("POST", "/sessions/" + id + "/check", json{{"coeffs", v}}.dump());
  }

  void run_reference_session(const std::string& id) {
    ASSERT_EQ(op(id, {{"kind", "normalize"}}).status, 200);
    for (const json& args : {json{3, 2, 1}, json{3, 1, -1}}) ASSERT_EQ(op(id, {{"kind", "row_add"}, {"args", args}}).status, 200);
    ASSERT_EQ(op(id, {{"kind", "col_add"}, {"args", {3, 1, 1}}}).status, 200);
    for (const json& args : {json{1, 2, -2}, json{1, 3, 1}}) ASSERT_EQ(op(id, {{"kind", "row_add"}, {"args", args}}).status, 200);
  }

  SessionService service;
};

TEST_F(ServiceTest, CreateAndSnapshot) {
  const auto r = service.handle("POST", "/sessions", R"({"N": 5, "M": 16})");
  ASSERT_EQ(r.status, 201);
  const auto& snap = r.body.at("snapshot");
  EXPECT_EQ(snap.at("m"), 5);
  EXPECT_EQ(snap.at("n"), 4);
  EXPECT_EQ(snap.at("ring").at("e"), 4);
  EXPECT_TRUE(snap.at("log").empty());
  const auto got = service.handle("GET", "/sessions/" + r.body.at("id").get<std::string>(), "");
  EXPECT_EQ(got.status, 200);
  EXPECT_EQ(got.body.at("E"), snap.at("E"));
}

TEST_F(ServiceTest, ReferenceSessionChecks) {
  const auto id = create(5, 16);
  run_reference_session(id);
  const auto snap = service.handle("GET", "/sessions/" + id, "").body;
  EXPECT_EQ(snap.at("log").size(), 10u + 5u);

  auto first = check(id, json{0, 0, 0, 8});
  EXPECT_TRUE(first.body.at("in_kernel").get<bool>());
  EXPECT_TRUE(first.body.at("full_period").get<bool>());
  EXPECT_EQ(first.body.at("vector_or_residual"), coeffs({{0, 0}, {8, 0}, {0, 0}, {8, 0}}));

  // The scripted [0,0,4,0] is not in ker E; the neighbouring [0,0,4,-4] maps to (4,-4,4,-4).
  EXPECT_FALSE(check(id, json{0, 0, 4, 0}).body.at("in_kernel").get<bool>());
  auto second = check(id, json{0, 0, 4, -4});
  EXPECT_TRUE(second.body.at("in_kernel").get<bool>());
  EXPECT_EQ(second.body.at("vector_or_residual"), coeffs({{4, 0}, {12, 0}, {4, 0}, {12, 0}}));

  auto third = check(id, json{0, 8, 0, "4*z-4"});
  EXPECT_TRUE(third.body.at("full_period").get<bool>());
  EXPECT_EQ(third.body.at("vector_or_residual"), coeffs({{0, 8}, {4, 4}, {0, 0}, {12, 4}}));

  auto zero = check(id, json{0, 0, 0, 0});
  EXPECT_TRUE(zero.body.at("in_kernel").get<bool>());
  EXPECT_EQ(zero.body.at("vector_or_residual"), coeffs({{0, 0}, {0, 0}, {0, 0}, {0, 0}}));
}

TEST_F(ServiceTest, InvalidOpsAreRejectedWithReasons) {
  const auto id = create(5, 16);
  auto r = op(id, {{"kind", "dilate_row"}, {"args", {1, "2"}}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body.at("reason"), "non_unit");
  EXPECT_EQ(op(id, {{"kind", "swap_rows"}, {"args", {0, 9}}}).body.at("reason"), "bad_index");
  EXPECT_EQ(op(id, {{"kind", "undo"}}).body.at("reason"), "nothing_to_undo");
  EXPECT_EQ(op(id, {{"kind", "teleport"}}).body.at("reason"), "unknown_kind");
  EXPECT_EQ(op(id, {{"kind", "row_add"}, {"args", {1}}}).status, 422);
  EXPECT_EQ(check(id, json{0, 0}).status, 422);
  EXPECT_EQ(service.handle("POST", "/sessions/" + id + "/ops", "{not json").status, 400);
  EXPECT_TRUE(service.handle("GET", "/sessions/" + id, "").body.at("log").empty());
}

TEST_F(ServiceTest, OptimisticConcurrency) {
  const auto id = create(5, 16);
  EXPECT_EQ(op(id, {{"kind", "swap_rows"}, {"args", {0, 1}}, {"expected_log_length", 0}}).status, 200);
  auto stale = op(id, {{"kind", "swap_rows"}, {"args", {0, 1}}, {"expected_log_length", 0}});
  EXPECT_EQ(stale.status, 409);
  EXPECT_EQ(stale.body.at("actual"), 1);
  EXPECT_EQ(op(id, {{"kind", "undo"}, {"expected_log_length", 1}}).status, 200);
}

TEST_F(ServiceTest, ConcurrentRequestsAreSerializedPerSession) {
  const auto id = create(7, 15);
  std::atomic<int> accepted{0};
  std::vector<std::thread> clients;
  for (int c = 0; c < 8; ++c) {
    clients.emplace_back([&, c] {
      for (int k = 0; k < 25; ++k) {
        const auto snap = service.handle("GET", "/sessions/" + id, "").body;
        const auto len = snap.at("log").size();
        const auto r = op(id, {{"kind", "row_add"}, {"args", {(c + k) % 7, (c + k + 1) % 7, 1}}, {"expected_log_length", len}});
        if (r.status == 200) ++accepted;
        else EXPECT_EQ(r.status, 409);
      }
    });
  }
  for (auto& t : clients) t.join();
  const auto snap = service.handle("GET", "/sessions/" + id, "").body;
  EXPECT_EQ(snap.at("log").size(), static_cast<std::size_t>(accepted.load()));
  EXPECT_GT(accepted.load(), 0);
}

TEST_F(ServiceTest, UnknownSessionsAndRoutes) {
  EXPECT_EQ(service.handle("GET", "/sessions/nope", "").status, 404);
  EXPECT_EQ(service.handle("POST", "/sessions/nope/ops", R"({"kind":"undo"})").status, 404);
  EXPECT_EQ(service.handle("GET", "/elsewhere", "").status, 404);
  EXPECT_EQ(service.handle("OPTIONS", "/sessions", "").status, 204);
  EXPECT_EQ(service.handle("POST", "/sessions", R"({"N": 1, "M": 16})").status, 422);
  EXPECT_EQ(service.handle("POST", "/sessions", R"({"N": 5, "M": 1})").status, 422);
  EXPECT_EQ(service.handle("POST", "/sessions", R"({"N": 5})").status, 422);

  const auto id = create(5, 16);
  EXPECT_EQ(service.handle("DELETE", "/sessions/" + id, "").status, 204);
  EXPECT_EQ(service.handle("GET", "/sessions/" + id, "").status, 404);
  EXPECT_EQ(service.handle("DELETE", "/sessions/" + id, "").status, 404);
}

TEST_F(ServiceTest, OracleListsScalarLiftGenerators) {
  const auto id = create(5, 16);
  const auto r = service.handle("GET", "/sessions/" + id + "/oracle", "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("generators").size(), 5u);
  for (const auto& ok : r.body.at("checked_full_period")) EXPECT_TRUE(ok.get<bool>());
}

TEST_F(ServiceTest, ScriptReplayMatchesLiveSnapshot) {
  const auto id = create(5, 16);
  run_reference_session(id);
  const auto script = service.handle("GET", "/sessions/" + id + "/script", "").body;
  SessionService other;
  const auto copy = other.handle("POST", "/sessions", json{{"N", 5}, {"M", 16}}.dump()).body.at("id").get<std::string>();
  for (const auto& step : script.at("log")) {
    ASSERT_EQ(other.handle("POST", "/sessions/" + copy + "/ops", step.dump()).status, 200);
  }
  const auto a = service.handle("GET", "/sessions/" + id, "").body;
  const auto b = other.handle("GET", "/sessions/" + copy, "").body;
  for (const char* key : {"L", "E", "R", "log", "report", "units"}) EXPECT_EQ(a.at(key), b.at(key)) << key;
}

TEST(ServiceJournal, RecoversSessionsFromJournal) {
  const auto path = std::filesystem::temp_directory_path() / "charcong_service_journal.jsonl";
  std::filesystem::remove(path);
  json before;
  std::string id;
  {
    SessionService first(ServiceOptions{path, "*"});
    id = first.handle("POST", "/sessions", R"({"N": 7, "M": 15})").body.at("id").get<std::string>();
    first.handle("POST", "/sessions/" + id + "/ops", R"({"kind": "normalize"})");
    first.handle("POST", "/sessions/" + id + "/ops", R"({"kind": "undo"})");
    first.handle("POST", "/sessions/" + id + "/ops", R"({"kind": "pivot"})");
    const auto gone = first.handle("POST", "/sessions", R"({"N": 3, "M": 2})").body.at("id").get<std::string>();
    first.handle("DELETE", "/sessions/" + gone, "");
    before = first.handle("GET", "/sessions/" + id, "").body;
  }
  SessionService second(ServiceOptions{path, "*"});
  EXPECT_EQ(second.session_count(), 1u);
  const auto after = second.handle("GET", "/sessions/" + id, "").body;
  for (const char* key : {"L", "E", "R", "log", "report"}) EXPECT_EQ(after.at(key), before.at(key)) << key;
  std::filesystem::remove(path);
}

TEST(ServiceHttp, ServesJsonWithCors) {
  SessionService service(ServiceOptions{std::nullopt, "http://localhost:5173"});
  std::thread server([&] { service.serve("127.0.0.1", 0); });
  const int port = service.wait_until_listening();
  ASSERT_GT(port, 0);
  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/sessions", R"({"N": 5, "M": 16})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  EXPECT_EQ(created->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
  const auto id = json::parse(created->body).at("id").get<std::string>();
  auto got = client.Get(("/sessions/" + id).c_str());
  ASSERT_TRUE(got);
  EXPECT_EQ(got->status, 200);
  EXPECT_EQ(got->get_header_value("Content-Type"), "application/json");
  auto deleted = client.Delete(("/sessions/" + id).c_str());
  ASSERT_TRUE(deleted);
  EXPECT_EQ(deleted->status, 204);
  service.stop();
  server.join();
}

}  // namespace
}  // namespace charcong
