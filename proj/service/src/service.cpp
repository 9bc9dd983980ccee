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

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <httplib.h>

#include "charcong/error.hpp"
#include "charcong/kernel_oracle.hpp"
#include "charcong/operations.hpp"
#include "charcong/serialize.hpp"

namespace charcong {

using nlohmann::json;

/// Largest character modulus a session may be created for.
constexpr int kMaxSessionModulus = 100;

struct Session {
  Session(std::string id_, Workbench bench_) : id(std::move(id_)), bench(std::move(bench_)) {}

  std::string id;
  std::mutex mutex;
  Workbench bench;
  std::string created;
  std::string modified;
  std::optional<json> oracle_cache;
};

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Response error(int status, std::string reason, std::string message) {
  return {status, json{{"error", std::move(message)}, {"reason", std::move(reason)}}};
}

json session_snapshot(const Session& s) {
  json snap = s.bench.snapshot();
  snap["id"] = s.id;
  snap["created"] = s.created;
  snap["modified"] = s.modified;
  return snap;
}

std::vector<std::string> split_path(std::string_view path) {
  if (const auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto slash = path.find('/', start);
    const auto end = slash == std::string_view::npos ? path.size() : slash;
    if (end > start) parts.emplace_back(path.substr(start, end - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return parts;
}

/// Maps library errors onto HTTP statuses.
Response translate(const std::exception& ex) {
  if (const auto* op = dynamic_cast<const InvalidOperation*>(&ex)) return error(422, op->reason(), op->what());
  if (dynamic_cast<const NothingToUndo*>(&ex)) return error(422, "nothing_to_undo", ex.what());
  if (dynamic_cast<const ParseError*>(&ex)) return error(422, "malformed", ex.what());
  if (dynamic_cast<const DomainError*>(&ex)) return error(422, "domain", ex.what());
  if (dynamic_cast<const json::exception*>(&ex)) return error(400, "bad_json", ex.what());
  if (dynamic_cast<const Error*>(&ex)) return error(422, "invalid", ex.what());
  return error(500, "internal", ex.what());
}

}  // namespace

SessionService::SessionService(ServiceOptions options) : options_(std::move(options)) {
  std::random_device rd;
  id_salt_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  if (options_.journal) replay_journal();
}

std::size_t SessionService::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::string SessionService::fresh_id() {
  std::mt19937_64 mix(id_salt_ + ++id_counter_);
  std::ostringstream os;
  os << std::hex << mix();
  return os.str();
}

std::shared_ptr<Session> SessionService::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response SessionService::handle(std::string_view method, std::string_view path, std::string_view body) {
  try {
    const auto parts = split_path(path);
    if (method == "OPTIONS") return {204, nullptr};
    if (parts.empty() || parts[0] != "sessions" || parts.size() > 3) return error(404, "not_found", "no such route");

    json request;
    if (method == "POST" && !body.empty()) request = json::parse(body);

    if (parts.size() == 1) {
      if (method != "POST") return error(405, "method_not_allowed", "use POST /sessions");
      return create(request);
    }

    const std::string& id = parts[1];
    if (parts.size() == 2 && method == "DELETE") return remove(id);

    const auto session = find(id);
    if (!session) return error(404, "unknown_session", "no session " + id);
    std::lock_guard lock(session->mutex);

    if (parts.size() == 2) {
      if (method != "GET") return error(405, "method_not_allowed", "use GET or DELETE");
      return {200, session_snapshot(*session)};
    }
    const std::string& action = parts[2];
    if (action == "ops" && method == "POST") return apply_op(*session, request, true);
    if (action == "check" && method == "POST") return check(*session, request);
    if (action == "oracle" && method == "GET") return oracle(*session);
    if (action == "script" && method == "GET") return {200, session->bench.export_script()};
    return error(404, "not_found", "no such route");
  } catch (const std::exception& ex) {
    return translate(ex);
  }
}

Response SessionService::create(const json& request, std::optional<std::string> id) {
  if (!request.is_object() || !request.contains("N") || !request.contains("M")) {
    return error(422, "malformed", "body must be {\"N\": int, \"M\": int}");
  }
  const int N = request.at("N").get<int>();
  const Coeff M = request.at("M").get<Coeff>();
  if (N < 2 || N > kMaxSessionModulus) {
    return error(422, "domain", "N must lie in [2, " + std::to_string(kMaxSessionModulus) + "]");
  }
  if (M < 2) return error(422, "domain", "M must be >= 2");
  PivotPolicy policy = PivotPolicy::any_unit;
  if (request.contains("policy")) {
    const auto p = parse_pivot_policy(request.at("policy").get<std::string>());
    if (!p) return error(422, "domain", "unknown pivot policy");
    policy = *p;
  }

  auto session = std::make_shared<Session>(id.value_or(""), Workbench(N, M, policy));
  session->created = session->modified = utc_now();
  {
    std::unique_lock lock(sessions_mutex_);
    if (session->id.empty()) {
      do {
        session->id = fresh_id();
      } while (sessions_.contains(session->id));
    }
    sessions_[session->id] = session;
  }
  append_journal(json{{"event", "create"}, {"id", session->id}, {"N", N}, {"M", M}, {"policy", to_string(policy)}});
  return {201, json{{"id", session->id}, {"snapshot", session_snapshot(*session)}}};
}

Response SessionService::apply_op(Session& session, const json& request, bool journal) {
  if (!request.is_object() || !request.contains("kind")) return error(422, "malformed", "op needs a \"kind\"");
  const auto kind = request.at("kind").get<std::string>();
  if (!is_mutating_kind(kind)) return error(422, "unknown_kind", "unknown op kind \"" + kind + "\"");

  auto& bench = session.bench;
  if (request.contains("expected_log_length")) {
    const auto expected = request.at("expected_log_length").get<std::size_t>();
    const auto actual = bench.triplet().op_log().size();
    if (expected != actual) {
      return {409, json{{"error", "op log changed since the client's last snapshot"},
                        {"reason", "log_length_mismatch"},
                        {"expected", expected},
                        {"actual", actual}}};
    }
  }

  json result = bench.apply(request);
  if (!bench.triplet().assert_invariant()) {
    return {500, json{{"error", "B*R != L*E after " + kind},
                      {"reason", "invariant_violated"},
                      {"snapshot", bench.snapshot()}}};
  }
  session.modified = utc_now();
  if (journal) {
    json op = request;
    op.erase("expected_log_length");
    append_journal(json{{"event", "op"}, {"id", session.id}, {"op", std::move(op)}});
  }
  json snap = session_snapshot(session);
  if (!result.is_null()) snap["result"] = std::move(result);
  return {200, std::move(snap)};
}

Response SessionService::check(Session& session, const json& request) {
  if (!request.is_object() || !request.contains("coeffs")) return error(422, "malformed", "body must be {\"coeffs\": [...]}");
  json verdict = session.bench.check(request.at("coeffs"));
  return {200, json{{"in_kernel", verdict.at("in_kernel")},
                    {"vector_or_residual", verdict.at("vector")},
                    {"full_period", verdict.at("full_period")}}};
}

Response SessionService::oracle(Session& session) {
  if (!session.oracle_cache) {
    const auto& bench = session.bench;
    const auto gens = scalar_lift_kernel(bench.ring(), bench.triplet().B());
    session.oracle_cache = kernel_report(bench.N(), bench.M(), gens);
  }
  return {200, *session.oracle_cache};
}

Response SessionService::remove(const std::string& id) {
  {
    std::unique_lock lock(sessions_mutex_);
    if (sessions_.erase(id) == 0) return error(404, "unknown_session", "no session " + id);
  }
  append_journal(json{{"event", "delete"}, {"id", id}});
  return {204, nullptr};
}

void SessionService::append_journal(const json& event) {
  if (!options_.journal) return;
  std::lock_guard lock(journal_mutex_);
  std::ofstream out(*options_.journal, std::ios::app);
  out << event.dump() << '\n';
}

void SessionService::replay_journal() {
  std::ifstream in(*options_.journal);
  if (!in) return;
  const auto path = std::move(options_.journal);
  options_.journal.reset();  // do not re-append while replaying
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json event = json::parse(line);
    const auto kind = event.at("event").get<std::string>();
    const auto id = event.at("id").get<std::string>();
    if (kind == "create") {
      create(event, id);
    } else if (kind == "delete") {
      std::unique_lock lock(sessions_mutex_);
      sessions_.erase(id);
    } else if (kind == "op") {
      if (auto s = find(id)) apply_op(*s, event.at("op"), false);
    }
  }
  options_.journal = path;
}

bool SessionService::serve(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  auto& server = *server_;
  server.set_default_headers({{"Access-Control-Allow-Origin", options_.allowed_origin},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    if (!r.body.is_null()) res.set_content(r.body.dump(), "application/json");
  };
  server.Get(R"(/.*)", route);
  server.Post(R"(/.*)", route);
  server.Delete(R"(/.*)", route);
  server.Options(R"(/.*)", route);
  const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    bound_port_ = -1;
    return false;
  }
  std::cerr << "charcong service listening on " << host << ':' << bound << '\n';
  bound_port_ = bound;
  return server.listen_after_bind();
}

int SessionService::wait_until_listening() const {
  while (bound_port_ == 0 || (bound_port_ > 0 && !server_->is_running())) std::this_thread::yield();
  return bound_port_;
}

void SessionService::stop() {
  if (server_) server_->stop();
}

SessionService::~SessionService() = default;

}  // namespace charcong
