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

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <json.hpp>

namespace httplib {
class Server;
}

namespace charcong {

struct Response {
  int status = 200;
  nlohmann::json body;  // null for empty bodies
};

struct ServiceOptions {
  /// Append-only JSON-lines journal; replayed on construction when present.
  std::optional<std::filesystem::path> journal;
  std::string allowed_origin = "*";
};

struct Session;

/// Session store behind the HTTP API. `handle` is transport-free so the
/// routing and status codes can be exercised without sockets.
///
///   POST   /sessions                {N, M, [policy]}       201 {id, snapshot}
///   GET    /sessions/{id}                                  200 snapshot
///   POST   /sessions/{id}/ops       {kind, args, [expected_log_length]}
///   POST   /sessions/{id}/check     {coeffs}
///   GET    /sessions/{id}/oracle                           scalar-lift kernel
///   GET    /sessions/{id}/script                           replayable op log
///   DELETE /sessions/{id}                                  204
class SessionService {
 public:
  explicit SessionService(ServiceOptions options = {});
  ~SessionService();

  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  Response handle(std::string_view method, std::string_view path, std::string_view body);

  std::size_t session_count() const;

  const ServiceOptions& options() const noexcept { return options_; }

  /// Blocks serving HTTP on host:port until stop() is called.
  bool serve(const std::string& host, int port);
  /// Blocks until serve() is listening; returns the bound port.
  int wait_until_listening() const;
  void stop();

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  Response create(const nlohmann::json& request, std::optional<std::string> id = std::nullopt);
  Response apply_op(Session& session, const nlohmann::json& request, bool journal);
  Response check(Session& session, const nlohmann::json& request);
  Response oracle(Session& session);
  Response remove(const std::string& id);
  void append_journal(const nlohmann::json& event);
  void replay_journal();
  std::string fresh_id();

  ServiceOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex journal_mutex_;
  std::uint64_t id_salt_;
  std::uint64_t id_counter_ = 0;
  std::unique_ptr<httplib::Server> server_;
  std::atomic<int> bound_port_{0};
};

}  // namespace charcong
