#pragma once

// The /v1 protocol. Service is transport independent: handle() takes a method,
// path, query and JSON body and returns a status and JSON body. HttpFrontend
// puts it on an HTTP port, with a server-sent event stream at /v1/events.
//
// Errors travel as {"error": {"code", "message", "details"}, "status_message"}.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cocreate/catalog.hpp"
#include "cocreate/error.hpp"
#include "cocreate/generator.hpp"
#include "cocreate/intent.hpp"
#include "cocreate/llm.hpp"
#include "cocreate/priors.hpp"
#include "cocreate/remote.hpp"
#include "cocreate/workspace.hpp"

namespace cocreate {

struct ServiceConfig {
  // Room templates addressable by name ("bedroom_4x3" -> <dir>/bedroom_4x3.json).
  std::string rooms_dir;
  // One <session_id>.json per session, rewritten after every change.
  std::optional<std::string> persist_dir;
  // Scene completion goes to this backend when set.
  std::optional<RemoteBackend> backend;
  std::optional<LlmConfig> llm;
};

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  nlohmann::json body;  // null when absent
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

int http_status(ErrorCode code);
// What a voice assistant would say for the error.
std::string status_message(ErrorCode code);

// Object ids (or, for deletion, wireframe ids) a target reference points at in
// the workspace. A point selects footprints containing it; a region selects
// items whose centre lies inside it. Throws MissingTarget, UnknownInstance.
struct ResolvedTargets {
  std::vector<std::string> objects;
  std::vector<std::string> wireframes;
};
ResolvedTargets resolve_targets(const Workspace& ws, const TargetRef& ref, const Catalog& catalog,
                                bool allow_wireframes);

class Service {
 public:
  Service(Catalog catalog, PriorTable priors, Synonyms synonyms, ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  Response handle(const Request& request);

  // Serialized events with seq > `after`.
  std::vector<nlohmann::json> events_after(const std::string& session_id, std::uint64_t after) const;
  // Blocks until the session has an event past `after`, the timeout passes
  // or close() is called. Returns whether new events exist.
  bool wait_events(const std::string& session_id, std::uint64_t after, std::chrono::milliseconds timeout) const;
  void close();
  bool closed() const { return closed_; }

  const Catalog& catalog() const { return catalog_; }

 private:
  struct Pending {
    std::string id;
    std::string ws_id;
    std::uint64_t revision = 0;  // superseded once the workspace moves past it
    std::vector<Suggestion> candidates;
    bool resolved = false;
    nlohmann::json outcome;
  };
  struct SessionState {
    std::mutex mu;
    std::unique_ptr<Session> session;
    std::map<std::string, Pending> pending;
    std::uint64_t next_suggestion = 1;
  };

  std::shared_ptr<SessionState> state(const std::string& session_id) const;
  Response route(const Request& request);
  nlohmann::json create_session(const nlohmann::json& body);
  Response session_route(SessionState& st, const Request& req, const std::vector<std::string>& parts);
  Response workspace_route(SessionState& st, const Request& req, const std::string& ws_id,
                           const std::vector<std::string>& rest);
  nlohmann::json run_command(SessionState& st, const std::string& ws_id, const nlohmann::json& body);
  nlohmann::json offer(SessionState& st, const std::string& ws_id, geom::Vec2 location,
                       const CatalogFilter& filter, const GenConfig& config);
  nlohmann::json choose(SessionState& st, const std::string& suggestion_id, const nlohmann::json& body);
  MutationResult complete(Session& s, const std::string& ws_id, const GenConfig& config);
  void persist(const Session& s) const;
  void load_persisted();
  void notify();

  Catalog catalog_;
  PriorTable priors_;
  Synonyms synonyms_;
  ServiceConfig config_;
  std::unique_ptr<Generator> generator_;
  std::unique_ptr<IntentParser> parser_;
  std::unique_ptr<LlmParser> llm_;

  mutable std::shared_mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<SessionState>> sessions_;
  std::uint64_t next_session_ = 1;

  mutable std::mutex events_mu_;
  mutable std::condition_variable events_cv_;
  std::uint64_t events_version_ = 0;
  std::atomic<bool> closed_{false};
};

// HTTP binding of a Service.
class HttpFrontend {
 public:
  explicit HttpFrontend(Service& service);
  ~HttpFrontend();
  HttpFrontend(const HttpFrontend&) = delete;
  HttpFrontend& operator=(const HttpFrontend&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws Io.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cocreate
