#include "cocreate/service.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "cocreate/layout.hpp"
#include "cocreate/serialize.hpp"
#include "cocreate/validate.hpp"

namespace cocreate {

namespace fs = std::filesystem;
using geom::Vec2;

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSession:
    case ErrorCode::UnknownWorkspace:
    case ErrorCode::UnknownInstance:
    case ErrorCode::UnknownWireframe:
    case ErrorCode::UnknownSuggestion:
      return 404;
    case ErrorCode::AlreadyResolved:
    case ErrorCode::SuggestionExpired:
    case ErrorCode::PasteBlocked:
      return 409;
    case ErrorCode::NoIntent:
    case ErrorCode::MissingDeixis:
    case ErrorCode::MissingTarget:
    case ErrorCode::NoCandidates:
    case ErrorCode::PlacementExhausted:
    case ErrorCode::OutOfBounds:
    case ErrorCode::NoSpecForLabel:
    case ErrorCode::DegenerateStroke:
      return 422;
    case ErrorCode::BackendUnavailable:
    case ErrorCode::DecodeError:
    case ErrorCode::SchemaViolation:
      return 502;
    case ErrorCode::Io:
      return 500;
    default:
      return 400;
  }
}

std::string status_message(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoIntent: return "Sorry, I did not understand that command.";
    case ErrorCode::MissingDeixis: return "Please point at the spot you mean.";
    case ErrorCode::MissingTarget: return "Please select or point at the furniture you mean.";
    case ErrorCode::NoCandidates: return "Nothing fits here.";
    case ErrorCode::PlacementExhausted: return "I could not find room for that.";
    case ErrorCode::OutOfBounds: return "That would leave the room.";
    case ErrorCode::PasteBlocked: return "There is no free space to paste there.";
    case ErrorCode::NoSpecForLabel: return "I have no furniture for that label.";
    case ErrorCode::AlreadyResolved: return "That suggestion was already chosen.";
    case ErrorCode::SuggestionExpired: return "Those suggestions are out of date. Please ask again.";
    case ErrorCode::BackendUnavailable: return "The layout model is not reachable right now.";
    case ErrorCode::UnknownAttribute: return "I do not know that kind of furniture.";
    default: return "The request could not be completed.";
  }
}

namespace {

Response error_response(const Error& e) {
  return {http_status(e.code()),
          {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"details", json::object()}}},
           {"status_message", status_message(e.code())}}};
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

const json& body_or_empty(const Request& r) {
  static const json empty = json::object();
  if (r.body.is_null()) return empty;
  if (!r.body.is_object()) throw Error(ErrorCode::SchemaError, "request body must be a JSON object");
  return r.body;
}

std::vector<std::string> id_list(const json& body, const char* key) {
  if (!body.contains(key)) throw Error(ErrorCode::SchemaError, std::string("missing '") + key + "'");
  try {
    return body.at(key).get<std::vector<std::string>>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::SchemaError, std::string("'") + key + "' must be a list of ids");
  }
}

Vec2 vec_of(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::SchemaError, std::string(what) + " must be [x, z]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_of(const json& body, const char* key, double fallback) {
  if (!body.contains(key)) return fallback;
  if (!body.at(key).is_number()) throw Error(ErrorCode::SchemaError, std::string("'") + key + "' must be a number");
  return body.at(key).get<double>();
}

std::uint64_t query_u64(const Request& r, const char* key, std::uint64_t fallback) {
  const auto it = r.query.find(key);
  if (it == r.query.end() || it->second.empty()) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    bad(std::string("query parameter '") + key + "' must be a non-negative integer");
  }
}

json summary_json(const WorkspaceSummary& w) {
  return {{"ws_id", w.ws_id},
          {"revision", w.revision},
          {"objects", w.object_count},
          {"wireframes", w.wireframe_count},
          {"active", w.active}};
}

json session_summary(const Session& s) {
  json list = json::array();
  for (const auto& w : s.list_workspaces()) list.push_back(summary_json(w));
  return {{"session_id", s.id()}, {"active", s.active().id()}, {"workspaces", list}, {"last_seq", s.last_seq()}};
}

json mutation_json(const MutationResult& r, const std::string& message = {}) {
  json j = to_json(r);
  if (!message.empty()) j["status_message"] = message;
  return j;
}

GenConfig config_for(const json& body, const Workspace& ws) {
  GenConfig base;
  // Unseeded requests vary with the workspace revision but stay reproducible.
  base.seed = ws.revision();
  if (!body.contains("config")) return base;
  return gen_config_from_json(body.at("config"), base);
}

bool contains_point(const Footprint& f, Vec2 p) { return geom::point_in_polygon(f.rect, p, 1e-9); }

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

}  // namespace

ResolvedTargets resolve_targets(const Workspace& ws, const TargetRef& ref, const Catalog& catalog,
                                bool allow_wireframes) {
  ResolvedTargets out;
  const auto objects = ws.object_list();
  const auto fps = footprints_of(objects, catalog);
  const auto wireframes = ws.wireframe_list(false);
  if (!ref.ids.empty()) {
    for (const auto& id : ref.ids) {
      if (ws.objects().count(id)) {
        out.objects.push_back(id);
      } else if (allow_wireframes && ws.wireframes().count(id) && !ws.wireframes().at(id).hidden) {
        out.wireframes.push_back(id);
      } else {
        throw Error(ErrorCode::UnknownInstance, "no object '" + id + "' in " + ws.id());
      }
    }
  } else if (ref.at) {
    for (const auto& f : fps) {
      if (contains_point(f, *ref.at)) out.objects.push_back(f.id);
    }
    if (out.objects.empty() && allow_wireframes) {
      for (const auto& w : wireframes) {
        if (geom::point_in_polygon(wireframe_rect(w), *ref.at, 1e-9)) out.wireframes.push_back(w.wf_id);
      }
    }
  } else if (ref.region) {
    if (ref.region->size() < 3) throw Error(ErrorCode::MissingTarget, "the marked region is too small");
    for (const auto& f : fps) {
      if (geom::point_in_polygon(*ref.region, f.center, 1e-9)) out.objects.push_back(f.id);
    }
    if (allow_wireframes) {
      for (const auto& w : wireframes) {
        if (geom::point_in_polygon(*ref.region, w.center, 1e-9)) out.wireframes.push_back(w.wf_id);
      }
    }
  } else if (ref.category) {
    for (const auto& f : fps) {
      if (f.category == *ref.category) out.objects.push_back(f.id);
    }
  }
  if (out.objects.empty() && out.wireframes.empty()) {
    throw Error(ErrorCode::MissingTarget, "nothing matches the referenced target");
  }
  return out;
}

Service::Service(Catalog catalog, PriorTable priors, Synonyms synonyms, ServiceConfig config)
    : catalog_(std::move(catalog)),
      priors_(std::move(priors)),
      synonyms_(std::move(synonyms)),
      config_(std::move(config)) {
  priors_.check_against(catalog_);
  generator_ = std::make_unique<Generator>(catalog_, priors_);
  parser_ = std::make_unique<IntentParser>(catalog_.vocabulary(), synonyms_);
  if (config_.llm) llm_ = std::make_unique<LlmParser>(*parser_, *config_.llm);
  if (config_.persist_dir) {
    std::error_code ec;
    fs::create_directories(*config_.persist_dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + *config_.persist_dir + ": " + ec.message());
    load_persisted();
  }
}

Service::~Service() { close(); }

void Service::close() {
  {
    std::lock_guard lock(events_mu_);
    closed_ = true;
  }
  events_cv_.notify_all();
}

void Service::notify() {
  {
    std::lock_guard lock(events_mu_);
    ++events_version_;
  }
  events_cv_.notify_all();
}

std::shared_ptr<Service::SessionState> Service::state(const std::string& session_id) const {
  std::shared_lock lock(sessions_mu_);
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw Error(ErrorCode::UnknownSession, "no session '" + session_id + "'");
  return it->second;
}

void Service::persist(const Session& s) const {
  if (!config_.persist_dir) return;
  const fs::path dir(*config_.persist_dir);
  const fs::path tmp = dir / (s.id() + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << to_json(s).dump();
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, dir / (s.id() + ".json"), ec);
  if (ec) throw Error(ErrorCode::Io, "cannot replace session document: " + ec.message());
}

void Service::load_persisted() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(*config_.persist_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto st = std::make_shared<SessionState>();
    st->session = session_from_json(read_json_file(f.string()), *generator_);
    const std::string id = st->session->id();
    if (id.size() > 1 && id[0] == 's' &&
        std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; }) && id.size() < 19) {
      next_session_ = std::max<std::uint64_t>(next_session_, std::stoull(id.substr(1)) + 1);
    }
    sessions_[id] = std::move(st);
  }
}

std::vector<json> Service::events_after(const std::string& session_id, std::uint64_t after) const {
  auto st = state(session_id);
  std::lock_guard lock(st->mu);
  std::vector<json> out;
  for (const auto& e : st->session->events()) {
    if (e.seq > after) out.push_back(to_json(e, session_id));
  }
  return out;
}

bool Service::wait_events(const std::string& session_id, std::uint64_t after,
                          std::chrono::milliseconds timeout) const {
  auto st = state(session_id);
  auto has_new = [&] {
    std::lock_guard lock(st->mu);
    return st->session->last_seq() > after;
  };
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  std::unique_lock lock(events_mu_);
  for (;;) {
    const auto seen = events_version_;
    lock.unlock();
    if (has_new()) return true;
    lock.lock();
    if (closed_) return false;
    if (!events_cv_.wait_until(lock, deadline, [&] { return closed_ || events_version_ != seen; })) {
      lock.unlock();
      return has_new();
    }
  }
}

Response Service::handle(const Request& request) {
  try {
    return route(request);
  } catch (const Error& e) {
    return error_response(e);
  } catch (const json::exception& e) {
    return error_response(Error(ErrorCode::SchemaError, e.what()));
  } catch (const std::exception& e) {
    return {500,
            {{"error", {{"code", "Internal"}, {"message", e.what()}, {"details", json::object()}}},
             {"status_message", "Something went wrong."}}};
  }
}

json Service::create_session(const json& body) {
  Room room;
  if (body.contains("room")) {
    room = room_from_json(body.at("room"));
  } else if (body.contains("template")) {
    const std::string name = body.at("template").get<std::string>();
    if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos) {
      bad("bad template name");
    }
    const fs::path path = fs::path(config_.rooms_dir) / (name + ".json");
    if (!fs::exists(path)) throw Error(ErrorCode::InvalidArgument, "no room template '" + name + "'");
    room = room_from_file(path.string());
  } else {
    throw Error(ErrorCode::SchemaError, "a session needs a room or a template name");
  }
  auto st = std::make_shared<SessionState>();
  std::string id;
  {
    std::unique_lock lock(sessions_mu_);
    id = "s" + std::to_string(next_session_++);
    st->session = std::make_unique<Session>(id, room, *generator_);
    sessions_[id] = st;
  }
  std::lock_guard lock(st->mu);
  persist(*st->session);
  notify();
  return session_summary(*st->session);
}

Response Service::route(const Request& req) {
  const auto parts = split_path(req.path);
  if (parts.empty() || parts[0] != "v1") throw Error(ErrorCode::InvalidArgument, "unknown path " + req.path);
  const auto n = parts.size();
  const std::string& m = req.method;

  if (n == 2 && parts[1] == "health" && m == "GET") return {200, {{"status", "ok"}}};

  if (n >= 2 && parts[1] == "catalog" && m == "GET") {
    if (n == 3) return {200, to_json(catalog_.at(parts[2]))};
    std::optional<std::string> category;
    if (auto it = req.query.find("category"); it != req.query.end() && !it->second.empty()) category = it->second;
    const auto size = query_u64(req, "page_size", kDefaultPageSize);
    if (size == 0) bad("page_size must be positive");
    const auto index = query_u64(req, "page", 0);
    json items = json::array();
    for (const auto& s : catalog_.page(category, index, size)) items.push_back(to_json(s));
    return {200, {{"items", items}, {"page", index}, {"page_count", catalog_.page_count(category, size)}}};
  }

  if (n == 2 && parts[1] == "rooms" && m == "GET") {
    std::vector<std::string> names;
    if (fs::is_directory(config_.rooms_dir)) {
      for (const auto& e : fs::directory_iterator(config_.rooms_dir)) {
        if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
      }
    }
    std::sort(names.begin(), names.end());
    return {200, {{"rooms", names}}};
  }

  if (n == 2 && parts[1] == "events" && m == "GET") {
    const auto it = req.query.find("session");
    if (it == req.query.end()) bad("events need a session parameter");
    const auto since = query_u64(req, "since", 0);
    const auto wait = query_u64(req, "wait_ms", 0);
    if (wait > 0) wait_events(it->second, since, std::chrono::milliseconds(std::min<std::uint64_t>(wait, 60000)));
    const auto events = events_after(it->second, since);
    const std::uint64_t last = events.empty() ? since : events.back()["seq"].get<std::uint64_t>();
    return {200, {{"events", events}, {"last_seq", last}}};
  }

  if (n >= 2 && parts[1] == "sessions") {
    if (n == 2 && m == "POST") return {201, create_session(body_or_empty(req))};
    if (n == 2 && m == "GET") {
      std::shared_lock lock(sessions_mu_);
      std::vector<std::string> ids;
      for (const auto& [id, st] : sessions_) ids.push_back(id);
      return {200, {{"sessions", ids}}};
    }
    if (n == 3 && m == "DELETE") {
      std::shared_ptr<SessionState> st;
      {
        std::unique_lock lock(sessions_mu_);
        const auto it = sessions_.find(parts[2]);
        if (it == sessions_.end()) throw Error(ErrorCode::UnknownSession, "no session '" + parts[2] + "'");
        st = it->second;
        sessions_.erase(it);
      }
      if (config_.persist_dir) {
        std::error_code ec;
        fs::remove(fs::path(*config_.persist_dir) / (parts[2] + ".json"), ec);
      }
      notify();
      return {200, {{"deleted", parts[2]}}};
    }
    auto st = state(parts[2]);
    std::lock_guard lock(st->mu);
    const auto before = st->session->last_seq();
    Response r = session_route(*st, req, parts);
    if (st->session->last_seq() != before) {
      persist(*st->session);
      notify();
    }
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown path " + req.path);
}

Response Service::session_route(SessionState& st, const Request& req, const std::vector<std::string>& parts) {
  Session& s = *st.session;
  const auto n = parts.size();
  const std::string& m = req.method;
  const json& body = body_or_empty(req);

  if (n == 3 && m == "GET") return {200, session_summary(s)};
  if (n == 4 && parts[3] == "document" && m == "GET") return {200, to_json(s)};
  if (n == 4 && parts[3] == "events" && m == "GET") {
    const auto since = query_u64(req, "since", 0);
    json events = json::array();
    for (const auto& e : s.events()) {
      if (e.seq > since) events.push_back(to_json(e, s.id()));
    }
    return {200, {{"events", events}, {"last_seq", s.last_seq()}}};
  }
  if (n == 6 && parts[3] == "suggestions" && parts[5] == "choose" && m == "POST") {
    return {200, choose(st, parts[4], body)};
  }
  if (n >= 4 && parts[3] == "workspaces") {
    if (n == 4 && m == "GET") {
      json list = json::array();
      for (const auto& w : s.list_workspaces()) list.push_back(summary_json(w));
      return {200, {{"workspaces", list}}};
    }
    if (n == 4 && m == "POST") return {201, {{"ws_id", s.create_workspace()}}};
    if (n == 5 && parts[4] == "import" && m == "POST") {
      const json& doc = body.contains("workspace") ? body.at("workspace") : body;
      return {201, {{"ws_id", s.import_workspace(workspace_from_json(doc))}}};
    }
    const std::string& ws_id = parts[4];
    s.workspace(ws_id);
    return workspace_route(st, req, ws_id, {parts.begin() + 5, parts.end()});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown path " + req.path);
}

Response Service::workspace_route(SessionState& st, const Request& req, const std::string& ws_id,
                                  const std::vector<std::string>& rest) {
  Session& s = *st.session;
  const std::string& m = req.method;
  const json& body = body_or_empty(req);
  const auto n = rest.size();
  const std::string head = n ? rest[0] : "";

  if (n == 0 && m == "GET") return {200, to_json(s.workspace(ws_id))};
  if (n == 0 && m == "DELETE") {
    s.delete_workspace(ws_id);
    return {200, {{"deleted", ws_id}}};
  }
  if (n == 1 && head == "export" && m == "GET") return {200, to_json(s.workspace(ws_id))};
  if (n == 1 && head == "activate" && m == "POST") {
    s.switch_workspace(ws_id);
    return {200, {{"active", ws_id}}};
  }
  if (n == 1 && head == "commands" && m == "POST") return {200, run_command(st, ws_id, body)};
  if (n == 1 && head == "suggestions" && m == "POST") {
    if (!body.contains("location")) throw Error(ErrorCode::SchemaError, "missing 'location'");
    const CatalogFilter filter = body.contains("filter") ? filter_from_json(body.at("filter")) : CatalogFilter{};
    return {200, offer(st, ws_id, vec_of(body.at("location"), "location"), filter, config_for(body, s.workspace(ws_id)))};
  }
  if (n == 1 && head == "validate" && (m == "GET" || m == "POST")) {
    const DesignGoals goals = body.contains("goals") ? goals_from_json(body.at("goals")) : DesignGoals{};
    const auto& ws = s.workspace(ws_id);
    return {200, to_json(validate_layout(ws.room(), ws.object_list(), catalog_, goals))};
  }
  if (n == 1 && m == "POST") {
    if (head == "complete") {
      const auto r = complete(s, ws_id, config_for(body, s.workspace(ws_id)));
      return {200, mutation_json(r, "Added " + plural(r.new_ids.size(), "item") + ".")};
    }
    if (head == "populate") {
      const auto r = s.populate(ws_id, config_for(body, s.workspace(ws_id)));
      return {200, mutation_json(r, "Populated " + plural(r.new_ids.size(), "wireframe") + ".")};
    }
    if (head == "abstract") return {200, mutation_json(s.abstract(ws_id))};
    if (head == "copy") {
      const auto ids = id_list(body, "ids");
      return {200, {{"copied", s.copy(ws_id, ids)}}};
    }
    if (head == "paste") {
      std::optional<Vec2> anchor;
      if (body.contains("anchor") && !body.at("anchor").is_null()) anchor = vec_of(body.at("anchor"), "anchor");
      return {200, mutation_json(s.paste(ws_id, anchor))};
    }
  }
  if (head == "objects") {
    if (n == 1 && m == "POST") {
      if (!body.contains("spec_id") || !body.contains("at")) throw Error(ErrorCode::SchemaError, "need spec_id and at");
      return {201, mutation_json(s.add_object(ws_id, body.at("spec_id").get<std::string>(), vec_of(body.at("at"), "at"),
                                              number_of(body, "rotation", 0.0), number_of(body, "scale", 1.0)))};
    }
    if (n == 2 && rest[1] == "delete" && m == "POST") {
      const auto ids = id_list(body, "ids");
      return {200, mutation_json(s.delete_objects(ws_id, ids))};
    }
    if (n == 2 && rest[1] == "duplicate" && m == "POST") {
      const auto ids = id_list(body, "ids");
      return {200, mutation_json(s.duplicate_objects(ws_id, ids))};
    }
    if (n == 2 && m == "DELETE") {
      const std::vector<std::string> ids{rest[1]};
      return {200, mutation_json(s.delete_objects(ws_id, ids))};
    }
    if (n == 2 && m == "PATCH") {
      const int ops = body.contains("move") + body.contains("rotation") + body.contains("scale_factor");
      if (ops != 1) throw Error(ErrorCode::SchemaError, "give exactly one of move, rotation, scale_factor");
      if (body.contains("move")) return {200, mutation_json(s.move_object(ws_id, rest[1], vec_of(body.at("move"), "move")))};
      if (body.contains("rotation")) return {200, mutation_json(s.rotate_object(ws_id, rest[1], number_of(body, "rotation", 0.0)))};
      return {200, mutation_json(s.rescale_object(ws_id, rest[1], number_of(body, "scale_factor", 1.0)))};
    }
    if (n == 3 && rest[2] == "regenerate" && m == "POST") {
      const CatalogFilter filter = body.contains("filter") ? filter_from_json(body.at("filter")) : CatalogFilter{};
      return {200, mutation_json(s.regenerate_object(ws_id, rest[1], filter, config_for(body, s.workspace(ws_id))))};
    }
  }
  if (head == "wireframes") {
    if (n == 1 && m == "POST") {
      if (body.contains("stroke")) {
        geom::Polygon stroke;
        for (const auto& p : body.at("stroke")) stroke.push_back(vec_of(p, "stroke point"));
        return {201, mutation_json(s.add_wireframe_from_stroke(ws_id, stroke, body.value("label", std::string())))};
      }
      json doc = body;
      if (!doc.contains("id")) doc["id"] = "";
      return {201, mutation_json(s.add_wireframe(ws_id, wireframe_from_json(doc)))};
    }
    if (n == 2 && rest[1] == "generate" && m == "POST") {
      return {200, mutation_json(s.generate_wireframes(ws_id, config_for(body, s.workspace(ws_id))))};
    }
    if (n == 2 && m == "PUT") {
      json doc = body;
      doc["id"] = rest[1];
      return {200, mutation_json(s.update_wireframe(ws_id, wireframe_from_json(doc)))};
    }
    if (n == 2 && m == "DELETE") {
      const std::vector<std::string> ids{rest[1]};
      return {200, mutation_json(s.delete_wireframes(ws_id, ids))};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown path " + req.path);
}

MutationResult Service::complete(Session& s, const std::string& ws_id, const GenConfig& config) {
  if (!config_.backend) return s.complete(ws_id, config);
  const auto& ws = s.workspace(ws_id);
  return s.add_generated(ws_id, remote_complete(*config_.backend, ws.room(), ws.object_list(), catalog_, config.lamp_drop));
}

json Service::offer(SessionState& st, const std::string& ws_id, Vec2 location, const CatalogFilter& filter,
                    const GenConfig& config) {
  const auto& ws = st.session->workspace(ws_id);
  auto candidates = generator_->suggest_objects(ws.room(), ws.object_list(), location, filter, config);
  Pending p;
  p.id = "sg" + std::to_string(st.next_suggestion++);
  p.ws_id = ws_id;
  p.revision = ws.revision();
  p.candidates = std::move(candidates);
  json list = json::array();
  for (const auto& c : p.candidates) list.push_back(to_json(c));
  json out = {{"suggestion_id", p.id},
              {"ws_id", ws_id},
              {"expires", p.revision + 1},
              {"candidates", list},
              {"status_message", "Here " + std::string(p.candidates.size() == 1 ? "is " : "are ") +
                                     plural(p.candidates.size(), "suggestion") + "."}};
  st.pending[p.id] = std::move(p);
  return out;
}

json Service::choose(SessionState& st, const std::string& suggestion_id, const json& body) {
  const auto it = st.pending.find(suggestion_id);
  if (it == st.pending.end()) throw Error(ErrorCode::UnknownSuggestion, "no suggestion '" + suggestion_id + "'");
  Pending& p = it->second;
  if (p.resolved) throw Error(ErrorCode::AlreadyResolved, "suggestion '" + suggestion_id + "' was already chosen");
  const Workspace* ws = nullptr;
  try {
    ws = &st.session->workspace(p.ws_id);
  } catch (const Error&) {
    throw Error(ErrorCode::SuggestionExpired, "the workspace of '" + suggestion_id + "' is gone");
  }
  if (ws->revision() != p.revision) {
    throw Error(ErrorCode::SuggestionExpired, "the workspace changed after '" + suggestion_id + "' was offered");
  }
  if (!body.contains("index") || !body.at("index").is_number_integer()) {
    throw Error(ErrorCode::SchemaError, "choose needs an integer index");
  }
  const auto index = body.at("index").get<long long>();
  if (index < 0 || index >= static_cast<long long>(p.candidates.size())) {
    bad("index out of range (0.." + std::to_string(p.candidates.size() - 1) + ")");
  }
  const Suggestion& c = p.candidates[static_cast<std::size_t>(index)];
  SceneObject o;
  o.spec_id = c.spec.spec_id;
  o.position = c.pose.position;
  o.yaw = c.pose.yaw;
  o.scale = c.pose.scale;
  const std::vector<SceneObject> objs{o};
  const auto r = st.session->add_objects(p.ws_id, objs);
  p.resolved = true;
  p.candidates.clear();
  return mutation_json(r, "Added the " + c.spec.category + ".");
}

json Service::run_command(SessionState& st, const std::string& ws_id, const json& body) {
  Session& s = *st.session;
  const Command command = command_from_json(body.contains("command") ? body.at("command") : body);
  const ParseResult parsed = llm_ ? llm_->parse(command) : parser_->parse(command);
  const Intent& in = parsed.intent;
  const auto& ws = s.workspace(ws_id);
  const GenConfig config = config_for(body, ws);
  json out = {{"intent", to_json(parsed)}};

  auto mutation = [&](const MutationResult& r, const std::string& message) {
    out["effect"] = {{"type", "mutation"}, {"result", to_json(r)}};
    out["status_message"] = message;
  };

  switch (in.kind) {
    case IntentKind::ObjectGeneration: {
      if (!in.location) throw Error(ErrorCode::MissingDeixis, "generation needs a location");
      json offered = offer(st, ws_id, *in.location, in.filter, config);
      out["status_message"] = offered["status_message"];
      offered.erase("status_message");
      out["effect"] = {{"type", "suggestions"}, {"pending", offered}};
      break;
    }
    case IntentKind::SceneCompletion: {
      const auto r = complete(s, ws_id, config);
      mutation(r, r.warnings.empty() ? "Added " + plural(r.new_ids.size(), "item") + "."
                                     : "Added " + plural(r.new_ids.size(), "item") + ", but some did not fit.");
      break;
    }
    case IntentKind::WireframeGeneration: {
      const auto r = s.generate_wireframes(ws_id, config);
      mutation(r, "Sketched " + plural(r.new_ids.size(), "wireframe") + ".");
      break;
    }
    case IntentKind::WireframeLabelling: {
      if (!in.targets.region) throw Error(ErrorCode::MissingDeixis, "labelling needs a stroke");
      const auto r = s.add_wireframe_from_stroke(ws_id, *in.targets.region, in.label);
      mutation(r, "Marked the area as " + in.label + ".");
      break;
    }
    case IntentKind::Deletion: {
      const auto t = resolve_targets(ws, in.targets, catalog_, true);
      MutationResult r;
      if (!t.objects.empty() && !t.wireframes.empty()) {
        // One event per kind keeps each mutation atomic.
        r = s.delete_objects(ws_id, t.objects);
        r = s.delete_wireframes(ws_id, t.wireframes);
      } else if (!t.objects.empty()) {
        r = s.delete_objects(ws_id, t.objects);
      } else {
        r = s.delete_wireframes(ws_id, t.wireframes);
      }
      mutation(r, "Deleted " + plural(t.objects.size() + t.wireframes.size(), "item") + ".");
      break;
    }
    case IntentKind::ObjectDuplication: {
      const auto t = resolve_targets(ws, in.targets, catalog_, false);
      const auto r = s.duplicate_objects(ws_id, t.objects);
      mutation(r, "Duplicated " + plural(t.objects.size(), "item") + ".");
      break;
    }
    case IntentKind::ObjectRegeneration: {
      const auto t = resolve_targets(ws, in.targets, catalog_, false);
      MutationResult r;
      std::vector<std::string> fresh;
      std::vector<GenWarning> warnings;
      for (const auto& id : t.objects) {
        r = s.regenerate_object(ws_id, id, in.filter, config);
        fresh.insert(fresh.end(), r.new_ids.begin(), r.new_ids.end());
        warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
      }
      r.new_ids = fresh;
      r.warnings = warnings;
      mutation(r, "Replaced " + plural(t.objects.size(), "item") + ".");
      break;
    }
  }
  return out;
}

struct HttpFrontend::Impl {
  explicit Impl(Service& s) : service(s) {}
  Service& service;
  httplib::Server server;
};

namespace {

void reply(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

Request to_request(const httplib::Request& req) {
  Request r;
  r.method = req.method;
  r.path = req.path;
  for (const auto& [k, v] : req.params) r.query[k] = v;
  if (!req.body.empty()) r.body = json::parse(req.body);
  return r;
}

bool wants_stream(const httplib::Request& req) {
  return req.get_header_value("Accept").find("text/event-stream") != std::string::npos;
}

}  // namespace

HttpFrontend::HttpFrontend(Service& service) : impl_(std::make_unique<Impl>(service)) {
  Impl& im = *impl_;
  auto dispatch = [&im](const httplib::Request& req, httplib::Response& res) {
    Request r;
    try {
      r = to_request(req);
    } catch (const json::exception& e) {
      reply(res, error_response(Error(ErrorCode::SchemaError, std::string("body is not JSON: ") + e.what())));
      return;
    }
    reply(res, im.service.handle(r));
  };
  // Live event stream: GET /v1/events?session=<id>&since=<seq> with Accept: text/event-stream.
  im.server.Get("/v1/events", [&im, dispatch](const httplib::Request& req, httplib::Response& res) {
    if (!wants_stream(req)) return dispatch(req, res);
    const std::string sid = req.get_param_value("session");
    std::uint64_t since = 0;
    try {
      if (req.has_param("since")) since = std::stoull(req.get_param_value("since"));
      im.service.events_after(sid, 0);
    } catch (const Error& e) {
      return reply(res, error_response(e));
    } catch (const std::exception&) {
      return reply(res, error_response(Error(ErrorCode::InvalidArgument, "since must be an integer")));
    }
    res.set_header("Cache-Control", "no-cache");
    res.set_chunked_content_provider("text/event-stream", [&im, sid, since](std::size_t, httplib::DataSink& sink) mutable {
      try {
        for (const auto& e : im.service.events_after(sid, since)) {
          since = e["seq"].get<std::uint64_t>();
          const std::string frame = "id: " + std::to_string(since) + "\nevent: " + e["type"].get<std::string>() +
                                    "\ndata: " + e.dump() + "\n\n";
          if (!sink.write(frame.data(), frame.size())) return false;
        }
        if (im.service.closed()) {
          sink.done();
          return true;
        }
        if (!im.service.wait_events(sid, since, std::chrono::milliseconds(15000))) {
          static const std::string ping = ": ping\n\n";
          if (!sink.write(ping.data(), ping.size())) return false;
        }
        return true;
      } catch (const Error&) {
        sink.done();
        return true;
      }
    });
  });
  im.server.Get(".*", dispatch);
  im.server.Post(".*", dispatch);
  im.server.Put(".*", dispatch);
  im.server.Patch(".*", dispatch);
  im.server.Delete(".*", dispatch);
}

HttpFrontend::~HttpFrontend() { stop(); }

int HttpFrontend::bind(const std::string& host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  if (bound < 0) throw Error(ErrorCode::Io, "cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpFrontend::listen() { impl_->server.listen_after_bind(); }

void HttpFrontend::stop() {
  impl_->service.close();
  impl_->server.stop();
}

}  // namespace cocreate
