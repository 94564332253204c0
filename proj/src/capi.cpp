#include "cocreate/cocreate.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>

#include "cocreate/render.hpp"
#include "cocreate/serialize.hpp"
#include "cocreate/service.hpp"
#include "cocreate/validate.hpp"
#include "cocreate/workspace.hpp"

using namespace cocreate;

struct cc_engine {
  Catalog catalog;
  PriorTable priors;
  Synonyms synonyms;
  std::unique_ptr<Generator> generator;
  std::unique_ptr<IntentParser> parser;
};

struct cc_service {
  std::unique_ptr<Service> service;
  std::mutex mu;
  HttpFrontend* http = nullptr;
  bool stopped = false;
};

namespace {

thread_local std::string last_error;

cc_status fail(cc_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
cc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CC_OK;
  } catch (const Error& e) {
    return fail(static_cast<cc_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const json::exception& e) {
    return fail(CC_SCHEMA_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(CC_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

json parse_doc(const char* text, const char* what) {
  need(text, what);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string(what) + " is not JSON: " + e.what());
  }
}

std::string data_file(const char* path, const char* name) {
  if (path) return path;
  const char* dir = std::getenv("COCREATE_DATA_DIR");
  if (!dir || !*dir) {
    throw Error(ErrorCode::InvalidArgument, std::string("no path for ") + name + " and COCREATE_DATA_DIR is unset");
  }
  return std::string(dir) + "/" + name;
}

// A throwaway session holding exactly the given workspace, id unchanged.
std::unique_ptr<Session> session_for(const cc_engine& e, const Workspace& ws) {
  auto s = std::make_unique<Session>("capi", ws.room(), *e.generator);
  std::uint64_t next = 1;
  if (ws.id().rfind("ws-", 0) == 0) {
    try {
      next = std::stoull(ws.id().substr(3)) + 1;
    } catch (const std::exception&) {
    }
  }
  s->restore({ws}, 0, {}, next, {});
  return s;
}

Workspace checked_workspace(const cc_engine& e, const char* text) {
  Workspace ws = workspace_from_json(parse_doc(text, "workspace"));
  validate_room(ws.room());
  for (const auto& o : ws.object_list()) e.catalog.at(o.spec_id);
  return ws;
}

}  // namespace

extern "C" {

const char* cc_status_name(cc_status status) {
  if (status == CC_OK) return "Ok";
  if (status == CC_INTERNAL) return "Internal";
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ErrorCode::OutOfBounds)) return "Unknown";
  return to_string(static_cast<ErrorCode>(code)).data();
}

const char* cc_last_error(void) { return last_error.c_str(); }

void cc_string_free(char* s) { std::free(s); }

cc_status cc_engine_open(const char* catalog_path, const char* priors_path, const char* synonyms_path,
                         cc_engine_t** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    auto e = std::make_unique<cc_engine>();
    e->catalog = Catalog::from_file(data_file(catalog_path, "catalog.json"));
    e->priors = PriorTable::from_file(data_file(priors_path, "priors.json"));
    e->priors.check_against(e->catalog);
    e->synonyms = Synonyms::from_file(data_file(synonyms_path, "synonyms.json"));
    e->generator = std::make_unique<Generator>(e->catalog, e->priors);
    e->parser = std::make_unique<IntentParser>(e->catalog.vocabulary(), e->synonyms);
    *out = e.release();
  });
}

void cc_engine_close(cc_engine_t* engine) { delete engine; }

cc_status cc_generate(cc_engine_t* engine, const char* room_json, uint64_t seed, char** out_workspace_json) {
  return guarded([&] {
    need(engine, "engine");
    need(out_workspace_json, "out");
    const Room room = room_from_json(parse_doc(room_json, "room"));
    Session s("capi", room, *engine->generator);
    GenConfig config;
    config.seed = seed;
    s.complete(s.active().id(), config);
    *out_workspace_json = copy_out(to_json(s.active()).dump(2));
  });
}

cc_status cc_populate(cc_engine_t* engine, const char* workspace_json, uint64_t seed, char** out_workspace_json) {
  return guarded([&] {
    need(engine, "engine");
    need(out_workspace_json, "out");
    auto s = session_for(*engine, checked_workspace(*engine, workspace_json));
    GenConfig config;
    config.seed = seed;
    s->populate(s->active().id(), config);
    *out_workspace_json = copy_out(to_json(s->active()).dump(2));
  });
}

cc_status cc_abstract(cc_engine_t* engine, const char* workspace_json, char** out_workspace_json) {
  return guarded([&] {
    need(engine, "engine");
    need(out_workspace_json, "out");
    auto s = session_for(*engine, checked_workspace(*engine, workspace_json));
    s->abstract(s->active().id());
    *out_workspace_json = copy_out(to_json(s->active()).dump(2));
  });
}

cc_status cc_validate(cc_engine_t* engine, const char* workspace_json, const char* goals_json, char** out_report_json,
                      int* all_passed) {
  return guarded([&] {
    need(engine, "engine");
    need(out_report_json, "out");
    const Workspace ws = checked_workspace(*engine, workspace_json);
    const DesignGoals goals = goals_json ? goals_from_json(parse_doc(goals_json, "goals")) : DesignGoals{};
    const auto objects = ws.object_list();
    const auto report = validate_layout(ws.room(), objects, engine->catalog, goals);
    *out_report_json = copy_out(to_json(report).dump(2));
    if (all_passed) *all_passed = report.all_passed() ? 1 : 0;
  });
}

cc_status cc_parse(cc_engine_t* engine, const char* command_json, char** out_result_json) {
  return guarded([&] {
    need(engine, "engine");
    need(out_result_json, "out");
    const Command command = command_from_json(parse_doc(command_json, "command"));
    *out_result_json = copy_out(to_json(engine->parser->parse(command)).dump());
  });
}

cc_status cc_render(cc_engine_t* engine, const char* workspace_json, char** out_svg) {
  return guarded([&] {
    need(engine, "engine");
    need(out_svg, "out");
    *out_svg = copy_out(render_svg(checked_workspace(*engine, workspace_json), engine->catalog));
  });
}

cc_status cc_service_open(cc_engine_t* engine, const char* config_json, cc_service_t** out) {
  return guarded([&] {
    need(engine, "engine");
    need(out, "out");
    *out = nullptr;
    ServiceConfig config;
    if (const char* dir = std::getenv("COCREATE_DATA_DIR"); dir && *dir) config.rooms_dir = std::string(dir) + "/rooms";
    if (config_json) {
      const json j = parse_doc(config_json, "config");
      if (!j.is_object()) throw Error(ErrorCode::SchemaError, "service config must be an object");
      for (const auto& [key, value] : j.items()) {
        if (key == "rooms_dir") {
          config.rooms_dir = value.get<std::string>();
        } else if (key == "persist_dir") {
          config.persist_dir = value.get<std::string>();
        } else if (key == "backend") {
          config.backend = RemoteBackend::parse(value.get<std::string>());
        } else {
          throw Error(ErrorCode::SchemaError, "unknown service option '" + key + "'");
        }
      }
    }
    config.llm = LlmConfig::from_env();
    auto s = std::make_unique<cc_service>();
    s->service = std::make_unique<Service>(engine->catalog, engine->priors, engine->synonyms, std::move(config));
    *out = s.release();
  });
}

void cc_service_close(cc_service_t* service) { delete service; }

cc_status cc_service_handle(cc_service_t* service, const char* method, const char* path, const char* query_json,
                            const char* body_json, int* out_status, char** out_body_json) {
  return guarded([&] {
    need(service, "service");
    need(method, "method");
    need(path, "path");
    need(out_status, "out_status");
    need(out_body_json, "out_body");
    Request req;
    req.method = method;
    req.path = path;
    if (query_json) {
      const json query = parse_doc(query_json, "query");
      if (!query.is_object()) throw Error(ErrorCode::SchemaError, "query must be an object");
      for (const auto& [k, v] : query.items()) {
        if (!v.is_string()) throw Error(ErrorCode::SchemaError, "query value '" + k + "' must be a string");
        req.query[k] = v.get<std::string>();
      }
    }
    if (body_json && *body_json) req.body = parse_doc(body_json, "body");
    const Response res = service->service->handle(req);
    *out_status = res.status;
    *out_body_json = copy_out(res.body.dump());
  });
}

cc_status cc_service_serve(cc_service_t* service, const char* host, int port, void (*on_bound)(int, void*),
                           void* user) {
  return guarded([&] {
    need(service, "service");
    need(host, "host");
    HttpFrontend http(*service->service);
    const int bound = http.bind(host, port);
    {
      std::lock_guard lock(service->mu);
      if (service->stopped) return;
      service->http = &http;
    }
    if (on_bound) on_bound(bound, user);
    http.listen();
    std::lock_guard lock(service->mu);
    service->http = nullptr;
  });
}

void cc_service_stop(cc_service_t* service) {
  if (!service) return;
  std::lock_guard lock(service->mu);
  service->stopped = true;
  if (service->http) service->http->stop();
}

}  // extern "C"
