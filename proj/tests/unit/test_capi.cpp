#include <atomic>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "doctest.h"

#include "cocreate/cocreate.h"
#include "cocreate/error.hpp"
#include "cocreate/render.hpp"
#include "cocreate/serialize.hpp"
#include "cocreate/validate.hpp"
#include "cocreate/workspace.hpp"
#include "support.hpp"

using namespace cocreate;
using testsupport::Env;

namespace {

struct Engine {
  cc_engine_t* e = nullptr;
  Engine() {
    const auto cat = testsupport::data_path("catalog.json"), pri = testsupport::data_path("priors.json"),
               syn = testsupport::data_path("synonyms.json");
    REQUIRE(cc_engine_open(cat.c_str(), pri.c_str(), syn.c_str(), &e) == CC_OK);
  }
  ~Engine() { cc_engine_close(e); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  cc_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("status names follow the error codes") {
  CHECK(std::string(cc_status_name(CC_OK)) == "Ok");
  CHECK(std::string(cc_status_name(CC_PASTE_BLOCKED)) == "PasteBlocked");
  CHECK(std::string(cc_status_name(CC_OUT_OF_BOUNDS)) == "OutOfBounds");
  CHECK(std::string(cc_status_name(CC_INVALID_ARGUMENT)) == "InvalidArgument");
  CHECK(std::string(cc_status_name(CC_INTERNAL)) == "Internal");
  CHECK(std::string(cc_status_name(static_cast<cc_status>(77))) == "Unknown");
  for (int c = 0; c <= static_cast<int>(ErrorCode::OutOfBounds); ++c) {
    CHECK(std::string(cc_status_name(static_cast<cc_status>(c + 1))) == to_string(static_cast<ErrorCode>(c)));
  }
}

TEST_CASE("engine errors set the thread's last error") {
  cc_engine_t* e = nullptr;
  CHECK(cc_engine_open("/nonexistent/catalog.json", nullptr, nullptr, &e) == CC_IO);
  CHECK(e == nullptr);
  CHECK(std::strlen(cc_last_error()) > 0);
  CHECK(cc_engine_open(nullptr, nullptr, nullptr, nullptr) == CC_INVALID_ARGUMENT);

  Engine eng;
  char* out = nullptr;
  CHECK(cc_generate(eng.e, "{not json", 1, &out) == CC_SCHEMA_ERROR);
  CHECK(out == nullptr);
  CHECK(cc_generate(eng.e, R"({"id":"x","room_type":"bedroom","footprint":[[0,0],[1,0]],"ceiling_height":2.5,"openings":[]})", 1,
                    &out) == CC_INVALID_ROOM);
  CHECK(cc_parse(eng.e, R"({"text":"generate a chair here"})", &out) == CC_MISSING_DEIXIS);
  CHECK(cc_parse(eng.e, R"({"text":"fill the room"})", &out) == CC_OK);
  CHECK(std::string(cc_last_error()).empty());
  cc_string_free(out);

  // Messages are per thread.
  std::thread([&] { CHECK(std::string(cc_last_error()).empty()); }).join();
}

TEST_CASE("engine calls equal the library calls they wrap") {
  Engine eng;
  const auto room_text = slurp(testsupport::data_path("rooms/living_6x4.json"));
  char* out = nullptr;
  REQUIRE(cc_generate(eng.e, room_text.c_str(), 42, &out) == CC_OK);
  const std::string generated = take(out);
  REQUIRE(cc_generate(eng.e, room_text.c_str(), 42, &out) == CC_OK);
  CHECK(take(out) == generated);

  Session s("x", testsupport::room("living_6x4"), Env::get().gen());
  GenConfig cfg;
  cfg.seed = 42;
  s.complete("ws-1", cfg);
  CHECK(json::parse(generated) == to_json(s.workspace("ws-1")));

  // Abstract then populate keeps the workspace id and matches a session doing the same.
  REQUIRE(cc_abstract(eng.e, generated.c_str(), &out) == CC_OK);
  const std::string abstracted = take(out);
  s.abstract("ws-1");
  CHECK(json::parse(abstracted) == to_json(s.workspace("ws-1")));
  REQUIRE(cc_populate(eng.e, abstracted.c_str(), 7, &out) == CC_OK);
  const std::string populated = take(out);
  cfg.seed = 7;
  s.populate("ws-1", cfg);
  CHECK(json::parse(populated) == to_json(s.workspace("ws-1")));

  int passed = -1;
  REQUIRE(cc_validate(eng.e, populated.c_str(), nullptr, &out, &passed) == CC_OK);
  const auto objects = s.workspace("ws-1").object_list();
  const auto report = validate_layout(s.workspace("ws-1").room(), objects, Env::get().catalog, {});
  CHECK(json::parse(take(out)) == to_json(report));
  CHECK(passed == (report.all_passed() ? 1 : 0));

  REQUIRE(cc_render(eng.e, populated.c_str(), &out) == CC_OK);
  CHECK(take(out) == render_svg(s.workspace("ws-1"), Env::get().catalog));

  REQUIRE(cc_validate(eng.e, populated.c_str(), R"({"grid_cell": -1})", &out, &passed) == CC_SCHEMA_ERROR);
  REQUIRE(cc_validate(eng.e, populated.c_str(), R"({"min_furniture_types": 99})", &out, &passed) == CC_OK);
  cc_string_free(out);
  CHECK(passed == 0);
}

TEST_CASE("documents with unknown specs are rejected") {
  Engine eng;
  json ws = json::parse(slurp(testsupport::fixture_path("validate/bedroom_ok.json")));
  ws["objects"][0]["spec_id"] = "no_such_spec";
  char* out = nullptr;
  CHECK(cc_validate(eng.e, ws.dump().c_str(), nullptr, &out, nullptr) == CC_SCHEMA_ERROR);
  CHECK(cc_render(eng.e, ws.dump().c_str(), &out) == CC_SCHEMA_ERROR);
  CHECK(out == nullptr);
}

TEST_CASE("service handle and serve through the C interface") {
  Engine eng;
  cc_service_t* svc = nullptr;
  const json config = {{"rooms_dir", testsupport::data_path("rooms")}};
  CHECK(cc_service_open(eng.e, R"({"bogus": 1})", &svc) == CC_SCHEMA_ERROR);
  REQUIRE(cc_service_open(eng.e, config.dump().c_str(), &svc) == CC_OK);

  int status = 0;
  char* body = nullptr;
  REQUIRE(cc_service_handle(svc, "POST", "/v1/sessions", nullptr, R"({"template":"bedroom_4x3"})", &status, &body) == CC_OK);
  CHECK(status == 201);
  const std::string sid = json::parse(take(body))["session_id"];
  REQUIRE(cc_service_handle(svc, "GET", "/v1/catalog", R"({"category":"bed","page_size":"2"})", nullptr, &status, &body) ==
          CC_OK);
  CHECK(json::parse(take(body))["items"].size() == 2);
  REQUIRE(cc_service_handle(svc, "GET", ("/v1/sessions/" + sid + "/workspaces/ws-7").c_str(), nullptr, nullptr, &status,
                            &body) == CC_OK);
  CHECK(status == 404);
  CHECK(json::parse(take(body))["error"]["code"] == "UnknownWorkspace");
  CHECK(cc_service_handle(svc, "GET", "/v1/health", nullptr, "{oops", &status, &body) == CC_SCHEMA_ERROR);

  std::atomic<int> port{0};
  std::thread server([&] {
    CHECK(cc_service_serve(svc, "127.0.0.1", 0, [](int p, void* user) { *static_cast<std::atomic<int>*>(user) = p; },
                           &port) == CC_OK);
  });
  for (int i = 0; i < 500 && port == 0; ++i) std::this_thread::sleep_for(std::chrono::milliseconds(10));
  REQUIRE(port > 0);
  httplib::Client client("127.0.0.1", port);
  auto res = client.Get(("/v1/sessions/" + sid).c_str());
  REQUIRE(res);
  CHECK(res->status == 200);
  cc_service_stop(svc);
  server.join();
  cc_service_close(svc);
}
