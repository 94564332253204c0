// cocreate: batch generation, population, validation, intent debugging,
// rendering and serving. Everything goes through the C interface.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cocreate/cocreate.h"

namespace {

using nlohmann::json;

struct Failure {
  cc_status status;
  std::string message;
};

// Unique owner of a string handed out by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { cc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void check(cc_status s) {
  if (s != CC_OK) throw Failure{s, cc_last_error()};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{CC_IO, "cannot read " + path};
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw Failure{CC_IO, "cannot write " + path};
}

std::string default_data_dir() {
  if (const char* d = std::getenv("COCREATE_DATA_DIR"); d && *d) return d;
  return COCREATE_DEFAULT_DATA;
}

std::string print_table(const json& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %-6s %s\n", "check", "result", "details");
  out << line;
  for (const auto& c : report["checks"]) {
    std::string details;
    for (const auto& d : c["details"]) details += (details.empty() ? "" : "; ") + d.get<std::string>();
    std::snprintf(line, sizeof line, "%-18s %-6s %s\n", c["id"].get<std::string>().c_str(),
                  c["passed"].get<bool>() ? "pass" : "FAIL", details.c_str());
    out << line;
  }
  for (const auto& v : report["violations"]) {
    out << "violation " << v["kind"].get<std::string>() << ":";
    for (const auto& id : v["ids"]) out << ' ' << id.get<std::string>();
    out << '\n';
  }
  out << "score " << report["score"].get<int>() << "\n";
  return out.str();
}

volatile std::sig_atomic_t interrupted = 0;

void on_signal(int) { interrupted = 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indoor layout co-creation engine"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string data_dir = default_data_dir();
  std::string catalog, priors, synonyms, out;
  app.add_option("--catalog", catalog, "Catalog document");
  app.add_option("--priors", priors, "Prior table document");
  app.add_option("--synonyms", synonyms, "Synonym table document");
  app.add_option("--out", out, "Output file (stdout when absent or -)");

  std::string room;
  std::uint64_t seed = 0;
  auto* generate = app.add_subcommand("generate", "Furnish a room; prints the workspace document");
  generate->add_option("--room", room, "Room document (- for stdin)")->required();
  generate->add_option("--seed", seed, "Sampler seed");

  std::string input = "-";
  auto* populate = app.add_subcommand("populate", "Turn a workspace's wireframes into furniture");
  populate->add_option("workspace", input, "Workspace document (- for stdin)");
  populate->add_option("--seed", seed, "Sampler seed");

  std::string goals;
  bool quiet = false;
  auto* validate = app.add_subcommand("validate", "Check a workspace against design goals; exit 1 on failure");
  validate->add_option("workspace", input, "Workspace document (- for stdin)");
  validate->add_option("--goals", goals, "Design goals document");
  validate->add_flag("--quiet", quiet, "Skip the table on stderr");

  auto* parse = app.add_subcommand("parse", "Parse a JSON-lines command corpus; one result per line");
  parse->add_option("corpus", input, "Command corpus (- for stdin)");

  auto* render = app.add_subcommand("render", "Draw a workspace top-down as SVG");
  render->add_option("workspace", input, "Workspace document (- for stdin)");

  std::string host = "127.0.0.1", rooms, persist, backend;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the /v1 service");
  serve->add_option("--port", port, "Listen port (0 picks one)");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--rooms", rooms, "Room template directory");
  serve->add_option("--persist", persist, "Session persistence directory");
  serve->add_option("--backend", backend, "Remote layout backend host:port");

  CLI11_PARSE(app, argc, argv);

  cc_engine_t* engine = nullptr;
  cc_service_t* service = nullptr;
  int code = 0;
  try {
    auto path = [&](const std::string& flag, const char* name) { return flag.empty() ? data_dir + "/" + name : flag; };
    const std::string cat = path(catalog, "catalog.json"), pri = path(priors, "priors.json"),
                      syn = path(synonyms, "synonyms.json");
    check(cc_engine_open(cat.c_str(), pri.c_str(), syn.c_str(), &engine));

    if (*generate) {
      Owned doc;
      check(cc_generate(engine, read_input(room).c_str(), seed, &doc.p));
      write_output(out, doc.str());
    } else if (*populate) {
      Owned doc;
      check(cc_populate(engine, read_input(input).c_str(), seed, &doc.p));
      write_output(out, doc.str());
    } else if (*validate) {
      const std::string goals_doc = goals.empty() ? std::string() : read_input(goals);
      Owned report;
      int passed = 0;
      check(cc_validate(engine, read_input(input).c_str(), goals.empty() ? nullptr : goals_doc.c_str(), &report.p,
                        &passed));
      if (!quiet) std::cerr << print_table(json::parse(report.str()));
      write_output(out, report.str());
      code = passed ? 0 : 1;
    } else if (*parse) {
      std::istringstream lines(read_input(input));
      std::string result, line;
      while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Owned r;
        const cc_status s = cc_parse(engine, line.c_str(), &r.p);
        if (s == CC_OK) {
          result += r.str() + "\n";
        } else {
          result += json{{"error", cc_status_name(s)}, {"message", cc_last_error()}}.dump() + "\n";
        }
      }
      write_output(out, result);
    } else if (*render) {
      Owned svg;
      check(cc_render(engine, read_input(input).c_str(), &svg.p));
      write_output(out, svg.str());
    } else if (*serve) {
      json config = {{"rooms_dir", rooms.empty() ? data_dir + "/rooms" : rooms}};
      if (!persist.empty()) config["persist_dir"] = persist;
      if (!backend.empty()) config["backend"] = backend;
      check(cc_service_open(engine, config.dump().c_str(), &service));
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::atomic<bool> done{false};
      std::thread watcher([&] {
        while (!done && !interrupted) std::this_thread::sleep_for(std::chrono::milliseconds(100));
        cc_service_stop(service);
      });
      const cc_status s = cc_service_serve(
          service, host.c_str(), port,
          [](int bound, void*) { std::cerr << "listening on port " << bound << std::endl; }, nullptr);
      done = true;
      watcher.join();
      check(s);
    }
  } catch (const Failure& f) {
    std::cerr << json{{"error", {{"code", cc_status_name(f.status)}, {"message", f.message}}}}.dump() << "\n";
    code = 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    code = 2;
  }
  cc_service_close(service);
  cc_engine_close(engine);
  return code;
}
