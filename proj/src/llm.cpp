#include "cocreate/llm.hpp"

#include <cstdlib>
#include <semaphore>

#include <httplib.h>

#include "cocreate/error.hpp"
#include "cocreate/serialize.hpp"

namespace cocreate {

namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorCode::SchemaViolation, what); }

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

int env_int(const char* name, int fallback) {
  const auto v = env(name);
  if (!v) return fallback;
  try {
    return std::stoi(*v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " is not an integer");
  }
}

struct Url {
  std::string origin;  // scheme://host:port
  std::string path;
};

Url split_url(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos || url.compare(0, scheme, "http") != 0) {
    throw Error(ErrorCode::InvalidArgument, "LLM endpoint must be an http:// URL");
  }
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

void check_term(const std::optional<std::string>& v, const std::set<std::string>& vocab, const char* field) {
  if (v && !vocab.count(*v)) violation(std::string("unknown ") + field + " '" + *v + "'");
}

}  // namespace

std::optional<LlmConfig> LlmConfig::from_env() {
  auto endpoint = env("COCREATE_LLM_ENDPOINT");
  if (!endpoint) return std::nullopt;
  LlmConfig c;
  c.endpoint = *endpoint;
  c.api_key = env("COCREATE_LLM_API_KEY").value_or("");
  c.timeout = std::chrono::milliseconds(env_int("COCREATE_LLM_TIMEOUT_MS", 5000));
  c.max_in_flight = env_int("COCREATE_LLM_MAX_IN_FLIGHT", 4);
  return c;
}

struct LlmParser::Impl {
  explicit Impl(int slots) : in_flight(slots) {}
  std::counting_semaphore<1024> in_flight;
  Url url;
};

LlmParser::LlmParser(const IntentParser& fallback, LlmConfig config)
    : fallback_(fallback), config_(std::move(config)) {
  if (config_.max_in_flight < 1 || config_.max_in_flight > 1024) {
    throw Error(ErrorCode::InvalidArgument, "max_in_flight must be in [1, 1024]");
  }
  if (config_.timeout.count() <= 0) throw Error(ErrorCode::InvalidArgument, "timeout must be positive");
  impl_ = std::make_unique<Impl>(config_.max_in_flight);
  impl_->url = split_url(config_.endpoint);
}

LlmParser::~LlmParser() = default;

ParseResult LlmParser::check_reply(const std::string& body, const Command& command) const {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    violation(std::string("reply is not JSON: ") + e.what());
  }
  ParseResult r;
  try {
    r = parse_result_from_json(j);
  } catch (const Error& e) {
    violation(e.what());
  }
  const auto& vocab = fallback_.vocabulary();
  const Intent& in = r.intent;
  check_term(in.filter.category, vocab.categories, "category");
  check_term(in.filter.style, vocab.styles, "style");
  check_term(in.filter.material, vocab.materials, "material");
  check_term(in.targets.category, vocab.categories, "target category");

  if (in.location != command.pointer && in.kind == IntentKind::ObjectGeneration) {
    violation("generation location must be the pointer");
  }
  if (in.kind != IntentKind::ObjectGeneration && in.location) violation("location is only for generation");
  if (in.targets.at && in.targets.at != command.pointer) violation("target point differs from the pointer");
  if (in.targets.region && in.targets.region != command.stroke) violation("target region differs from the stroke");
  for (const auto& id : in.targets.ids) {
    if (std::find(command.selection.begin(), command.selection.end(), id) == command.selection.end()) {
      violation("target '" + id + "' is not selected");
    }
  }
  const int set_members = (!in.targets.ids.empty()) + in.targets.at.has_value() + in.targets.region.has_value() +
                          in.targets.category.has_value();
  switch (in.kind) {
    case IntentKind::ObjectRegeneration:
    case IntentKind::ObjectDuplication:
    case IntentKind::Deletion:
      if (set_members != 1) violation("exactly one target reference required");
      break;
    case IntentKind::WireframeLabelling:
      if (!command.stroke || in.targets.region != command.stroke) violation("labelling needs the stroke as region");
      if (!vocab.categories.count(in.label)) violation("label '" + in.label + "' is not a category");
      break;
    default:
      if (set_members != 0) violation("intent takes no targets");
  }
  if (in.kind != IntentKind::WireframeLabelling && !in.label.empty()) violation("label is only for labelling");
  return r;
}

ParseResult LlmParser::parse(const Command& command) const {
  const json request = {{"command", to_json(command)},
                        {"vocabulary",
                         {{"categories", fallback_.vocabulary().categories},
                          {"styles", fallback_.vocabulary().styles},
                          {"materials", fallback_.vocabulary().materials}}},
                        {"intents",
                         {"ObjectGeneration", "ObjectRegeneration", "ObjectDuplication", "SceneCompletion",
                          "WireframeGeneration", "WireframeLabelling", "Deletion"}}};
  std::optional<std::string> body;
  {
    impl_->in_flight.acquire();
    struct Release {
      std::counting_semaphore<1024>& s;
      ~Release() { s.release(); }
    } release{impl_->in_flight};

    httplib::Client client(impl_->url.origin);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());
    httplib::Headers headers;
    if (!config_.api_key.empty()) headers.emplace("Authorization", "Bearer " + config_.api_key);
    const auto res = client.Post(impl_->url.path, headers, request.dump(), "application/json");
    if (res && res->status == 200) body = res->body;
  }
  if (body) {
    try {
      return check_reply(*body, command);
    } catch (const Error&) {
    }
  }
  ParseResult r = fallback_.parse(command);
  r.confidence = Confidence::Fuzzy;
  return r;
}

}  // namespace cocreate
