#pragma once

// Optional command parser backed by an external language-model service. The
// service receives
//   POST <endpoint>  {"command": {...}, "vocabulary": {...}, "intents": [...]}
// with "Authorization: Bearer <key>" and must answer with a parse result
// document ({intent, ignored_terms, confidence}). Anything else, including
// timeouts, falls back to the grammar parser and is flagged fuzzy.

#include <chrono>
#include <memory>
#include <optional>
#include <string>

#include "cocreate/intent.hpp"

namespace cocreate {

struct LlmConfig {
  std::string endpoint;  // http://host[:port]/path
  std::string api_key;
  std::chrono::milliseconds timeout{5000};
  int max_in_flight = 4;

  // COCREATE_LLM_ENDPOINT, COCREATE_LLM_API_KEY, COCREATE_LLM_TIMEOUT_MS,
  // COCREATE_LLM_MAX_IN_FLIGHT. Empty when no endpoint is set.
  static std::optional<LlmConfig> from_env();
};

class LlmParser {
 public:
  // `fallback` must outlive the parser.
  LlmParser(const IntentParser& fallback, LlmConfig config);
  ~LlmParser();
  LlmParser(const LlmParser&) = delete;
  LlmParser& operator=(const LlmParser&) = delete;

  // Same contract as IntentParser::parse. Grammar-parser errors propagate.
  ParseResult parse(const Command& command) const;

  // The reply checks used by parse: throws SchemaViolation.
  ParseResult check_reply(const std::string& body, const Command& command) const;

 private:
  struct Impl;
  const IntentParser& fallback_;
  LlmConfig config_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cocreate
