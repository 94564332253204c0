#pragma once

#include <memory>
#include <string>

#include "cocreate/catalog.hpp"
#include "cocreate/generator.hpp"
#include "cocreate/intent.hpp"
#include "cocreate/priors.hpp"
#include "cocreate/serialize.hpp"

namespace testsupport {

inline std::string data_path(const std::string& rel) { return std::string(COCREATE_TEST_DATA) + "/" + rel; }
inline std::string fixture_path(const std::string& rel) {
  return std::string(COCREATE_TEST_FIXTURES) + "/" + rel;
}

// Shared catalog, priors and parser loaded once per process.
struct Env {
  cocreate::Catalog catalog;
  cocreate::PriorTable priors;
  cocreate::Synonyms synonyms;
  std::unique_ptr<cocreate::Generator> generator;
  std::unique_ptr<cocreate::IntentParser> parser;

  Env() {
    catalog = cocreate::Catalog::from_file(data_path("catalog.json"));
    priors = cocreate::PriorTable::from_file(data_path("priors.json"));
    priors.check_against(catalog);
    synonyms = cocreate::Synonyms::from_file(data_path("synonyms.json"));
    generator = std::make_unique<cocreate::Generator>(catalog, priors);
    parser = std::make_unique<cocreate::IntentParser>(catalog.vocabulary(), synonyms);
  }
  Env(const Env&) = delete;
  Env& operator=(const Env&) = delete;

  static const Env& get() {
    static const Env env;
    return env;
  }

  const cocreate::Generator& gen() const { return *generator; }
  const cocreate::IntentParser& intent() const { return *parser; }
};

inline cocreate::Room room(const std::string& name) {
  return cocreate::room_from_file(data_path("rooms/" + name + ".json"));
}

}  // namespace testsupport
