#pragma once

// Command grammar: text plus an optional pointer or stroke is mapped onto one
// of seven intents. Unknown descriptors (colours, shapes, sizes) are reported
// in ignored_terms instead of narrowing the catalog filter.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cocreate/catalog.hpp"
#include "cocreate/geometry.hpp"

namespace cocreate {

enum class IntentKind {
  ObjectGeneration,
  ObjectRegeneration,
  ObjectDuplication,
  SceneCompletion,
  WireframeGeneration,
  WireframeLabelling,
  Deletion,
};

std::string_view to_string(IntentKind k);
IntentKind intent_kind_from_string(std::string_view s);

enum class Confidence { Exact, Fuzzy };

struct Command {
  std::string text;
  std::optional<geom::Vec2> pointer;
  std::optional<geom::Polygon> stroke;
  std::vector<std::string> selection;
};

// What an intent acts on. Exactly one member is set; deictic references
// (`at`, `region`) and category references are resolved against the scene by
// the caller.
struct TargetRef {
  std::vector<std::string> ids;
  std::optional<geom::Vec2> at;
  std::optional<geom::Polygon> region;
  std::optional<std::string> category;

  friend bool operator==(const TargetRef&, const TargetRef&) = default;
};

struct Intent {
  IntentKind kind = IntentKind::ObjectGeneration;
  CatalogFilter filter;                 // ObjectGeneration, ObjectRegeneration
  std::optional<geom::Vec2> location;   // ObjectGeneration
  TargetRef targets;                    // Regeneration, Duplication, Deletion, Labelling
  std::string label;                    // WireframeLabelling

  friend bool operator==(const Intent&, const Intent&) = default;
};

struct ParseResult {
  Intent intent;
  std::vector<std::string> ignored_terms;
  Confidence confidence = Confidence::Exact;

  friend bool operator==(const ParseResult&, const ParseResult&) = default;
};

// Noun and adjective synonyms, loaded from the synonym data file.
struct Synonyms {
  std::map<std::string, std::string> categories;
  std::map<std::string, std::string> styles;
  std::map<std::string, std::string> materials;
  struct Ambiguous {
    std::string fallback;
    std::map<std::string, std::string> modifiers;
  };
  std::map<std::string, Ambiguous> ambiguous;

  static Synonyms from_json(const nlohmann::json& doc);
  static Synonyms from_file(const std::string& path);
};

class IntentParser {
 public:
  IntentParser(Vocabulary vocab, const Synonyms& synonyms);

  // Deterministic and stateless. Throws NoIntent, MissingDeixis or
  // MissingTarget.
  ParseResult parse(const Command& command) const;

  const Vocabulary& vocabulary() const { return vocab_; }

  enum class TermType {
    Category,
    Style,
    Material,
    StyleOrMaterial,
    WireframeNoun,
    SceneNoun,
    Deixis,
    Demonstrative,
    Verb,
    Rejected,
    Conjunction,
    Stopword,
  };
  struct Term {
    TermType type = TermType::Stopword;
    std::string canonical;  // vocabulary member, or verb class for Verb
    bool fuzzy = false;
    std::size_t length = 1;  // tokens consumed
  };

 private:
  std::optional<Term> match(const std::vector<std::string>& tokens, std::size_t at) const;

  Vocabulary vocab_;
  std::map<std::string, Term, std::less<>> phrases_;
};

std::vector<std::string> tokenize(std::string_view text);

}  // namespace cocreate
