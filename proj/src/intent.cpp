#include "cocreate/intent.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cocreate/error.hpp"

namespace cocreate {

std::string_view to_string(IntentKind k) {
  switch (k) {
    case IntentKind::ObjectGeneration: return "ObjectGeneration";
    case IntentKind::ObjectRegeneration: return "ObjectRegeneration";
    case IntentKind::ObjectDuplication: return "ObjectDuplication";
    case IntentKind::SceneCompletion: return "SceneCompletion";
    case IntentKind::WireframeGeneration: return "WireframeGeneration";
    case IntentKind::WireframeLabelling: return "WireframeLabelling";
    case IntentKind::Deletion: return "Deletion";
  }
  return "ObjectGeneration";
}

IntentKind intent_kind_from_string(std::string_view s) {
  for (auto k : {IntentKind::ObjectGeneration, IntentKind::ObjectRegeneration,
                 IntentKind::ObjectDuplication, IntentKind::SceneCompletion,
                 IntentKind::WireframeGeneration, IntentKind::WireframeLabelling,
                 IntentKind::Deletion}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::SchemaViolation, "unknown intent kind '" + std::string(s) + "'");
}

Synonyms Synonyms::from_json(const nlohmann::json& doc) {
  Synonyms s;
  try {
    if (doc.contains("categories")) s.categories = doc.at("categories").get<std::map<std::string, std::string>>();
    if (doc.contains("styles")) s.styles = doc.at("styles").get<std::map<std::string, std::string>>();
    if (doc.contains("materials")) s.materials = doc.at("materials").get<std::map<std::string, std::string>>();
    if (doc.contains("ambiguous")) {
      for (const auto& [word, entry] : doc.at("ambiguous").items()) {
        Ambiguous a;
        a.fallback = entry.at("default").get<std::string>();
        a.modifiers = entry.value("modifiers", std::map<std::string, std::string>{});
        s.ambiguous.emplace(word, std::move(a));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("synonym table: ") + e.what());
  }
  return s;
}

Synonyms Synonyms::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open synonym table '" + path + "'");
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, "synonym table '" + path + "': " + e.what());
  }
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isalnum(c) || c == '_') {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (c == '\'') {
      // "let's" -> "lets"
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

namespace {

using TermType = IntentParser::TermType;

// Verb classes.
constexpr std::string_view kGenerate = "generate";
constexpr std::string_view kComplete = "complete";
constexpr std::string_view kRegenerate = "regenerate";
constexpr std::string_view kDuplicate = "duplicate";
constexpr std::string_view kLabel = "label";
constexpr std::string_view kDelete = "delete";

std::string spaced(std::string_view canonical) {
  std::string s(canonical);
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

std::string singular(const std::string& w) {
  if (w.size() > 4 && w.ends_with("ves")) return w.substr(0, w.size() - 3) + "f";
  if (w.size() > 4 && (w.ends_with("ches") || w.ends_with("shes") || w.ends_with("sses"))) {
    return w.substr(0, w.size() - 2);
  }
  if (w.size() > 3 && w.ends_with('s') && !w.ends_with("ss")) return w.substr(0, w.size() - 1);
  return w;
}

std::string join(const std::vector<std::string>& tokens, std::size_t at, std::size_t n) {
  std::string s = tokens[at];
  for (std::size_t k = 1; k < n; ++k) s += " " + tokens[at + k];
  return s;
}

}  // namespace

IntentParser::IntentParser(Vocabulary vocab, const Synonyms& synonyms) : vocab_(std::move(vocab)) {
  auto add = [this](const std::string& phrase, TermType type, std::string canonical = {},
                    bool fuzzy = false) {
    // First registration wins so vocabulary members shadow synonyms.
    phrases_.try_emplace(phrase, Term{type, std::move(canonical), fuzzy, 1});
  };

  for (const auto* v : {"generate", "create", "add", "make", "place", "put", "insert", "suggest",
                        "give", "build", "recommend", "spawn"}) {
    add(v, TermType::Verb, std::string(kGenerate));
  }
  for (const auto* v : {"fill", "complete", "furnish", "finish", "autocomplete", "autofill"}) {
    add(v, TermType::Verb, std::string(kComplete));
  }
  for (const auto* v : {"regenerate", "redo", "replace", "swap", "reroll", "refresh", "reshuffle"}) {
    add(v, TermType::Verb, std::string(kRegenerate));
  }
  for (const auto* v : {"duplicate", "copy", "clone", "replicate"}) {
    add(v, TermType::Verb, std::string(kDuplicate));
  }
  for (const auto* v : {"mark", "label", "tag", "designate"}) {
    add(v, TermType::Verb, std::string(kLabel));
  }
  for (const auto* v : {"delete", "remove", "erase", "discard", "trash", "eliminate",
                        "get rid of", "take away", "throw away"}) {
    add(v, TermType::Verb, std::string(kDelete));
  }
  for (const auto* v : {"move", "rotate", "reposition", "shift", "slide", "drag", "turn", "select",
                        "pick", "choose", "push", "pull", "flip", "resize", "scale", "enlarge",
                        "shrink", "spin", "relocate"}) {
    add(v, TermType::Rejected);
  }

  for (const auto* w : {"here", "there", "this area", "this spot", "this place", "this location",
                        "this region", "this corner", "that area", "that spot", "over here",
                        "right here", "over there"}) {
    add(w, TermType::Deixis);
  }
  for (const auto* w : {"this", "that", "these", "those", "it", "them", "this one", "that one",
                        "selected", "selection"}) {
    add(w, TermType::Demonstrative);
  }
  for (const auto* w : {"wireframe", "wireframes", "wire frame", "wire frames", "outline", "outlines",
                        "placeholder", "placeholders", "intermediate representation",
                        "intermediate representations", "floor plan", "floorplan"}) {
    add(w, TermType::WireframeNoun);
  }
  for (const auto* w : {"room", "rooms", "layout", "layouts", "scene", "space", "rest",
                        "everything", "furniture", "arrangement", "interior", "bedroom",
                        "living room", "dining room", "library"}) {
    add(w, TermType::SceneNoun);
  }
  for (const auto* w : {"and", "then", "also", "after", "afterwards"}) {
    add(w, TermType::Conjunction);
  }
  for (const auto* w : {"a",     "an",    "the",   "please", "can",   "could",  "would", "will",
                        "you",   "me",    "i",     "we",     "us",    "my",     "our",   "your",
                        "some",  "to",    "of",    "for",    "in",    "on",     "at",    "with",
                        "into",  "onto",  "as",    "be",     "is",    "are",    "lets",  "let",
                        "want",  "like",  "need",  "up",     "one",   "ones",   "new",   "just",
                        "now",   "kindly", "hey",  "ok",     "okay",  "so",     "which", "entire",
                        "whole", "full",  "all",   "next",   "near",  "beside", "by",    "from",
                        "against", "under", "over", "behind", "front", "between", "around",
                        "about", "style", "styled", "material", "made", "out", "piece",
                        "item",  "object", "objects", "items", "type", "kind", "instead",
                        "again", "another", "something", "anything", "thing", "remaining",
                        "more", "should", "go", "goes", "have", "has", "it's", "its", "how",
                        "what", "suggestions", "suggestion", "version", "design", "do",
                        "same", "exact"}) {
    add(w, TermType::Stopword);
  }

  for (const auto& c : vocab_.categories) {
    add(spaced(c), TermType::Category, c);
    add(c, TermType::Category, c);
  }
  for (const auto& [phrase, canonical] : synonyms.categories) {
    if (vocab_.categories.contains(canonical)) add(phrase, TermType::Category, canonical);
  }
  for (const auto& [word, amb] : synonyms.ambiguous) {
    for (const auto& [modifier, canonical] : amb.modifiers) {
      if (vocab_.categories.contains(canonical)) {
        add(modifier + " " + word, TermType::Category, canonical);
      }
    }
    if (vocab_.categories.contains(amb.fallback)) {
      add(word, TermType::Category, amb.fallback, true);
    }
  }

  // Style first: a term in both vocabularies resolves to its style reading.
  for (const auto& s : vocab_.styles) {
    const bool both = vocab_.materials.contains(s);
    add(spaced(s), both ? TermType::StyleOrMaterial : TermType::Style, s);
    add(s, both ? TermType::StyleOrMaterial : TermType::Style, s);
  }
  for (const auto& [phrase, canonical] : synonyms.styles) {
    if (vocab_.styles.contains(canonical)) add(phrase, TermType::Style, canonical);
  }
  for (const auto& m : vocab_.materials) {
    add(spaced(m), TermType::Material, m);
    add(m, TermType::Material, m);
  }
  for (const auto& [phrase, canonical] : synonyms.materials) {
    if (vocab_.materials.contains(canonical)) add(phrase, TermType::Material, canonical);
  }
}

std::optional<IntentParser::Term> IntentParser::match(const std::vector<std::string>& tokens,
                                                      std::size_t at) const {
  constexpr std::size_t kMaxPhrase = 3;
  for (std::size_t n = std::min(kMaxPhrase, tokens.size() - at); n >= 1; --n) {
    std::string phrase = join(tokens, at, n);
    auto it = phrases_.find(phrase);
    if (it == phrases_.end()) {
      std::vector<std::string> alt(tokens.begin() + static_cast<std::ptrdiff_t>(at),
                                   tokens.begin() + static_cast<std::ptrdiff_t>(at + n));
      alt.back() = singular(alt.back());
      it = phrases_.find(join(alt, 0, n));
      // Plural forms only carry meaning for nouns and adjectives.
      if (it != phrases_.end() && (it->second.type == TermType::Verb ||
                                   it->second.type == TermType::Rejected ||
                                   it->second.type == TermType::Stopword)) {
        it = phrases_.end();
      }
    }
    if (it != phrases_.end()) {
      Term t = it->second;
      t.length = n;
      return t;
    }
  }
  return std::nullopt;
}

ParseResult IntentParser::parse(const Command& command) const {
  const auto tokens = tokenize(command.text);
  if (tokens.empty()) throw Error(ErrorCode::NoIntent, "empty command");

  struct Matched {
    std::size_t begin;
    std::string text;
    std::optional<Term> term;
  };
  std::vector<Matched> words;
  for (std::size_t i = 0; i < tokens.size();) {
    auto t = match(tokens, i);
    const std::size_t len = t ? t->length : 1;
    words.push_back({i, join(tokens, i, len), t});
    i += len;
  }

  auto is = [](const Matched& m, TermType type) { return m.term && m.term->type == type; };

  // The first verb decides the intent; a later verb introduced by a
  // conjunction starts a second request, which is reported but not executed.
  std::optional<std::size_t> verb;
  for (std::size_t i = 0; i < words.size() && !verb; ++i) {
    if (is(words[i], TermType::Verb)) verb = i;
    if (is(words[i], TermType::Rejected)) {
      throw Error(ErrorCode::NoIntent, "'" + words[i].text +
                                           "' is done by direct manipulation, not by command");
    }
  }
  if (!verb) throw Error(ErrorCode::NoIntent, "no supported action in '" + command.text + "'");

  std::size_t clause_end = words.size();
  for (std::size_t i = *verb + 1; i < words.size(); ++i) {
    if (!is(words[i], TermType::Conjunction)) continue;
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (is(words[j], TermType::Verb) || is(words[j], TermType::Rejected)) {
        clause_end = i;
        break;
      }
    }
    if (clause_end != words.size()) break;
  }

  ParseResult result;
  std::optional<std::string> category;
  std::string category_word;
  std::string style_word;
  std::string material_word;
  bool wireframe_noun = false;
  bool scene_noun = false;
  bool place_deixis = false;
  bool demonstrative = false;

  for (std::size_t i = 0; i < clause_end; ++i) {
    const auto& w = words[i];
    if (i == *verb) continue;
    if (!w.term) {
      result.ignored_terms.push_back(w.text);
      continue;
    }
    const Term& t = *w.term;
    switch (t.type) {
      case TermType::Category:
        if (category) {
          result.ignored_terms.push_back(w.text);
        } else {
          category = t.canonical;
          category_word = w.text;
          if (t.fuzzy) result.confidence = Confidence::Fuzzy;
        }
        break;
      case TermType::StyleOrMaterial:
        result.confidence = Confidence::Fuzzy;
        [[fallthrough]];
      case TermType::Style:
        if (result.intent.filter.style) {
          result.ignored_terms.push_back(w.text);
        } else {
          result.intent.filter.style = t.canonical;
          style_word = w.text;
        }
        break;
      case TermType::Material:
        if (result.intent.filter.material) {
          result.ignored_terms.push_back(w.text);
        } else {
          result.intent.filter.material = t.canonical;
          material_word = w.text;
        }
        break;
      case TermType::WireframeNoun: wireframe_noun = true; break;
      case TermType::SceneNoun: scene_noun = true; break;
      case TermType::Deixis: place_deixis = true; break;
      case TermType::Demonstrative: demonstrative = true; break;
      case TermType::Verb:
      case TermType::Rejected:
        // A second verb without a conjunction ("copy and paste" aside) is noise.
        result.ignored_terms.push_back(w.text);
        break;
      case TermType::Conjunction:
      case TermType::Stopword: break;
    }
  }
  for (std::size_t i = clause_end + 1; i < words.size(); ++i) {
    const auto& w = words[i];
    if (!w.term || (w.term->type != TermType::Stopword && w.term->type != TermType::Conjunction)) {
      result.ignored_terms.push_back(w.text);
    }
  }

  const std::string& verb_class = words[*verb].term->canonical;
  Intent& intent = result.intent;

  const bool has_pointer = command.pointer.has_value();
  const bool has_stroke = command.stroke.has_value();

  auto bind_targets = [&]() {
    if (!command.selection.empty()) {
      intent.targets.ids = command.selection;
    } else if (has_pointer) {
      intent.targets.at = command.pointer;
    } else if (has_stroke) {
      intent.targets.region = command.stroke;
    } else if (category && !demonstrative && !place_deixis) {
      intent.targets.category = category;
    } else {
      throw Error(ErrorCode::MissingTarget,
                  "nothing selected or pointed at for '" + command.text + "'");
    }
  };

  if (verb_class == kGenerate || verb_class == kComplete) {
    if (wireframe_noun) {
      intent.kind = IntentKind::WireframeGeneration;
    } else if (verb_class == kGenerate && (category || (!scene_noun && !intent.filter.empty()))) {
      intent.kind = IntentKind::ObjectGeneration;
    } else if (verb_class == kComplete || scene_noun) {
      intent.kind = IntentKind::SceneCompletion;
    } else {
      throw Error(ErrorCode::NoIntent, "nothing to generate in '" + command.text + "'");
    }
    if (intent.kind == IntentKind::ObjectGeneration) {
      intent.filter.category = category;
      if (place_deixis && !has_pointer && !has_stroke) {
        throw Error(ErrorCode::MissingDeixis, "'here' needs a pointed location");
      }
      intent.location = command.pointer;
    } else {
      // Completion and wireframe requests take no parameters.
      if (category) result.ignored_terms.push_back(category_word);
    }
  } else if (verb_class == kRegenerate) {
    intent.kind = IntentKind::ObjectRegeneration;
    bind_targets();
    intent.filter.category = category;
  } else if (verb_class == kDuplicate) {
    intent.kind = IntentKind::ObjectDuplication;
    bind_targets();
  } else if (verb_class == kDelete) {
    intent.kind = IntentKind::Deletion;
    bind_targets();
  } else if (verb_class == kLabel) {
    intent.kind = IntentKind::WireframeLabelling;
    if (!category) throw Error(ErrorCode::NoIntent, "no furniture type to label with");
    intent.label = *category;
    if (has_stroke) {
      intent.targets.region = command.stroke;
    } else if (!command.selection.empty()) {
      intent.targets.ids = {command.selection.front()};
    } else if (has_pointer) {
      intent.targets.at = command.pointer;
    } else {
      throw Error(ErrorCode::MissingDeixis, "labelling needs a drawn stroke or a selected wireframe");
    }
  }

  if (intent.kind != IntentKind::ObjectGeneration && intent.kind != IntentKind::ObjectRegeneration) {
    // Filters are meaningless for the remaining intents; report the words.
    if (intent.filter.style) result.ignored_terms.push_back(style_word);
    if (intent.filter.material) result.ignored_terms.push_back(material_word);
    intent.filter = {};
  }
  return result;
}

}  // namespace cocreate
