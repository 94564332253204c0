#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cocreate {

enum class PlacementClass { Floor, Ceiling };

std::string_view to_string(PlacementClass c);

struct Dims {
  double width = 0.0;
  double depth = 0.0;
  double height = 0.0;
};

struct FurnitureSpec {
  std::string spec_id;
  std::string category;
  std::string style;
  std::string material;
  Dims dims;
  PlacementClass placement = PlacementClass::Floor;
  std::string display_name;
};

struct CatalogFilter {
  std::optional<std::string> category;
  std::optional<std::string> style;
  std::optional<std::string> material;

  bool empty() const { return !category && !style && !material; }
  bool matches(const FurnitureSpec& spec) const;
  friend bool operator==(const CatalogFilter&, const CatalogFilter&) = default;
};

struct Vocabulary {
  std::set<std::string> categories;
  std::set<std::string> styles;
  std::set<std::string> materials;
};

inline constexpr std::size_t kDefaultPageSize = 6;

// Immutable furniture repository. Items are kept ordered by
// (category, spec_id) and every query preserves that order.
class Catalog {
 public:
  Catalog() = default;

  // Throws SchemaError naming the offending item index or id.
  explicit Catalog(std::vector<FurnitureSpec> items);

  static Catalog from_json(const nlohmann::json& doc);
  static Catalog from_file(const std::string& path);

  std::size_t size() const { return items_.size(); }
  const std::vector<FurnitureSpec>& items() const { return items_; }
  const Vocabulary& vocabulary() const { return vocab_; }

  const FurnitureSpec* find(std::string_view spec_id) const;
  // Throws SchemaError for unknown ids.
  const FurnitureSpec& at(std::string_view spec_id) const;

  // UnknownAttribute when a set field is not in the vocabulary.
  std::vector<FurnitureSpec> query(const CatalogFilter& filter) const;

  // Stable pagination over query({category}); an empty category pages the
  // whole catalog. PageOutOfRange past the last page.
  std::vector<FurnitureSpec> page(const std::optional<std::string>& category,
                                  std::size_t page_index,
                                  std::size_t page_size = kDefaultPageSize) const;
  std::size_t page_count(const std::optional<std::string>& category,
                         std::size_t page_size = kDefaultPageSize) const;

 private:
  std::vector<FurnitureSpec> items_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  Vocabulary vocab_;
};

}  // namespace cocreate
