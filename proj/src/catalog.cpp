#include "cocreate/catalog.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cocreate/error.hpp"

namespace cocreate {

std::string_view to_string(PlacementClass c) {
  return c == PlacementClass::Ceiling ? "ceiling" : "floor";
}

bool CatalogFilter::matches(const FurnitureSpec& spec) const {
  return (!category || *category == spec.category) && (!style || *style == spec.style) &&
         (!material || *material == spec.material);
}

Catalog::Catalog(std::vector<FurnitureSpec> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& it = items_[i];
    const std::string where = "item " + std::to_string(i);
    if (it.spec_id.empty()) throw Error(ErrorCode::SchemaError, where + ": empty spec_id");
    if (it.category.empty() || it.style.empty() || it.material.empty()) {
      throw Error(ErrorCode::SchemaError, where + ": empty category/style/material");
    }
    if (!(it.dims.width > 0.0 && it.dims.depth > 0.0 && it.dims.height > 0.0)) {
      throw Error(ErrorCode::SchemaError, where + " (" + it.spec_id + "): dims must be positive");
    }
    if (!by_id_.emplace(it.spec_id, i).second) {
      throw Error(ErrorCode::SchemaError, where + ": duplicate spec_id '" + it.spec_id + "'");
    }
    vocab_.categories.insert(it.category);
    vocab_.styles.insert(it.style);
    vocab_.materials.insert(it.material);
  }
  std::sort(items_.begin(), items_.end(), [](const FurnitureSpec& a, const FurnitureSpec& b) {
    return std::tie(a.category, a.spec_id) < std::tie(b.category, b.spec_id);
  });
  for (std::size_t i = 0; i < items_.size(); ++i) by_id_[items_[i].spec_id] = i;
}

Catalog Catalog::from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::SchemaError, "catalog document must be an array");
  std::vector<FurnitureSpec> items;
  items.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& j = doc[i];
    const std::string where = "item " + std::to_string(i);
    try {
      FurnitureSpec s;
      s.spec_id = j.at("spec_id").get<std::string>();
      s.category = j.at("category").get<std::string>();
      s.style = j.at("style").get<std::string>();
      s.material = j.at("material").get<std::string>();
      const auto& d = j.at("dims");
      if (!d.is_array() || d.size() != 3) {
        throw Error(ErrorCode::SchemaError, where + ": dims must be [w, d, h]");
      }
      s.dims = {d[0].get<double>(), d[1].get<double>(), d[2].get<double>()};
      const auto pc = j.value("placement_class", std::string("floor"));
      if (pc == "floor") {
        s.placement = PlacementClass::Floor;
      } else if (pc == "ceiling") {
        s.placement = PlacementClass::Ceiling;
      } else {
        throw Error(ErrorCode::SchemaError, where + ": unknown placement_class '" + pc + "'");
      }
      s.display_name = j.value("display_name", s.spec_id);
      items.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::SchemaError, where + ": " + e.what());
    }
  }
  return Catalog(std::move(items));
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open catalog '" + path + "'");
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, "catalog '" + path + "': " + e.what());
  }
}

const FurnitureSpec* Catalog::find(std::string_view spec_id) const {
  const auto it = by_id_.find(spec_id);
  return it == by_id_.end() ? nullptr : &items_[it->second];
}

const FurnitureSpec& Catalog::at(std::string_view spec_id) const {
  if (const auto* s = find(spec_id)) return *s;
  throw Error(ErrorCode::SchemaError, "unknown spec_id '" + std::string(spec_id) + "'");
}

std::vector<FurnitureSpec> Catalog::query(const CatalogFilter& filter) const {
  auto check = [](const std::optional<std::string>& v, const std::set<std::string>& vocab,
                  const char* field) {
    if (v && !vocab.contains(*v)) {
      throw Error(ErrorCode::UnknownAttribute,
                  std::string(field) + " '" + *v + "' is not in the catalog vocabulary");
    }
  };
  check(filter.category, vocab_.categories, "category");
  check(filter.style, vocab_.styles, "style");
  check(filter.material, vocab_.materials, "material");

  std::vector<FurnitureSpec> out;
  std::copy_if(items_.begin(), items_.end(), std::back_inserter(out),
               [&](const FurnitureSpec& s) { return filter.matches(s); });
  return out;
}

std::size_t Catalog::page_count(const std::optional<std::string>& category,
                                std::size_t page_size) const {
  if (page_size == 0) throw Error(ErrorCode::InvalidArgument, "page_size must be >= 1");
  const auto n = query(CatalogFilter{category, {}, {}}).size();
  return (n + page_size - 1) / page_size;
}

std::vector<FurnitureSpec> Catalog::page(const std::optional<std::string>& category,
                                         std::size_t page_index, std::size_t page_size) const {
  if (page_size == 0) throw Error(ErrorCode::InvalidArgument, "page_size must be >= 1");
  const auto all = query(CatalogFilter{category, {}, {}});
  if (all.empty() && page_index == 0) return {};
  const std::size_t begin = page_index * page_size;
  if (begin >= all.size()) {
    throw Error(ErrorCode::PageOutOfRange, "page " + std::to_string(page_index) +
                                               " is past the last page");
  }
  const std::size_t end = std::min(all.size(), begin + page_size);
  return {all.begin() + static_cast<std::ptrdiff_t>(begin),
          all.begin() + static_cast<std::ptrdiff_t>(end)};
}

}  // namespace cocreate
