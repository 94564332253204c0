#include "cocreate/priors.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cocreate/catalog.hpp"
#include "cocreate/error.hpp"

namespace cocreate {

namespace {

PlacementRule placement_from(const std::string& s) {
  if (s == "against_wall") return PlacementRule::AgainstWall;
  if (s == "corner") return PlacementRule::Corner;
  if (s == "room_center") return PlacementRule::RoomCenter;
  if (s == "near_parent") return PlacementRule::NearParent;
  if (s == "ceiling_center") return PlacementRule::CeilingCenter;
  throw Error(ErrorCode::SchemaError, "unknown placement rule '" + s + "'");
}

OrientationRule orientation_from(const std::string& s) {
  if (s == "face_room_center") return OrientationRule::FaceRoomCenter;
  if (s == "back_to_wall") return OrientationRule::BackToWall;
  if (s == "align_parent") return OrientationRule::AlignParent;
  if (s == "face_parent") return OrientationRule::FaceParent;
  if (s == "align_room") return OrientationRule::AlignRoom;
  throw Error(ErrorCode::SchemaError, "unknown orientation rule '" + s + "'");
}

ParentSide side_from(const std::string& s) {
  if (s == "lateral") return ParentSide::Lateral;
  if (s == "front") return ParentSide::Front;
  if (s == "around") return ParentSide::Around;
  throw Error(ErrorCode::SchemaError, "unknown parent side '" + s + "'");
}

void read_rules(const nlohmann::json& j, MenuEntry& e) {
  const auto& p = j.at("placement");
  e.placement = placement_from(p.at("rule").get<std::string>());
  if (e.placement == PlacementRule::NearParent) {
    e.parent = p.at("parent").get<std::string>();
    e.max_gap = p.at("max_gap").get<double>();
    e.side = side_from(p.value("side", std::string("lateral")));
    if (e.max_gap < 0.0) throw Error(ErrorCode::SchemaError, "max_gap must be >= 0");
  }
  e.orientation = orientation_from(j.at("orientation").get<std::string>());
  e.front_clearance = p.value("front_clearance", 0.0);
  e.side_clearance = p.value("side_clearance", 0.0);
  if (e.front_clearance < 0.0 || e.side_clearance < 0.0) {
    throw Error(ErrorCode::SchemaError, "clearances must be >= 0");
  }
}

}  // namespace

PriorTable PriorTable::from_json(const nlohmann::json& doc) {
  PriorTable t;
  try {
    if (doc.contains("fallback")) {
      read_rules(doc.at("fallback"), t.fallback_);
    }
    for (const auto& [type_name, entries] : doc.at("room_types").items()) {
      const RoomType type = room_type_from_string(type_name);
      std::vector<MenuEntry> menu;
      for (const auto& j : entries) {
        MenuEntry e;
        e.category = j.at("category").get<std::string>();
        e.min_count = j.at("min").get<int>();
        e.max_count = j.at("max").get<int>();
        e.rank = j.at("rank").get<int>();
        if (e.min_count < 0 || e.max_count < e.min_count) {
          throw Error(ErrorCode::SchemaError, "bad count bounds for '" + e.category + "'");
        }
        read_rules(j, e);
        e.min_room_area = j.value("min_room_area", 0.0);
        menu.push_back(std::move(e));
      }
      std::stable_sort(menu.begin(), menu.end(),
                       [](const MenuEntry& a, const MenuEntry& b) { return a.rank < b.rank; });
      t.menus_[type] = std::move(menu);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("prior table: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaError, std::string("prior table: ") + e.what());
  }
  return t;
}

PriorTable PriorTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open prior table '" + path + "'");
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, "prior table '" + path + "': " + e.what());
  }
}

void PriorTable::check_against(const Catalog& catalog) const {
  const auto& cats = catalog.vocabulary().categories;
  for (const auto& [type, menu] : menus_) {
    for (std::size_t i = 0; i < menu.size(); ++i) {
      const auto& e = menu[i];
      if (!cats.contains(e.category)) {
        throw Error(ErrorCode::SchemaError, "prior menu '" + std::string(to_string(type)) +
                                                "' names unknown category '" + e.category + "'");
      }
      if (e.placement == PlacementRule::NearParent) {
        const bool earlier = std::any_of(menu.begin(), menu.begin() + static_cast<std::ptrdiff_t>(i),
                                         [&](const MenuEntry& p) {
                                           return p.category == e.parent && p.rank < e.rank;
                                         });
        if (!earlier) {
          throw Error(ErrorCode::SchemaError, "'" + e.category + "' must rank below its parent '" +
                                                  e.parent + "'");
        }
      }
    }
  }
}

const std::vector<MenuEntry>& PriorTable::menu(RoomType type) const {
  static const std::vector<MenuEntry> kEmpty;
  const auto it = menus_.find(type);
  return it == menus_.end() ? kEmpty : it->second;
}

MenuEntry PriorTable::rule_for(RoomType type, std::string_view category) const {
  for (const auto& e : menu(type)) {
    if (e.category == category) return e;
  }
  MenuEntry e = fallback_;
  e.category = std::string(category);
  e.min_count = 0;
  e.max_count = 1;
  return e;
}

}  // namespace cocreate
