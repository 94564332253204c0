#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cocreate/scene.hpp"

namespace cocreate {

class Catalog;

enum class PlacementRule { AgainstWall, Corner, RoomCenter, NearParent, CeilingCenter };
enum class ParentSide { Lateral, Front, Around };
enum class OrientationRule { FaceRoomCenter, BackToWall, AlignParent, FaceParent, AlignRoom };

struct MenuEntry {
  std::string category;
  int min_count = 0;
  int max_count = 0;
  int rank = 0;
  PlacementRule placement = PlacementRule::AgainstWall;
  // near_parent only
  std::string parent;
  double max_gap = 0.0;
  ParentSide side = ParentSide::Lateral;
  OrientationRule orientation = OrientationRule::BackToWall;
  // Free floor kept in front of / beside the item when it is placed, so the
  // companions that follow it in the menu have somewhere to go.
  double front_clearance = 0.0;
  double side_clearance = 0.0;
  // Entry is skipped in rooms with a smaller floor area.
  double min_room_area = 0.0;
};

// Rule data for the built-in layout sampler: per room type, a ranked menu of
// categories with count bounds and placement/orientation rules.
class PriorTable {
 public:
  static PriorTable from_json(const nlohmann::json& doc);
  static PriorTable from_file(const std::string& path);

  // Throws SchemaError when a menu names a category missing from the catalog
  // or a near_parent entry does not rank below its parent.
  void check_against(const Catalog& catalog) const;

  // Entries sorted by rank; empty for room types without a menu.
  const std::vector<MenuEntry>& menu(RoomType type) const;

  // Menu entry for `category`, or the fallback rule carrying that category.
  MenuEntry rule_for(RoomType type, std::string_view category) const;

 private:
  std::map<RoomType, std::vector<MenuEntry>> menus_;
  MenuEntry fallback_;
};

}  // namespace cocreate
