#pragma once

// Computable layout-quality checks: collisions, bounds, functional variety,
// seating, daylighting (window tops) and circulation (door connectivity and
// door swing clearance).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocreate/catalog.hpp"
#include "cocreate/layout.hpp"
#include "cocreate/scene.hpp"

namespace cocreate {

struct DesignGoals {
  int min_furniture_types = 4;
  bool require_seating = true;
  bool window_top_clear = true;
  bool navigable = true;
  // Objects at least this tall block a window top; defaults to each window's
  // head height.
  std::optional<double> tall_threshold;

  double grid_cell = 0.1;
  double min_reachable_fraction = 0.6;
  double window_strip_depth = 0.6;
  double door_swing_radius = 0.8;
  std::vector<std::string> seating_categories{"sofa", "chair", "armchair", "stool"};
};

namespace check_id {
inline constexpr const char* kOverlap = "overlap";
inline constexpr const char* kBounds = "bounds";
inline constexpr const char* kFurnitureTypes = "furniture_types";
inline constexpr const char* kSeating = "seating";
inline constexpr const char* kWindowTop = "window_top";
inline constexpr const char* kNavigability = "navigability";
inline constexpr const char* kDoorClearance = "door_clearance";
}  // namespace check_id

struct CheckResult {
  std::string id;
  bool passed = true;
  std::vector<std::string> details;
};

struct Violation {
  std::string kind;  // check id
  std::vector<std::string> ids;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<Violation> violations;
  int score = 0;

  bool all_passed() const;
  const CheckResult* find(std::string_view id) const;
};


enum class Cell : std::uint8_t { Outside, Free, Blocked };

struct OccupancyGrid {
  geom::Vec2 origin;  // lower-left corner of cell (0, 0)
  double cell = 0.1;
  int nx = 0;
  int nz = 0;
  std::vector<Cell> cells;  // row-major, index = iz * nx + ix

  Cell at(int ix, int iz) const { return cells[static_cast<std::size_t>(iz * nx + ix)]; }
  geom::Vec2 center(int ix, int iz) const {
    return {origin.x + (ix + 0.5) * cell, origin.z + (iz + 0.5) * cell};
  }
};

OccupancyGrid build_occupancy(const Room& room, std::span<const Footprint> objects, double cell);

// Grid cells (ix, iz) directly inside a door span.
std::vector<std::pair<int, int>> door_cells(const Room& room, const Opening& door,
                                            const OccupancyGrid& grid);

struct NavigabilityResult {
  bool passed = true;
  int free_cells = 0;
  int reachable_cells = 0;
  std::vector<std::string> details;
};

NavigabilityResult check_navigability(const Room& room, std::span<const Footprint> objects,
                                      const DesignGoals& goals);

// Never throws on structurally valid input; unknown spec ids throw SchemaError.
ValidationReport validate_layout(const Room& room, std::span<const SceneObject> objects,
                                 const Catalog& catalog, const DesignGoals& goals = {});

}  // namespace cocreate
