#pragma once

// Object footprints with vertical extent, plus the opening regions shared by
// the sampler and the validator.

#include <string>
#include <vector>

#include "cocreate/catalog.hpp"
#include "cocreate/scene.hpp"

namespace cocreate {

// Objects whose underside is below this height obstruct walking.
inline constexpr double kWalkClearance = 1.8;

struct Footprint {
  std::string id;
  std::string category;
  geom::Quad rect;
  geom::Vec2 center;
  double width = 0.0;  // scaled
  double depth = 0.0;  // scaled
  double yaw = 0.0;
  double bottom = 0.0;
  double top = 0.0;
};

Footprint footprint_of(const SceneObject& obj, const FurnitureSpec& spec);

// Throws SchemaError when an object references a spec missing from the catalog.
std::vector<Footprint> footprints_of(std::span<const SceneObject> objects, const Catalog& catalog);

bool vertical_overlap(const Footprint& a, const Footprint& b);

// Footprints share more than kOverlapTolerance of floor area and their
// vertical extents intersect.
bool conflicts(const Footprint& a, const Footprint& b);

// y of a ceiling-mounted item: ceiling - drop - height * scale.
double ceiling_mount_y(double ceiling_height, double lamp_drop, double height, double scale);

// Quarter disc swept by a door leaf hinged at the start of the opening.
geom::Polygon door_swing_region(const Room& room, const Opening& door, double radius);

// Strip of floor in front of a window span, `depth` meters into the room.
geom::Quad window_strip(const Room& room, const Opening& window, double depth);

}  // namespace cocreate
