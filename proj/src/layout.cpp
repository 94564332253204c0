#include "cocreate/layout.hpp"

#include <algorithm>

#include "cocreate/error.hpp"

namespace cocreate {

Footprint footprint_of(const SceneObject& obj, const FurnitureSpec& spec) {
  Footprint f;
  f.id = obj.instance_id;
  f.category = spec.category;
  f.rect = oriented_rect_footprint(obj, spec.dims.width, spec.dims.depth);
  f.center = obj.floor_position();
  f.width = spec.dims.width * obj.scale;
  f.depth = spec.dims.depth * obj.scale;
  f.yaw = obj.yaw;
  f.bottom = obj.position.y;
  f.top = obj.position.y + spec.dims.height * obj.scale;
  return f;
}

std::vector<Footprint> footprints_of(std::span<const SceneObject> objects, const Catalog& catalog) {
  std::vector<Footprint> out;
  out.reserve(objects.size());
  for (const auto& o : objects) out.push_back(footprint_of(o, catalog.at(o.spec_id)));
  return out;
}

bool vertical_overlap(const Footprint& a, const Footprint& b) {
  return std::min(a.top, b.top) - std::max(a.bottom, b.bottom) > 1e-9;
}

bool conflicts(const Footprint& a, const Footprint& b) {
  return vertical_overlap(a, b) &&
         geom::convex_intersection_area(a.rect, b.rect) > kOverlapTolerance;
}

double ceiling_mount_y(double ceiling_height, double lamp_drop, double height, double scale) {
  return ceiling_height - lamp_drop - height * scale;
}

geom::Polygon door_swing_region(const Room& room, const Opening& door, double radius) {
  const auto [a, b] = opening_span(room, door);
  const geom::Vec2 along = (b - a) * (1.0 / geom::length(b - a));
  return geom::quarter_disc(a, along, inward_normal(room, door.edge), radius);
}

geom::Quad window_strip(const Room& room, const Opening& window, double depth) {
  const auto [a, b] = opening_span(room, window);
  const geom::Vec2 n = inward_normal(room, window.edge) * depth;
  return {a, b, b + n, a + n};
}

}  // namespace cocreate
