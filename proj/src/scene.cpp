#include "cocreate/scene.hpp"

#include <algorithm>
#include <limits>

#include "cocreate/error.hpp"

namespace cocreate {

using geom::Vec2;

std::string_view to_string(RoomType t) {
  switch (t) {
    case RoomType::Bedroom: return "bedroom";
    case RoomType::LivingRoom: return "living_room";
    case RoomType::DiningRoom: return "dining_room";
    case RoomType::Library: return "library";
  }
  return "bedroom";
}

RoomType room_type_from_string(std::string_view s) {
  if (s == "bedroom") return RoomType::Bedroom;
  if (s == "living_room") return RoomType::LivingRoom;
  if (s == "dining_room") return RoomType::DiningRoom;
  if (s == "library") return RoomType::Library;
  throw Error(ErrorCode::InvalidRoom, "unknown room type '" + std::string(s) + "'");
}

namespace {

bool segments_touch(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  if (geom::segments_cross(a0, a1, b0, b1)) return true;
  constexpr double eps = 1e-12;
  return geom::point_segment_distance(a0, b0, b1) < eps ||
         geom::point_segment_distance(a1, b0, b1) < eps ||
         geom::point_segment_distance(b0, a0, a1) < eps ||
         geom::point_segment_distance(b1, a0, a1) < eps;
}

}  // namespace

void validate_room(const Room& room) {
  const auto& fp = room.footprint;
  const std::size_t n = fp.size();
  if (n < 3) throw Error(ErrorCode::InvalidRoom, "footprint needs at least 3 vertices");
  if (geom::area(fp) <= 0.0) throw Error(ErrorCode::InvalidRoom, "footprint has zero area");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(fp[i], fp[(i + 1) % n], fp[j], fp[(j + 1) % n])) {
        throw Error(ErrorCode::InvalidRoom, "footprint is not a simple polygon");
      }
    }
  }
  if (!(room.ceiling_height > 0.0)) {
    throw Error(ErrorCode::InvalidRoom, "ceiling_height must be positive");
  }
  for (const auto& o : room.openings) {
    if (o.edge < 0 || static_cast<std::size_t>(o.edge) >= n) {
      throw Error(ErrorCode::InvalidRoom, "opening edge index out of range");
    }
    const auto [a, b] = room_edge(room, o.edge);
    if (!(o.width > 0.0) || o.offset < 0.0 || o.offset + o.width > geom::length(b - a) + 1e-9) {
      throw Error(ErrorCode::InvalidRoom, "opening does not fit on its wall");
    }
    if (o.sill_height < 0.0 || !(o.head_height > o.sill_height) ||
        o.head_height > room.ceiling_height) {
      throw Error(ErrorCode::InvalidRoom, "opening heights out of range");
    }
  }
}

Room normalized(Room room) {
  if (geom::signed_area(room.footprint) < 0.0) {
    // Reversing the vertex order maps edge i (v_i -> v_i+1) to edge n-2-i and
    // flips its direction, so offsets are re-measured from the other end.
    const int n = static_cast<int>(room.footprint.size());
    std::vector<double> lengths(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto [a, b] = room_edge(room, i);
      lengths[static_cast<std::size_t>(i)] = geom::length(b - a);
    }
    std::reverse(room.footprint.begin(), room.footprint.end());
    for (auto& o : room.openings) {
      const double len = lengths[static_cast<std::size_t>(o.edge)];
      o.edge = ((n - 2 - o.edge) % n + n) % n;
      o.offset = len - o.offset - o.width;
    }
  }
  return room;
}

std::pair<Vec2, Vec2> room_edge(const Room& room, int edge) {
  const auto n = room.footprint.size();
  const auto i = static_cast<std::size_t>(edge);
  return {room.footprint[i], room.footprint[(i + 1) % n]};
}

Vec2 inward_normal(const Room& room, int edge) {
  const auto [a, b] = room_edge(room, edge);
  const Vec2 d = (b - a) * (1.0 / geom::length(b - a));
  return {-d.z, d.x};
}

std::pair<Vec2, Vec2> opening_span(const Room& room, const Opening& opening) {
  const auto [a, b] = room_edge(room, opening.edge);
  const Vec2 d = (b - a) * (1.0 / geom::length(b - a));
  return {a + d * opening.offset, a + d * (opening.offset + opening.width)};
}

geom::Quad oriented_rect_footprint(const SceneObject& obj, double width, double depth) {
  return geom::oriented_rect(obj.floor_position(), width * obj.scale, depth * obj.scale, obj.yaw);
}

geom::Quad wireframe_rect(const Wireframe& wf) {
  return geom::oriented_rect(wf.center, wf.width, wf.depth, wf.yaw);
}

bool contains_rect(const Room& room, std::span<const Vec2> rect) {
  return geom::polygon_contains_convex(room.footprint, rect);
}

std::pair<Vec2, Vec2> room_bounds(const Room& room) {
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi{-lo.x, -lo.z};
  for (const auto& p : room.footprint) {
    lo = {std::min(lo.x, p.x), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.z, p.z)};
  }
  return {lo, hi};
}

}  // namespace cocreate
