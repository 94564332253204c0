#pragma once

// Rooms, placed objects and wireframes. Convention: y is up, the floor is the
// (x, z) plane, yaw rotates about the vertical axis in degrees.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cocreate/geometry.hpp"

namespace cocreate {

// Two footprints overlap when they share more than this area (1 cm^2).
inline constexpr double kOverlapTolerance = 1e-4;

enum class RoomType { Bedroom, LivingRoom, DiningRoom, Library };
enum class OpeningKind { Door, Window };
enum class WireframeOrigin { UserDrawn, Generated };

std::string_view to_string(RoomType t);
RoomType room_type_from_string(std::string_view s);

struct Opening {
  OpeningKind kind = OpeningKind::Door;
  int edge = 0;
  double offset = 0.0;  // along the edge from its start vertex
  double width = 0.0;
  double sill_height = 0.0;
  double head_height = 0.0;
};

struct Room {
  std::string id;
  RoomType type = RoomType::Bedroom;
  geom::Polygon footprint;  // counter-clockwise, simple
  double ceiling_height = 0.0;
  std::vector<Opening> openings;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

struct SceneObject {
  std::string instance_id;
  std::string spec_id;
  Vec3 position;
  double yaw = 0.0;
  double scale = 1.0;

  geom::Vec2 floor_position() const { return {position.x, position.z}; }
  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

struct Wireframe {
  std::string wf_id;
  geom::Vec2 center;
  double width = 0.0;
  double depth = 0.0;
  double yaw = 0.0;
  std::string label;
  WireframeOrigin origin = WireframeOrigin::UserDrawn;
  // Wireframes stay in the workspace after population so the layout can be
  // switched back to its intermediate representation.
  bool hidden = false;

  friend bool operator==(const Wireframe&, const Wireframe&) = default;
};

// Throws InvalidRoom when the footprint is not a simple polygon of positive
// area, the ceiling is not positive, or an opening does not fit its wall.
void validate_room(const Room& room);

// Orients the footprint counter-clockwise (edge indices refer to the result).
Room normalized(Room room);

std::pair<geom::Vec2, geom::Vec2> room_edge(const Room& room, int edge);
// Unit normal of a footprint edge pointing into the room.
geom::Vec2 inward_normal(const Room& room, int edge);
// Endpoints of an opening along its wall.
std::pair<geom::Vec2, geom::Vec2> opening_span(const Room& room, const Opening& opening);

geom::Quad oriented_rect_footprint(const SceneObject& obj, double width, double depth);
geom::Quad wireframe_rect(const Wireframe& wf);

bool contains_rect(const Room& room, std::span<const geom::Vec2> rect);

// Axis-aligned bounds of the footprint: {min, max}.
std::pair<geom::Vec2, geom::Vec2> room_bounds(const Room& room);

}  // namespace cocreate
