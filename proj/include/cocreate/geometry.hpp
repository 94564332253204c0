#pragma once

// Planar geometry on the floor plane. Points are (x, z) in meters; angles are
// degrees, counter-clockwise when looking down onto the (x, z) plane.

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace cocreate::geom {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.z * s}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.z * s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.z - a.z * b.x; }
inline double length(Vec2 a) { return std::hypot(a.x, a.z); }
inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

using Quad = std::array<Vec2, 4>;
using Polygon = std::vector<Vec2>;

// Wraps into [0, 360).
double normalize_yaw(double deg);

// Rotates `v` counter-clockwise by `deg` about the origin.
Vec2 rotate(Vec2 v, double deg);

// Corners of a width x depth rectangle (local x = width, local z = depth)
// rotated by `yaw_deg` and centred at `center`, counter-clockwise.
Quad oriented_rect(Vec2 center, double width, double depth, double yaw_deg);

double signed_area(std::span<const Vec2> poly);
double area(std::span<const Vec2> poly);
Vec2 centroid(std::span<const Vec2> poly);

// Returns the polygon with counter-clockwise winding.
Polygon ccw(std::span<const Vec2> poly);

// Sutherland-Hodgman clip of a convex (or any) subject by a convex clip region.
Polygon clip_convex(std::span<const Vec2> subject, std::span<const Vec2> clip);

// Area of the intersection of two convex polygons; 0 when disjoint or touching.
double convex_intersection_area(std::span<const Vec2> a, std::span<const Vec2> b);

// True when `p` is inside or within `eps` of the boundary of a simple polygon.
bool point_in_polygon(std::span<const Vec2> poly, Vec2 p, double eps = 1e-9);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

// True when the open segments intersect at a single point interior to both.
bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);

// True when the convex region lies inside-or-on the simple polygon `outer`:
// all corners inside, and no boundary edge of `outer` enters the interior of
// `convex` (which also rules out edges grazing through a corner).
bool polygon_contains_convex(std::span<const Vec2> outer, std::span<const Vec2> convex,
                             double eps = 1e-7);

// Minimum distance between two convex polygons; 0 when they intersect.
double convex_distance(std::span<const Vec2> a, std::span<const Vec2> b);

// Minimum distance from a convex polygon to the boundary of a simple polygon.
double distance_to_boundary(std::span<const Vec2> convex, std::span<const Vec2> outer);

// Andrew's monotone chain; counter-clockwise, no collinear points.
Polygon convex_hull(std::span<const Vec2> points);

struct OrientedRect {
  Vec2 center;
  double width = 0.0;
  double depth = 0.0;
  double yaw = 0.0;
};

// Minimum-area enclosing rectangle via rotating calipers over the hull edges.
// Yaw is normalised to [0, 90). Throws DegenerateStroke for fewer than three
// points or a collinear set.
OrientedRect min_area_bounding_rect(std::span<const Vec2> points);

// Convex polygon approximating the quarter disc centred at `hinge`, spanning
// from direction `along` to direction `inward` (both unit vectors).
Polygon quarter_disc(Vec2 hinge, Vec2 along, Vec2 inward, double radius, int segments = 24);

}  // namespace cocreate::geom
