#include <random>

#include "doctest.h"

#include "cocreate/error.hpp"
#include "cocreate/geometry.hpp"
#include "oracles.hpp"

using namespace cocreate;
using namespace cocreate::geom;

namespace {

bool near(Vec2 a, Vec2 b, double eps = 1e-9) { return std::abs(a.x - b.x) < eps && std::abs(a.z - b.z) < eps; }

bool has_corner(const Quad& q, Vec2 p) {
  for (auto c : q) {
    if (near(c, p)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("oriented rect corners") {
  const auto unit = oriented_rect({0, 0}, 1, 1, 0);
  for (Vec2 p : {Vec2{-0.5, -0.5}, Vec2{0.5, -0.5}, Vec2{0.5, 0.5}, Vec2{-0.5, 0.5}}) CHECK(has_corner(unit, p));

  const auto turned = oriented_rect({0, 0}, 2, 1, 90);
  for (Vec2 p : {Vec2{-0.5, -1}, Vec2{0.5, -1}, Vec2{0.5, 1}, Vec2{-0.5, 1}}) CHECK(has_corner(turned, p));

  const auto q = oriented_rect({2, 3}, 1.5, 0.8, 30);
  const auto ref = oracle::rect_corners({2, 3}, 1.5, 0.8, 30);
  for (auto p : ref) CHECK(has_corner(q, {p.x, p.z}));
  CHECK(signed_area(q) == doctest::Approx(1.2));
}

TEST_CASE("yaw normalisation") {
  CHECK(normalize_yaw(-90) == 270);
  CHECK(normalize_yaw(360) == 0);
  CHECK(normalize_yaw(725) == doctest::Approx(5));
  CHECK(normalize_yaw(-1e-12) < 360.0);
}

TEST_CASE("intersection area basics") {
  const auto a = oriented_rect({0, 0}, 1, 1, 0);
  CHECK(convex_intersection_area(a, a) == doctest::Approx(1.0));
  CHECK(convex_intersection_area(a, oriented_rect({1, 0}, 1, 1, 0)) == 0.0);
  CHECK(convex_intersection_area(a, oriented_rect({5, 5}, 1, 1, 0)) == 0.0);
  CHECK(convex_intersection_area(a, oriented_rect({0.5, 0.5}, 1, 1, 0)) == doctest::Approx(0.25));
  CHECK(convex_intersection_area(a, oriented_rect({0, 0}, 1, 1, 45)) ==
        doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)));
}

TEST_CASE("intersection area agrees with Monte Carlo") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-1, 1), dim(0.3, 2), ang(0, 360);
  for (int i = 0; i < 20; ++i) {
    const Vec2 ca{pos(rng), pos(rng)}, cb{pos(rng), pos(rng)};
    const double wa = dim(rng), da = dim(rng), ya = ang(rng);
    const double wb = dim(rng), db = dim(rng), yb = ang(rng);
    const double got = convex_intersection_area(oriented_rect(ca, wa, da, ya), oriented_rect(cb, wb, db, yb));
    const double mc = oracle::mc_intersection_area(oracle::rect_corners({ca.x, ca.z}, wa, da, ya),
                                                   oracle::rect_corners({cb.x, cb.z}, wb, db, yb), 1000000,
                                                   static_cast<std::uint64_t>(i));
    CHECK(std::abs(got - mc) < 1e-2);
  }
}

TEST_CASE("point in polygon on an L shape") {
  const Polygon l{{0, 0}, {5, 0}, {5, 2.5}, {2.5, 2.5}, {2.5, 5}, {0, 5}};
  CHECK(point_in_polygon(l, {1, 1}));
  CHECK(point_in_polygon(l, {1, 4}));
  CHECK_FALSE(point_in_polygon(l, {4, 4}));
  CHECK(point_in_polygon(l, {5, 1}));
}

TEST_CASE("convex containment matches dense sampling") {
  const Polygon l{{0, 0}, {5, 0}, {5, 2.5}, {2.5, 2.5}, {2.5, 5}, {0, 5}};
  const auto room = oracle::to_poly(l);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pos(-0.5, 5.5), dim(0.2, 2.5), ang(0, 360);
  int inside = 0;
  for (int i = 0; i < 400; ++i) {
    const Vec2 c{pos(rng), pos(rng)};
    const double w = dim(rng), d = dim(rng), y = ang(rng);
    const bool got = polygon_contains_convex(l, oriented_rect(c, w, d, y));
    const bool want = oracle::dense_contains(room, oracle::rect_corners({c.x, c.z}, w, d, y));
    CHECK(got == want);
    inside += got;
  }
  CHECK(inside > 20);
  // Flush against the reflex corner.
  CHECK(polygon_contains_convex(l, oriented_rect({3.75, 1.25}, 2.5, 2.5, 0)));
  CHECK_FALSE(polygon_contains_convex(l, oriented_rect({2.6, 2.6}, 0.6, 0.6, 0)));
}

TEST_CASE("segments cross only at interior points") {
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {1, 0}, {3, 0}));
}

TEST_CASE("convex hull drops interior and collinear points") {
  const std::vector<Vec2> pts{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {1, 1}, {0, 2}};
  const auto h = convex_hull(pts);
  CHECK(h.size() == 4);
  CHECK(signed_area(h) == doctest::Approx(4.0));
}

TEST_CASE("min area bounding rect matches the angular sweep") {
  std::mt19937_64 rng(2024);
  for (int cloud = 0; cloud < 20; ++cloud) {
    std::uniform_real_distribution<double> u(-2, 2);
    std::vector<Vec2> pts;
    std::vector<oracle::P> raw;
    const int n = 5 + cloud;
    for (int i = 0; i < n; ++i) {
      pts.push_back({u(rng), 0.4 * u(rng)});
      pts.back() = rotate(pts.back(), 17.0 * cloud);
      raw.push_back({pts.back().x, pts.back().z});
    }
    const auto r = min_area_bounding_rect(pts);
    CHECK(r.yaw >= 0.0);
    CHECK(r.yaw < 90.0);
    CHECK(std::abs(r.width * r.depth - oracle::sweep_min_rect_area(raw)) < 1e-6);
    const auto q = oracle::rect_corners({r.center.x, r.center.z}, r.width + 1e-9, r.depth + 1e-9, r.yaw);
    for (auto p : raw) CHECK(oracle::inside_quad(q, p));
  }
}

TEST_CASE("min area bounding rect of an axis rectangle") {
  const std::vector<Vec2> pts{{0, 0}, {2, 0}, {2, 1.6}, {0, 1.6}, {1, 0.8}};
  const auto r = min_area_bounding_rect(pts);
  CHECK(r.center.x == doctest::Approx(1.0));
  CHECK(r.center.z == doctest::Approx(0.8));
  CHECK(r.width * r.depth == doctest::Approx(3.2));
}

TEST_CASE("degenerate strokes") {
  const std::vector<Vec2> two{{0, 0}, {1, 1}};
  const std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(min_area_bounding_rect(two), Error);
  try {
    min_area_bounding_rect(line);
    FAIL("expected DegenerateStroke");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateStroke);
  }
}

TEST_CASE("distances") {
  const auto a = oriented_rect({0, 0}, 1, 1, 0);
  CHECK(convex_distance(a, oriented_rect({3, 0}, 1, 1, 0)) == doctest::Approx(2.0));
  CHECK(convex_distance(a, oriented_rect({0.2, 0}, 1, 1, 0)) == 0.0);
  const Polygon room{{-2, -2}, {2, -2}, {2, 2}, {-2, 2}};
  CHECK(distance_to_boundary(a, room) == doctest::Approx(1.5));
}
