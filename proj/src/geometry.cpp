#include "cocreate/geometry.hpp"

#include <algorithm>
#include <limits>

#include "cocreate/error.hpp"

namespace cocreate::geom {

double normalize_yaw(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;
  return r;
}

Vec2 rotate(Vec2 v, double deg) {
  // Exact quarter turns keep axis-aligned layouts free of rounding noise.
  double c = 0.0;
  double s = 0.0;
  const double n = normalize_yaw(deg);
  if (n == 0.0) {
    c = 1.0;
  } else if (n == 90.0) {
    s = 1.0;
  } else if (n == 180.0) {
    c = -1.0;
  } else if (n == 270.0) {
    s = -1.0;
  } else {
    const double r = deg_to_rad(n);
    c = std::cos(r);
    s = std::sin(r);
  }
  return {v.x * c - v.z * s, v.x * s + v.z * c};
}

Quad oriented_rect(Vec2 center, double width, double depth, double yaw_deg) {
  const double hw = width / 2.0;
  const double hd = depth / 2.0;
  return {center + rotate({-hw, -hd}, yaw_deg), center + rotate({hw, -hd}, yaw_deg),
          center + rotate({hw, hd}, yaw_deg), center + rotate({-hw, hd}, yaw_deg)};
}

double signed_area(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return 0.0;
  double a = 0.0;
  for (std::size_t i = 0; i < n; ++i) a += cross(poly[i], poly[(i + 1) % n]);
  return a / 2.0;
}

double area(std::span<const Vec2> poly) { return std::abs(signed_area(poly)); }

Vec2 centroid(std::span<const Vec2> poly) {
  const double a = signed_area(poly);
  if (std::abs(a) < 1e-15) {
    Vec2 sum;
    for (const auto& p : poly) sum = sum + p;
    return poly.empty() ? sum : sum * (1.0 / static_cast<double>(poly.size()));
  }
  Vec2 c;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = poly[i];
    const Vec2 q = poly[(i + 1) % n];
    const double w = cross(p, q);
    c = c + (p + q) * w;
  }
  return c * (1.0 / (6.0 * a));
}

Polygon ccw(std::span<const Vec2> poly) {
  Polygon out(poly.begin(), poly.end());
  if (signed_area(out) < 0.0) std::reverse(out.begin(), out.end());
  return out;
}

Polygon clip_convex(std::span<const Vec2> subject, std::span<const Vec2> clip) {
  Polygon output(subject.begin(), subject.end());
  const Polygon region = ccw(clip);
  const std::size_t n = region.size();
  for (std::size_t i = 0; i < n && !output.empty(); ++i) {
    const Vec2 a = region[i];
    const Vec2 b = region[(i + 1) % n];
    const Vec2 edge = b - a;
    Polygon input;
    input.swap(output);
    const std::size_t m = input.size();
    for (std::size_t j = 0; j < m; ++j) {
      const Vec2 cur = input[j];
      const Vec2 prev = input[(j + m - 1) % m];
      const double dc = cross(edge, cur - a);
      const double dp = cross(edge, prev - a);
      if (dc >= 0.0) {
        if (dp < 0.0) output.push_back(prev + (cur - prev) * (dp / (dp - dc)));
        output.push_back(cur);
      } else if (dp >= 0.0) {
        output.push_back(prev + (cur - prev) * (dp / (dp - dc)));
      }
    }
  }
  return output;
}

double convex_intersection_area(std::span<const Vec2> a, std::span<const Vec2> b) {
  const Polygon clipped = clip_convex(ccw(a), b);
  return clipped.size() < 3 ? 0.0 : area(clipped);
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return length(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return length(p - (a + ab * t));
}

bool point_in_polygon(std::span<const Vec2> poly, Vec2 p, double eps) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[j];
    if (point_segment_distance(p, a, b) <= eps) return true;
    if ((a.z > p.z) != (b.z > p.z)) {
      const double x = a.x + (p.z - a.z) * (b.x - a.x) / (b.z - a.z);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  const double d1 = cross(a1 - a0, b0 - a0);
  const double d2 = cross(a1 - a0, b1 - a0);
  const double d3 = cross(b1 - b0, a0 - b0);
  const double d4 = cross(b1 - b0, a1 - b0);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

namespace {

// Parametric range [t0, t1] of segment a->b inside a ccw convex polygon
// (Cyrus-Beck). Returns false when the segment misses it.
bool clip_segment(Vec2 a, Vec2 b, std::span<const Vec2> convex, double& t0, double& t1) {
  t0 = 0.0;
  t1 = 1.0;
  const Vec2 d = b - a;
  const std::size_t n = convex.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = convex[i];
    const Vec2 e = convex[(i + 1) % n] - p;
    // Inside when cross(e, x - p) >= 0.
    const double num = cross(e, a - p);
    const double den = cross(e, d);
    if (den == 0.0) {
      if (num < 0.0) return false;
      continue;
    }
    const double t = -num / den;
    if (den > 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  return true;
}

double signed_distance_inside(Vec2 p, std::span<const Vec2> convex) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = convex.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = convex[i];
    const Vec2 e = convex[(i + 1) % n] - a;
    best = std::min(best, cross(e, p - a) / length(e));
  }
  return best;
}

}  // namespace

bool polygon_contains_convex(std::span<const Vec2> outer, std::span<const Vec2> convex,
                             double eps) {
  for (const auto& c : convex) {
    if (!point_in_polygon(outer, c, eps)) return false;
  }
  const Polygon inner = ccw(convex);
  const std::size_t n = outer.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = outer[i];
    const Vec2 b = outer[(i + 1) % n];
    double t0 = 0.0;
    double t1 = 0.0;
    if (!clip_segment(a, b, inner, t0, t1)) continue;
    // Sample the clipped portion; any point deeper than eps means the wall
    // passes through the rectangle's interior.
    for (const double t : {t0, (t0 + t1) / 2.0, t1, t0 + (t1 - t0) * 0.25, t0 + (t1 - t0) * 0.75}) {
      if (signed_distance_inside(a + (b - a) * t, inner) > eps) return false;
    }
  }
  // A wall vertex strictly inside the rectangle (reflex corner poking in).
  for (const auto& v : outer) {
    if (signed_distance_inside(v, inner) > eps) return false;
  }
  return true;
}

double convex_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
  if (convex_intersection_area(a, b) > 0.0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec2 b0 = b[j];
      const Vec2 b1 = b[(j + 1) % b.size()];
      const Vec2 a0 = a[i];
      const Vec2 a1 = a[(i + 1) % a.size()];
      if (segments_cross(a0, a1, b0, b1)) return 0.0;
      best = std::min({best, point_segment_distance(a0, b0, b1),
                       point_segment_distance(b0, a0, a1)});
    }
  }
  return best;
}

double distance_to_boundary(std::span<const Vec2> convex, std::span<const Vec2> outer) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = outer.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = outer[i];
    const Vec2 b = outer[(i + 1) % n];
    for (std::size_t j = 0; j < convex.size(); ++j) {
      const Vec2 c0 = convex[j];
      const Vec2 c1 = convex[(j + 1) % convex.size()];
      if (segments_cross(a, b, c0, c1)) return 0.0;
      best = std::min({best, point_segment_distance(c0, a, b), point_segment_distance(a, c0, c1)});
    }
  }
  return best;
}

Polygon convex_hull(std::span<const Vec2> points) {
  Polygon pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.z < b.z); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Polygon hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    const Vec2 p = pts[i];
    while (k >= t && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

OrientedRect min_area_bounding_rect(std::span<const Vec2> points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::DegenerateStroke, "stroke needs at least 3 points");
  }
  const Polygon hull = convex_hull(points);
  double extent = 0.0;
  for (const auto& p : hull) extent = std::max(extent, length(p - hull.front()));
  if (hull.size() < 3 || area(hull) <= 1e-12 * std::max(1.0, extent * extent)) {
    throw Error(ErrorCode::DegenerateStroke, "stroke points are collinear");
  }

  OrientedRect best;
  double best_area = std::numeric_limits<double>::infinity();
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = hull[(i + 1) % n] - hull[i];
    const Vec2 u = e * (1.0 / length(e));
    const Vec2 v{-u.z, u.x};
    double umin = std::numeric_limits<double>::infinity();
    double umax = -umin;
    double vmin = umin;
    double vmax = -umin;
    for (const auto& p : hull) {
      const double pu = dot(p, u);
      const double pv = dot(p, v);
      umin = std::min(umin, pu);
      umax = std::max(umax, pu);
      vmin = std::min(vmin, pv);
      vmax = std::max(vmax, pv);
    }
    const double a = (umax - umin) * (vmax - vmin);
    if (a < best_area) {
      best_area = a;
      const double cu = (umin + umax) / 2.0;
      const double cv = (vmin + vmax) / 2.0;
      best.center = u * cu + v * cv;
      best.width = umax - umin;
      best.depth = vmax - vmin;
      best.yaw = rad_to_deg(std::atan2(u.z, u.x));
    }
  }

  // Fold the yaw into [0, 90); every quarter turn swaps the extents.
  double yaw = normalize_yaw(best.yaw);
  while (yaw >= 90.0) {
    yaw -= 90.0;
    std::swap(best.width, best.depth);
  }
  if (yaw >= 90.0 - 1e-12) {
    yaw = 0.0;
    std::swap(best.width, best.depth);
  }
  best.yaw = yaw;
  return best;
}

Polygon quarter_disc(Vec2 hinge, Vec2 along, Vec2 inward, double radius, int segments) {
  Polygon out;
  out.reserve(static_cast<std::size_t>(segments) + 2);
  out.push_back(hinge);
  for (int i = 0; i <= segments; ++i) {
    const double t = (kPi / 2.0) * static_cast<double>(i) / static_cast<double>(segments);
    out.push_back(hinge + along * (radius * std::cos(t)) + inward * (radius * std::sin(t)));
  }
  return ccw(out);
}

}  // namespace cocreate::geom
