#pragma once

// Brute-force reference implementations used to check the library. They share
// no code with it beyond plain data structures.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cocreate/scene.hpp"

namespace oracle {

constexpr double kPi = 3.14159265358979323846;

struct P {
  double x = 0.0;
  double z = 0.0;
};
using Quad = std::array<P, 4>;

inline P to_p(cocreate::geom::Vec2 v) { return {v.x, v.z}; }

inline std::vector<P> to_poly(const std::vector<cocreate::geom::Vec2>& v) {
  std::vector<P> out;
  for (auto p : v) out.push_back(to_p(p));
  return out;
}

inline Quad to_quad(const std::array<cocreate::geom::Vec2, 4>& q) {
  return {to_p(q[0]), to_p(q[1]), to_p(q[2]), to_p(q[3])};
}

// Corner-by-corner rotation of the local rectangle.
inline Quad rect_corners(P c, double w, double d, double yaw_deg) {
  const double t = yaw_deg * kPi / 180.0;
  const double cs = std::cos(t), sn = std::sin(t);
  const double lx[4] = {-w / 2, w / 2, w / 2, -w / 2};
  const double lz[4] = {-d / 2, -d / 2, d / 2, d / 2};
  Quad q;
  for (int i = 0; i < 4; ++i) q[i] = {c.x + lx[i] * cs - lz[i] * sn, c.z + lx[i] * sn + lz[i] * cs};
  return q;
}

// Even-odd ray casting; points within eps of an edge count as inside.
inline bool inside_polygon(const std::vector<P>& poly, P p, double eps = 1e-9) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P a = poly[i], b = poly[(i + 1) % n];
    const double dx = b.x - a.x, dz = b.z - a.z;
    const double len2 = dx * dx + dz * dz;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.z - a.z) * dz) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (std::hypot(a.x + t * dx - p.x, a.z + t * dz - p.z) <= eps) return true;
  }
  bool in = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const P a = poly[i], b = poly[j];
    if ((a.z > p.z) != (b.z > p.z)) {
      const double xcross = a.x + (p.z - a.z) * (b.x - a.x) / (b.z - a.z);
      if (p.x < xcross) in = !in;
    }
  }
  return in;
}

inline bool inside_quad(const Quad& q, P p) {
  int pos = 0, neg = 0;
  for (int i = 0; i < 4; ++i) {
    const P a = q[i], b = q[(i + 1) % 4];
    const double c = (b.x - a.x) * (p.z - a.z) - (b.z - a.z) * (p.x - a.x);
    if (c > 0) ++pos;
    if (c < 0) ++neg;
  }
  return pos == 0 || neg == 0;
}

inline double mc_intersection_area(const Quad& a, const Quad& b, int samples, std::uint64_t seed) {
  double lox = 1e300, loz = 1e300, hix = -1e300, hiz = -1e300;
  for (auto p : a) {
    lox = std::min(lox, p.x);
    hix = std::max(hix, p.x);
    loz = std::min(loz, p.z);
    hiz = std::max(hiz, p.z);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(lox, hix), uz(loz, hiz);
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    const P p{ux(rng), uz(rng)};
    if (inside_quad(a, p) && inside_quad(b, p)) ++hits;
  }
  return (hix - lox) * (hiz - loz) * hits / samples;
}

inline double box_area_at(const std::vector<P>& pts, double deg) {
  const double t = deg * kPi / 180.0;
  const double cs = std::cos(t), sn = std::sin(t);
  double lo1 = 1e300, hi1 = -1e300, lo2 = 1e300, hi2 = -1e300;
  for (auto p : pts) {
    const double u = p.x * cs + p.z * sn;
    const double v = -p.x * sn + p.z * cs;
    lo1 = std::min(lo1, u);
    hi1 = std::max(hi1, u);
    lo2 = std::min(lo2, v);
    hi2 = std::max(hi2, v);
  }
  return (hi1 - lo1) * (hi2 - lo2);
}

// Exhaustive 0.1 degree sweep over [0, 90), then every local minimum of the
// sweep is refined by ternary search inside its neighbouring steps.
inline double sweep_min_rect_area(const std::vector<P>& pts) {
  const int n = 900;
  std::vector<double> a(n);
  for (int i = 0; i < n; ++i) a[i] = box_area_at(pts, i * 0.1);
  double best = *std::min_element(a.begin(), a.end());
  for (int i = 0; i < n; ++i) {
    const double prev = a[(i + n - 1) % n], next = a[(i + 1) % n];
    if (a[i] > prev || a[i] > next) continue;
    double lo = (i - 1) * 0.1, hi = (i + 1) * 0.1;
    for (int k = 0; k < 200; ++k) {
      const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (box_area_at(pts, m1) < box_area_at(pts, m2)) hi = m2;
      else lo = m1;
    }
    best = std::min(best, box_area_at(pts, 0.5 * (lo + hi)));
  }
  return best;
}

// Separating-axis bound: the overlap area is at most the smallest interval
// overlap along the four edge normals times the larger diagonal. True when
// that bound certifies an overlap of at most `tol`.
inline bool overlap_at_most(const Quad& a, const Quad& b, double tol) {
  double min_overlap = 1e300;
  for (const Quad* q : {&a, &b}) {
    for (int i = 0; i < 2; ++i) {
      const P e{(*q)[i + 1].x - (*q)[i].x, (*q)[i + 1].z - (*q)[i].z};
      const double len = std::hypot(e.x, e.z);
      const P axis{-e.z / len, e.x / len};
      double a0 = 1e300, a1 = -1e300, b0 = 1e300, b1 = -1e300;
      for (auto p : a) {
        const double s = p.x * axis.x + p.z * axis.z;
        a0 = std::min(a0, s);
        a1 = std::max(a1, s);
      }
      for (auto p : b) {
        const double s = p.x * axis.x + p.z * axis.z;
        b0 = std::min(b0, s);
        b1 = std::max(b1, s);
      }
      min_overlap = std::min(min_overlap, std::min(a1, b1) - std::max(a0, b0));
    }
  }
  if (min_overlap <= 0) return true;
  auto diag = [](const Quad& q) { return std::hypot(q[2].x - q[0].x, q[2].z - q[0].z); };
  return min_overlap * std::max(diag(a), diag(b)) <= tol;
}

// Samples the rectangle boundary every `step` meters plus an interior grid.
inline bool dense_contains(const std::vector<P>& room, const Quad& q, double step = 0.002) {
  for (int i = 0; i < 4; ++i) {
    const P a = q[i], b = q[(i + 1) % 4];
    const double len = std::hypot(b.x - a.x, b.z - a.z);
    const int k = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int s = 0; s <= k; ++s) {
      const double t = static_cast<double>(s) / k;
      if (!inside_polygon(room, {a.x + t * (b.x - a.x), a.z + t * (b.z - a.z)}, 1e-7)) return false;
    }
  }
  for (int u = 1; u < 20; ++u) {
    for (int v = 1; v < 20; ++v) {
      const double s = u / 20.0, t = v / 20.0;
      const P p{q[0].x + s * (q[1].x - q[0].x) + t * (q[3].x - q[0].x),
                q[0].z + s * (q[1].z - q[0].z) + t * (q[3].z - q[0].z)};
      if (!inside_polygon(room, p, 1e-7)) return false;
    }
  }
  return true;
}

struct RawSpec {
  std::string category, style, material, placement;
  double w = 0, d = 0, h = 0;
};

// Catalog as plain records read straight from the data file.
inline std::map<std::string, RawSpec> raw_catalog(const std::string& path) {
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  std::map<std::string, RawSpec> out;
  for (const auto& j : doc) {
    RawSpec s;
    s.category = j["category"];
    s.style = j["style"];
    s.material = j["material"];
    s.placement = j.value("placement_class", "floor");
    s.w = j["dims"][0];
    s.d = j["dims"][1];
    s.h = j["dims"][2];
    out[j["spec_id"].get<std::string>()] = s;
  }
  return out;
}

struct Box {
  std::string id;
  Quad rect;
  double bottom = 0, top = 0;
};

inline Box box_of(const cocreate::SceneObject& o, const RawSpec& s) {
  return {o.instance_id, rect_corners({o.position.x, o.position.z}, s.w * o.scale, s.d * o.scale, o.yaw),
          o.position.y, o.position.y + s.h * o.scale};
}

inline std::vector<Box> boxes_of(const std::vector<cocreate::SceneObject>& objs,
                                 const std::map<std::string, RawSpec>& cat) {
  std::vector<Box> out;
  for (const auto& o : objs) out.push_back(box_of(o, cat.at(o.spec_id)));
  return out;
}

// Pairs whose floor overlap exceeds `tol` (by Monte Carlo on uncertain
// pairs) and whose vertical extents intersect.
inline int overlap_pairs(const std::vector<Box>& boxes, double tol = 1e-4) {
  int count = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const auto &a = boxes[i], &b = boxes[j];
      if (std::min(a.top, b.top) <= std::max(a.bottom, b.bottom)) continue;
      if (overlap_at_most(a.rect, b.rect, tol)) continue;
      if (mc_intersection_area(a.rect, b.rect, 200000, 7) > tol) ++count;
    }
  }
  return count;
}

// Breadth-first flood fill over cell centres. A cell is free when its centre
// is inside the room and not inside any footprint whose underside is below
// 1.8 m. Door cells lie within the door span and one cell of the wall.
inline bool flood_fill_navigable(const cocreate::Room& room, const std::vector<Box>& boxes, double cell,
                                 double min_fraction = 0.6) {
  const auto poly = to_poly(room.footprint);
  double lox = 1e300, loz = 1e300, hix = -1e300, hiz = -1e300;
  for (auto p : poly) {
    lox = std::min(lox, p.x);
    hix = std::max(hix, p.x);
    loz = std::min(loz, p.z);
    hiz = std::max(hiz, p.z);
  }
  const int nx = static_cast<int>(std::ceil((hix - lox) / cell - 1e-9));
  const int nz = static_cast<int>(std::ceil((hiz - loz) / cell - 1e-9));
  auto center = [&](int ix, int iz) { return P{lox + (ix + 0.5) * cell, loz + (iz + 0.5) * cell}; };
  std::vector<int> state(static_cast<std::size_t>(nx * nz), 0);  // 0 outside, 1 free, 2 blocked
  int free_cells = 0;
  for (int iz = 0; iz < nz; ++iz) {
    for (int ix = 0; ix < nx; ++ix) {
      const P c = center(ix, iz);
      if (!inside_polygon(poly, c, 0.0)) continue;
      bool blocked = false;
      for (const auto& b : boxes) {
        if (b.bottom < 1.8 && inside_quad(b.rect, c)) blocked = true;
      }
      state[iz * nx + ix] = blocked ? 2 : 1;
      if (!blocked) ++free_cells;
    }
  }
  if (free_cells == 0) return false;

  std::vector<std::vector<int>> doors;
  for (const auto& o : room.openings) {
    if (o.kind != cocreate::OpeningKind::Door) continue;
    const P a = to_p(room.footprint[o.edge]);
    const P b = to_p(room.footprint[(o.edge + 1) % room.footprint.size()]);
    const double len = std::hypot(b.x - a.x, b.z - a.z);
    const P u{(b.x - a.x) / len, (b.z - a.z) / len};
    const P nrm{-u.z, u.x};
    const P s{a.x + u.x * o.offset, a.z + u.z * o.offset};
    std::vector<int> cells;
    for (int iz = 0; iz < nz; ++iz) {
      for (int ix = 0; ix < nx; ++ix) {
        if (state[iz * nx + ix] != 1) continue;
        const P c = center(ix, iz);
        const double along = (c.x - s.x) * u.x + (c.z - s.z) * u.z;
        const double into = (c.x - s.x) * nrm.x + (c.z - s.z) * nrm.z;
        if (along >= 0 && along <= o.width && into >= 0 && into <= cell) cells.push_back(iz * nx + ix);
      }
    }
    if (cells.empty()) return false;
    doors.push_back(cells);
  }

  auto fill = [&](int start) {
    std::vector<char> seen(state.size(), 0);
    std::deque<int> q{start};
    seen[start] = 1;
    while (!q.empty()) {
      const int c = q.front();
      q.pop_front();
      const int ix = c % nx, iz = c / nx;
      const int nb[4][2] = {{ix + 1, iz}, {ix - 1, iz}, {ix, iz + 1}, {ix, iz - 1}};
      for (auto& n : nb) {
        if (n[0] < 0 || n[0] >= nx || n[1] < 0 || n[1] >= nz) continue;
        const int k = n[1] * nx + n[0];
        if (state[k] == 1 && !seen[k]) {
          seen[k] = 1;
          q.push_back(k);
        }
      }
    }
    return seen;
  };

  std::vector<int> starts;
  if (doors.empty()) {
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (state[i] == 1) starts.push_back(static_cast<int>(i));
    }
  } else {
    starts = doors.front();
  }
  std::vector<char> done(state.size(), 0);
  for (int s : starts) {
    if (done[s]) continue;
    const auto seen = fill(s);
    int size = 0;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) {
        ++size;
        done[i] = 1;
      }
    }
    bool all_doors = true;
    for (const auto& d : doors) {
      all_doors = all_doors && std::any_of(d.begin(), d.end(), [&](int c) { return seen[c] != 0; });
    }
    if (all_doors && size >= min_fraction * free_cells) return true;
  }
  return false;
}

}  // namespace oracle
