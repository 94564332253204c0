#include "cocreate/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cocreate {

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

OccupancyGrid build_occupancy(const Room& room, std::span<const Footprint> objects, double cell) {
  const auto [lo, hi] = room_bounds(room);
  OccupancyGrid g;
  g.origin = lo;
  g.cell = cell;
  g.nx = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / cell - 1e-9)));
  g.nz = std::max(1, static_cast<int>(std::ceil((hi.z - lo.z) / cell - 1e-9)));
  g.cells.assign(static_cast<std::size_t>(g.nx * g.nz), Cell::Outside);
  for (int iz = 0; iz < g.nz; ++iz) {
    for (int ix = 0; ix < g.nx; ++ix) {
      const geom::Vec2 c = g.center(ix, iz);
      if (!geom::point_in_polygon(room.footprint, c, 0.0)) continue;
      bool blocked = false;
      for (const auto& o : objects) {
        if (o.bottom < kWalkClearance && geom::point_in_polygon(o.rect, c, 0.0)) {
          blocked = true;
          break;
        }
      }
      g.cells[static_cast<std::size_t>(iz * g.nx + ix)] = blocked ? Cell::Blocked : Cell::Free;
    }
  }
  return g;
}

std::vector<std::pair<int, int>> door_cells(const Room& room, const Opening& door,
                                            const OccupancyGrid& grid) {
  const auto [a, b] = opening_span(room, door);
  const geom::Vec2 u = (b - a) * (1.0 / geom::length(b - a));
  const geom::Vec2 n = inward_normal(room, door.edge);
  std::vector<std::pair<int, int>> out;
  for (int iz = 0; iz < grid.nz; ++iz) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      if (grid.at(ix, iz) == Cell::Outside) continue;
      const geom::Vec2 c = grid.center(ix, iz) - a;
      const double along = geom::dot(c, u);
      const double into = geom::dot(c, n);
      if (along >= 0.0 && along <= door.width && into >= 0.0 && into <= grid.cell) {
        out.emplace_back(ix, iz);
      }
    }
  }
  return out;
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

}  // namespace

NavigabilityResult check_navigability(const Room& room, std::span<const Footprint> objects,
                                      const DesignGoals& goals) {
  const OccupancyGrid g = build_occupancy(room, objects, goals.grid_cell);
  NavigabilityResult r;
  DisjointSet ds(g.cells.size());
  for (int iz = 0; iz < g.nz; ++iz) {
    for (int ix = 0; ix < g.nx; ++ix) {
      if (g.at(ix, iz) != Cell::Free) continue;
      ++r.free_cells;
      const auto idx = static_cast<std::size_t>(iz * g.nx + ix);
      if (ix + 1 < g.nx && g.at(ix + 1, iz) == Cell::Free) ds.unite(idx, idx + 1);
      if (iz + 1 < g.nz && g.at(ix, iz + 1) == Cell::Free) {
        ds.unite(idx, idx + static_cast<std::size_t>(g.nx));
      }
    }
  }
  if (r.free_cells == 0) {
    r.passed = false;
    r.details.push_back("no free floor space");
    return r;
  }

  // Components touched by every door.
  std::optional<std::set<std::size_t>> shared;
  int door_index = 0;
  for (const auto& o : room.openings) {
    if (o.kind != OpeningKind::Door) continue;
    std::set<std::size_t> roots;
    for (const auto& [ix, iz] : door_cells(room, o, g)) {
      if (g.at(ix, iz) == Cell::Free) roots.insert(ds.find(static_cast<std::size_t>(iz * g.nx + ix)));
    }
    if (roots.empty()) {
      r.passed = false;
      r.details.push_back("door " + std::to_string(door_index) + " is fully blocked");
    }
    if (!shared) {
      shared = std::move(roots);
    } else {
      std::set<std::size_t> both;
      std::set_intersection(shared->begin(), shared->end(), roots.begin(), roots.end(),
                            std::inserter(both, both.begin()));
      shared = std::move(both);
    }
    ++door_index;
  }

  std::size_t best = 0;
  if (shared) {
    if (shared->empty() && r.passed) {
      r.passed = false;
      r.details.push_back("doors are not connected to each other");
    }
    for (const auto root : *shared) best = std::max(best, ds.size_of(root));
  } else {
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      if (g.cells[i] == Cell::Free) best = std::max(best, ds.size_of(i));
    }
  }
  r.reachable_cells = static_cast<int>(best);
  const double fraction = static_cast<double>(best) / static_cast<double>(r.free_cells);
  if (fraction < goals.min_reachable_fraction) {
    r.passed = false;
    r.details.push_back("only " + fmt(100.0 * fraction) + "% of free floor is reachable (need " +
                        fmt(100.0 * goals.min_reachable_fraction) + "%)");
  }
  return r;
}

ValidationReport validate_layout(const Room& room, std::span<const SceneObject> objects,
                                 const Catalog& catalog, const DesignGoals& goals) {
  const auto fps = footprints_of(objects, catalog);
  ValidationReport report;

  {
    CheckResult c{check_id::kOverlap, true, {}};
    for (std::size_t i = 0; i < fps.size(); ++i) {
      for (std::size_t j = i + 1; j < fps.size(); ++j) {
        if (conflicts(fps[i], fps[j])) {
          c.passed = false;
          c.details.push_back(fps[i].id + " overlaps " + fps[j].id);
          report.violations.push_back({check_id::kOverlap, {fps[i].id, fps[j].id}});
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{check_id::kBounds, true, {}};
    for (const auto& f : fps) {
      if (!contains_rect(room, f.rect)) {
        c.passed = false;
        c.details.push_back(f.id + " extends past the room footprint");
        report.violations.push_back({check_id::kBounds, {f.id}});
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    std::set<std::string> types;
    for (const auto& f : fps) types.insert(f.category);
    CheckResult c{check_id::kFurnitureTypes, true, {}};
    if (static_cast<int>(types.size()) < goals.min_furniture_types) {
      c.passed = false;
      c.details.push_back(std::to_string(types.size()) + " furniture types, need " +
                          std::to_string(goals.min_furniture_types));
    }
    report.checks.push_back(std::move(c));
  }
  if (goals.require_seating) {
    CheckResult c{check_id::kSeating, true, {}};
    const bool seated = std::any_of(fps.begin(), fps.end(), [&](const Footprint& f) {
      return std::find(goals.seating_categories.begin(), goals.seating_categories.end(),
                       f.category) != goals.seating_categories.end();
    });
    if (!seated) {
      c.passed = false;
      c.details.push_back("no seating furniture present");
    }
    report.checks.push_back(std::move(c));
  }
  if (goals.window_top_clear) {
    CheckResult c{check_id::kWindowTop, true, {}};
    int wi = 0;
    for (const auto& o : room.openings) {
      if (o.kind != OpeningKind::Window) continue;
      const auto strip = window_strip(room, o, goals.window_strip_depth);
      const double tall = goals.tall_threshold.value_or(o.head_height);
      for (const auto& f : fps) {
        if (f.top >= tall && geom::convex_intersection_area(f.rect, strip) > kOverlapTolerance) {
          c.passed = false;
          c.details.push_back(f.id + " blocks the top of window " + std::to_string(wi));
          report.violations.push_back({check_id::kWindowTop, {f.id}});
        }
      }
      ++wi;
    }
    report.checks.push_back(std::move(c));
  }
  if (goals.navigable) {
    const auto nav = check_navigability(room, fps, goals);
    report.checks.push_back({check_id::kNavigability, nav.passed, nav.details});
    if (!nav.passed) report.violations.push_back({check_id::kNavigability, {}});

    CheckResult c{check_id::kDoorClearance, true, {}};
    int di = 0;
    for (const auto& o : room.openings) {
      if (o.kind != OpeningKind::Door) continue;
      const auto swing = door_swing_region(room, o, goals.door_swing_radius);
      for (const auto& f : fps) {
        if (f.bottom < kWalkClearance &&
            geom::convex_intersection_area(f.rect, swing) > kOverlapTolerance) {
          c.passed = false;
          c.details.push_back(f.id + " blocks the swing of door " + std::to_string(di));
          report.violations.push_back({check_id::kDoorClearance, {f.id}});
        }
      }
      ++di;
    }
    report.checks.push_back(std::move(c));
  }

  report.score = static_cast<int>(
      std::count_if(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.passed; }));
  return report;
}

}  // namespace cocreate
