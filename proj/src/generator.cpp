#include "cocreate/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "cocreate/error.hpp"
#include "cocreate/layout.hpp"

namespace cocreate {

using geom::Vec2;

void check_config(const GenConfig& config) {
  if (config.suggestion_count < 1) {
    throw Error(ErrorCode::InvalidArgument, "suggestion_count must be >= 1");
  }
  if (!(config.scale_min <= 1.0 && config.scale_max >= 1.0 && config.scale_min > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "scale clamp must straddle 1.0");
  }
  if (config.max_retries_per_object < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_retries_per_object must be >= 1");
  }
}

namespace {

constexpr double kWallGap = 0.005;

// mt19937_64 output is fixed by the standard; the distributions are not, so
// sampling is done by hand to keep layouts identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

double snap_yaw(double yaw) {
  const double n = geom::normalize_yaw(yaw);
  const double q = std::round(n / 90.0) * 90.0;
  return std::abs(n - q) < 1e-9 ? geom::normalize_yaw(q) : n;
}

// Yaw whose forward axis (local +z) points along `dir`.
double yaw_facing(Vec2 dir) {
  return snap_yaw(geom::rad_to_deg(std::atan2(-dir.x, dir.z)));
}

Vec2 interior_point(const Room& room, Rng& rng) {
  const Vec2 c = geom::centroid(room.footprint);
  if (geom::point_in_polygon(room.footprint, c)) return c;
  const auto [lo, hi] = room_bounds(room);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.z, hi.z)};
    if (geom::point_in_polygon(room.footprint, p)) return p;
  }
  return room.footprint.front();
}

int longest_edge(const Room& room) {
  int best = 0;
  double best_len = -1.0;
  for (int i = 0; i < static_cast<int>(room.footprint.size()); ++i) {
    const auto [a, b] = room_edge(room, i);
    const double len = geom::length(b - a);
    if (len > best_len + 1e-12) {
      best_len = len;
      best = i;
    }
  }
  return best;
}

int nearest_edge(const Room& room, Vec2 p) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(room.footprint.size()); ++i) {
    const auto [a, b] = room_edge(room, i);
    const double d = geom::point_segment_distance(p, a, b);
    if (d < best_d - 1e-12) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double orient(const Room& room, OrientationRule rule, Vec2 at) {
  switch (rule) {
    case OrientationRule::BackToWall:
      return yaw_facing(inward_normal(room, nearest_edge(room, at)));
    case OrientationRule::FaceRoomCenter: {
      const Vec2 v = geom::centroid(room.footprint) - at;
      if (geom::length(v) > 1e-6) return yaw_facing(v);
      [[fallthrough]];
    }
    case OrientationRule::AlignParent:
    case OrientationRule::FaceParent:
    case OrientationRule::AlignRoom:
      break;
  }
  return yaw_facing(inward_normal(room, longest_edge(room)));
}

// Rejection sampler over rule-driven proposals.
class Sampler {
 public:
  Sampler(const Room& room, const GenConfig& config, std::vector<Footprint> obstacles)
      : room_(room), config_(config), obstacles_(std::move(obstacles)) {
    if (config.respect_openings) {
      for (const auto& o : room.openings) {
        if (o.kind == OpeningKind::Door) {
          doors_.push_back(door_swing_region(room, o, config.door_swing_radius));
        } else {
          const auto strip = window_strip(room, o, config.window_strip_depth);
          windows_.push_back({geom::Polygon(strip.begin(), strip.end()), o.head_height});
        }
      }
    }
  }

  const std::vector<Footprint>& obstacles() const { return obstacles_; }
  void commit(Footprint f) { obstacles_.push_back(std::move(f)); }

  Footprint footprint_at(const FurnitureSpec& spec, const Pose& pose, std::string id = {}) const {
    SceneObject o;
    o.instance_id = std::move(id);
    o.spec_id = spec.spec_id;
    o.position = pose.position;
    o.yaw = pose.yaw;
    o.scale = pose.scale;
    return footprint_of(o, spec);
  }

  bool fits(const Footprint& f) const {
    if (!contains_rect(room_, f.rect)) return false;
    for (const auto& o : obstacles_) {
      if (conflicts(f, o)) return false;
    }
    if (f.bottom < 1e-9) {
      for (const auto& d : doors_) {
        if (geom::convex_intersection_area(f.rect, d) > kOverlapTolerance) return false;
      }
    }
    for (const auto& [strip, head] : windows_) {
      if (f.top >= head && geom::convex_intersection_area(f.rect, strip) > kOverlapTolerance) {
        return false;
      }
    }
    return true;
  }

  // The clearance zones of `rule` around `f` lie inside the room and clear of
  // floor-standing obstacles.
  bool zones_clear(const Footprint& f, const MenuEntry& rule) const {
    std::vector<geom::Quad> zones;
    if (rule.front_clearance > 0.0) {
      const Vec2 c = f.center + geom::rotate({0.0, (f.depth + rule.front_clearance) / 2}, f.yaw);
      zones.push_back(geom::oriented_rect(c, f.width, rule.front_clearance, f.yaw));
    }
    if (rule.side_clearance > 0.0) {
      for (const double s : {-1.0, 1.0}) {
        const Vec2 c = f.center + geom::rotate({s * (f.width + rule.side_clearance) / 2, 0.0}, f.yaw);
        zones.push_back(geom::oriented_rect(c, rule.side_clearance, f.depth, f.yaw));
      }
    }
    for (const auto& z : zones) {
      if (!contains_rect(room_, z)) return false;
      for (const auto& o : obstacles_) {
        if (o.bottom < kWalkClearance && geom::convex_intersection_area(z, o.rect) > kOverlapTolerance) {
          return false;
        }
      }
    }
    return true;
  }

  double mount_y(const FurnitureSpec& spec, double scale) const {
    return spec.placement == PlacementClass::Ceiling
               ? ceiling_mount_y(room_.ceiling_height, config_.lamp_drop, spec.dims.height, scale)
               : 0.0;
  }

  // One proposal for `spec` under `rule`; nullopt when the rule cannot apply
  // (no wall long enough, parent missing, ...).
  std::optional<Pose> propose(const FurnitureSpec& spec, const MenuEntry& rule, Rng& rng) const {
    const double w = spec.dims.width;
    const double d = spec.dims.depth;
    PlacementRule placement = rule.placement;
    if (spec.placement == PlacementClass::Ceiling) placement = PlacementRule::CeilingCenter;

    std::optional<std::pair<Vec2, double>> at;
    switch (placement) {
      case PlacementRule::AgainstWall: at = against_wall(w, d, rule, rng); break;
      case PlacementRule::Corner: at = corner(w, d, rng); break;
      case PlacementRule::RoomCenter: {
        const auto [lo, hi] = room_bounds(room_);
        const Vec2 c = interior_point(room_, rng);
        const double jx = 0.1 * (hi.x - lo.x);
        const double jz = 0.1 * (hi.z - lo.z);
        const Vec2 p{c.x + rng.uniform(-jx, jx), c.z + rng.uniform(-jz, jz)};
        at = std::pair{p, orient(room_, rule.orientation, p)};
        break;
      }
      case PlacementRule::NearParent: at = near_parent(w, d, rule, rng); break;
      case PlacementRule::CeilingCenter: {
        const Vec2 c = interior_point(room_, rng);
        const Vec2 p{c.x + rng.uniform(-0.3, 0.3), c.z + rng.uniform(-0.3, 0.3)};
        const auto o = rule.orientation == OrientationRule::BackToWall ? OrientationRule::AlignRoom
                                                                        : rule.orientation;
        at = std::pair{p, orient(room_, o, p)};
        break;
      }
    }
    if (!at) return std::nullopt;
    Pose pose;
    pose.position = {at->first.x, mount_y(spec, 1.0), at->first.z};
    pose.yaw = at->second;
    return pose;
  }

 private:
  std::optional<std::pair<Vec2, double>> against_wall(double w, double d, const MenuEntry& rule,
                                                      Rng& rng) const {
    std::vector<int> edges;
    std::vector<double> lengths;
    double total = 0.0;
    double margin = kWallGap + rule.side_clearance;
    for (int pass = 0; pass < 2 && edges.empty(); ++pass) {
      if (pass == 1) margin = kWallGap;
      for (int i = 0; i < static_cast<int>(room_.footprint.size()); ++i) {
        const auto [a, b] = room_edge(room_, i);
        const double len = geom::length(b - a);
        if (len >= w + 2 * margin) {
          edges.push_back(i);
          lengths.push_back(len);
          total += len;
        }
      }
    }
    if (edges.empty()) return std::nullopt;
    double pick = rng.uniform(0.0, total);
    std::size_t k = 0;
    while (k + 1 < edges.size() && pick >= lengths[k]) pick -= lengths[k++];
    const int e = edges[k];
    const auto [a, b] = room_edge(room_, e);
    const Vec2 u = (b - a) * (1.0 / lengths[k]);
    const Vec2 n = inward_normal(room_, e);
    const double t = rng.uniform(w / 2 + margin, lengths[k] - w / 2 - margin);
    const Vec2 p = a + u * t + n * (d / 2 + kWallGap);
    const double yaw = rule.orientation == OrientationRule::FaceRoomCenter
                           ? orient(room_, rule.orientation, p)
                           : yaw_facing(n);
    return std::pair{p, yaw};
  }

  std::optional<std::pair<Vec2, double>> corner(double w, double d, Rng& rng) const {
    const int n = static_cast<int>(room_.footprint.size());
    std::vector<int> convex;
    for (int i = 0; i < n; ++i) {
      const auto [pa, pb] = room_edge(room_, (i + n - 1) % n);
      const auto [na, nb] = room_edge(room_, i);
      if (geom::cross(pb - pa, nb - na) > 1e-12) convex.push_back(i);
    }
    if (convex.empty()) return std::nullopt;
    const int v = convex[rng.index(convex.size())];
    const bool use_next = rng.uniform() < 0.5;
    const int e = use_next ? v : (v + n - 1) % n;
    const auto [a, b] = room_edge(room_, e);
    const Vec2 u = (b - a) * (1.0 / geom::length(b - a));
    const Vec2 nrm = inward_normal(room_, e);
    const Vec2 vertex = room_.footprint[static_cast<std::size_t>(v)];
    const Vec2 dir = use_next ? u : u * -1.0;
    const double yaw = yaw_facing(nrm);
    // Slide away from the corner until the side wall no longer cuts in.
    for (double slide = 0.0; slide <= 2.0; slide += 0.05) {
      const Vec2 p = vertex + dir * (w / 2 + kWallGap + slide) + nrm * (d / 2 + kWallGap);
      const auto rect = geom::oriented_rect(p, w, d, yaw);
      if (contains_rect(room_, rect)) return std::pair{p, yaw};
    }
    return std::nullopt;
  }

  std::optional<std::pair<Vec2, double>> near_parent(double w, double d, const MenuEntry& rule,
                                                     Rng& rng) const {
    std::vector<const Footprint*> parents;
    for (const auto& o : obstacles_) {
      if (o.category == rule.parent) parents.push_back(&o);
    }
    if (parents.empty()) return std::nullopt;
    const Footprint& p = *parents[rng.index(parents.size())];
    const double gap = rng.uniform(std::min(0.02, rule.max_gap), rule.max_gap);
    const double pw = p.width;
    const double pd = p.depth;
    Vec2 local;
    double yaw = p.yaw;
    switch (rule.side) {
      case ParentSide::Lateral: {
        const double s = rng.uniform() < 0.5 ? -1.0 : 1.0;
        local = {s * (pw / 2 + gap + w / 2), -pd / 2 + d / 2};
        break;
      }
      case ParentSide::Front: {
        const double slack = std::max(0.0, (pw - w) / 2);
        local = {rng.uniform(-slack, slack), pd / 2 + gap + d / 2};
        if (rule.orientation == OrientationRule::FaceParent) yaw = p.yaw + 180.0;
        break;
      }
      case ParentSide::Around: {
        const auto side = rng.index(4);
        if (side < 2) {
          const double slack = std::max(0.0, (pw - w) / 2);
          const double sgn = side == 0 ? 1.0 : -1.0;
          local = {rng.uniform(-slack, slack), sgn * (pd / 2 + gap + d / 2)};
          yaw = p.yaw + (side == 0 ? 180.0 : 0.0);
        } else {
          const double slack = std::max(0.0, (pd - w) / 2);
          const double sgn = side == 2 ? 1.0 : -1.0;
          local = {sgn * (pw / 2 + gap + d / 2), rng.uniform(-slack, slack)};
          yaw = p.yaw + (side == 2 ? 90.0 : 270.0);
        }
        if (rule.orientation == OrientationRule::AlignParent) yaw = p.yaw;
        break;
      }
    }
    return std::pair{p.center + geom::rotate(local, p.yaw), snap_yaw(yaw)};
  }

  const Room& room_;
  const GenConfig& config_;
  std::vector<Footprint> obstacles_;
  std::vector<geom::Polygon> doors_;
  std::vector<std::pair<geom::Polygon, double>> windows_;
};

struct Placed {
  const FurnitureSpec* spec;
  Pose pose;
};

// The shared menu walk behind complete_scene and generate_wireframes.
std::vector<Placed> run_menu(const Room& room, const Catalog& catalog, const PriorTable& priors,
                             const GenConfig& config, Sampler& sampler,
                             std::map<std::string, int> counts, std::vector<GenWarning>& warnings) {
  Rng rng(config.seed);
  std::vector<Placed> placed;
  for (const auto& entry : priors.menu(room.type)) {
    const int target = rng.range(entry.min_count, entry.max_count);
    if (entry.min_room_area > 0.0 && geom::area(room.footprint) < entry.min_room_area) continue;
    const int have = counts[entry.category];
    std::vector<const FurnitureSpec*> specs;
    for (const auto& s : catalog.items()) {
      if (s.category == entry.category) specs.push_back(&s);
    }
    if (specs.empty()) continue;
    if (entry.placement == PlacementRule::NearParent && entry.min_count == 0 &&
        std::none_of(sampler.obstacles().begin(), sampler.obstacles().end(),
                     [&](const Footprint& f) { return f.category == entry.parent; })) {
      // Optional companions are dropped along with their absent parent.
      continue;
    }
    for (int k = have; k < target; ++k) {
      bool ok = false;
      for (int attempt = 0; attempt < config.max_retries_per_object && !ok; ++attempt) {
        const FurnitureSpec& spec = *specs[rng.index(specs.size())];
        const auto pose = sampler.propose(spec, entry, rng);
        if (!pose) continue;
        const auto fp = sampler.footprint_at(spec, *pose, spec.spec_id);
        if (!sampler.fits(fp) || !sampler.zones_clear(fp, entry)) continue;
        sampler.commit(fp);
        placed.push_back({&spec, *pose});
        ++counts[entry.category];
        ok = true;
      }
      if (!ok) {
        warnings.push_back({"PlacementExhausted", entry.category,
                            "no valid pose for '" + entry.category + "' after " +
                                std::to_string(config.max_retries_per_object) + " attempts"});
        break;
      }
    }
  }
  return placed;
}

std::string fresh_id(const std::string& prefix, int& counter, const std::set<std::string>& taken) {
  std::string id;
  do {
    id = prefix + std::to_string(++counter);
  } while (taken.contains(id));
  return id;
}

}  // namespace

CompletionResult Generator::complete_scene(const Room& room, std::span<const SceneObject> existing,
                                           const GenConfig& config) const {
  check_config(config);
  Sampler sampler(room, config, footprints_of(existing, catalog_));
  std::map<std::string, int> counts;
  std::set<std::string> taken;
  for (const auto& o : existing) {
    ++counts[catalog_.at(o.spec_id).category];
    taken.insert(o.instance_id);
  }
  CompletionResult result;
  const auto placed = run_menu(room, catalog_, priors_, config, sampler, counts, result.warnings);
  int counter = 0;
  for (const auto& p : placed) {
    SceneObject o;
    o.instance_id = fresh_id("gen-", counter, taken);
    o.spec_id = p.spec->spec_id;
    o.position = p.pose.position;
    o.yaw = p.pose.yaw;
    o.scale = p.pose.scale;
    result.objects.push_back(std::move(o));
  }
  return result;
}

std::vector<Suggestion> Generator::suggest_objects(const Room& room,
                                                   std::span<const SceneObject> scene,
                                                   Vec2 location, const CatalogFilter& filter,
                                                   const GenConfig& config) const {
  check_config(config);
  if (!geom::point_in_polygon(room.footprint, location)) {
    throw Error(ErrorCode::InvalidArgument, "location lies outside the room");
  }
  const auto obstacles = footprints_of(scene, catalog_);
  Sampler sampler(room, config, obstacles);
  std::vector<Suggestion> out;
  for (const auto& spec : catalog_.query(filter)) {
    const MenuEntry rule = priors_.rule_for(room.type, spec.category);
    double yaw = orient(room, rule.orientation, location);
    if (rule.orientation == OrientationRule::AlignParent ||
        rule.orientation == OrientationRule::FaceParent) {
      const Footprint* parent = nullptr;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& o : obstacles) {
        const double dist = geom::length(o.center - location);
        if (o.category == rule.parent && dist < best) {
          best = dist;
          parent = &o;
        }
      }
      if (parent) {
        yaw = rule.orientation == OrientationRule::AlignParent
                  ? parent->yaw
                  : yaw_facing(parent->center - location);
      }
    }
    Pose pose;
    pose.position = {location.x, sampler.mount_y(spec, 1.0), location.z};
    pose.yaw = yaw;
    const auto fp = sampler.footprint_at(spec, pose);
    if (!sampler.fits(fp)) continue;
    double clearance = geom::distance_to_boundary(fp.rect, room.footprint);
    for (const auto& o : obstacles) {
      if (vertical_overlap(fp, o)) clearance = std::min(clearance, geom::convex_distance(fp.rect, o.rect));
    }
    out.push_back({spec, pose, clearance});
  }
  if (out.empty()) {
    throw Error(ErrorCode::NoCandidates, "nothing matching the request fits here");
  }
  std::stable_sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
    if (a.clearance != b.clearance) return a.clearance > b.clearance;
    return a.spec.spec_id < b.spec.spec_id;
  });
  if (out.size() > static_cast<std::size_t>(config.suggestion_count)) {
    out.resize(static_cast<std::size_t>(config.suggestion_count));
  }
  return out;
}

Pose Generator::suggest_placement(const Room& room, std::span<const SceneObject> scene,
                                  const FurnitureSpec& spec, const GenConfig& config) const {
  check_config(config);
  Sampler sampler(room, config, footprints_of(scene, catalog_));
  const MenuEntry rule = priors_.rule_for(room.type, spec.category);
  Rng rng(config.seed);
  for (int attempt = 0; attempt < config.max_retries_per_object; ++attempt) {
    auto pose = sampler.propose(spec, rule, rng);
    if (!pose && rule.placement == PlacementRule::NearParent) {
      // No parent in the scene: fall back to a wall position.
      MenuEntry wall = rule;
      wall.placement = PlacementRule::AgainstWall;
      wall.orientation = OrientationRule::BackToWall;
      pose = sampler.propose(spec, wall, rng);
    }
    if (pose && sampler.fits(sampler.footprint_at(spec, *pose))) return *pose;
  }
  throw Error(ErrorCode::PlacementExhausted,
              "no valid pose for '" + spec.spec_id + "' after " +
                  std::to_string(config.max_retries_per_object) + " attempts");
}

SpecFit Generator::fit_spec(const Wireframe& wf, const GenConfig& config) const {
  if (!catalog_.vocabulary().categories.contains(wf.label)) {
    throw Error(ErrorCode::NoSpecForLabel, "no catalog item for label '" + wf.label + "'");
  }
  SpecFit best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (const auto& spec : catalog_.items()) {
    if (spec.category != wf.label) continue;
    const double w = spec.dims.width;
    const double d = spec.dims.depth;
    const double direct = std::abs(w - wf.width) + std::abs(d - wf.depth);
    const double swapped = std::abs(w - wf.depth) + std::abs(d - wf.width);
    // Items come ordered by spec_id, so strict comparison keeps the first.
    if (direct < best_cost) {
      best_cost = direct;
      best = {&spec, false, 1.0};
    }
    if (swapped < best_cost) {
      best_cost = swapped;
      best = {&spec, true, 1.0};
    }
  }
  const double w = best.spec->dims.width;
  const double d = best.spec->dims.depth;
  const double raw = std::sqrt((wf.width * wf.depth) / (w * d));
  best.scale = std::clamp(raw, config.scale_min, config.scale_max);
  return best;
}

CompletionResult Generator::populate_wireframes(const Room& room,
                                                std::span<const Wireframe> wireframes,
                                                const GenConfig& config) const {
  check_config(config);
  CompletionResult result;
  std::vector<Footprint> fps;
  for (const auto& wf : wireframes) {
    const SpecFit fit = fit_spec(wf, config);
    const FurnitureSpec& spec = *fit.spec;
    SceneObject o;
    o.instance_id = "pop-" + wf.wf_id;
    o.spec_id = spec.spec_id;
    o.scale = fit.scale;
    o.yaw = snap_yaw(wf.yaw + (fit.transposed ? 90.0 : 0.0));
    const double y = spec.placement == PlacementClass::Ceiling
                         ? ceiling_mount_y(room.ceiling_height, config.lamp_drop,
                                           spec.dims.height, fit.scale)
                         : 0.0;
    o.position = {wf.center.x, y, wf.center.z};
    auto fp = footprint_of(o, spec);
    if (!contains_rect(room, fp.rect)) {
      result.warnings.push_back({"OutOfBoundsAfterPopulate", o.instance_id,
                                 "'" + spec.spec_id + "' extends past the room footprint"});
    }
    for (const auto& other : fps) {
      if (conflicts(fp, other)) {
        result.warnings.push_back({"OverlapAfterPopulate", o.instance_id,
                                   o.instance_id + " overlaps " + other.id});
      }
    }
    fps.push_back(std::move(fp));
    result.objects.push_back(std::move(o));
  }
  return result;
}

std::vector<Wireframe> Generator::abstract_scene(std::span<const SceneObject> objects) const {
  std::vector<Wireframe> out;
  out.reserve(objects.size());
  for (const auto& o : objects) {
    const auto& spec = catalog_.at(o.spec_id);
    Wireframe wf;
    wf.wf_id = "wf-" + o.instance_id;
    wf.center = o.floor_position();
    wf.width = spec.dims.width * o.scale;
    wf.depth = spec.dims.depth * o.scale;
    wf.yaw = o.yaw;
    wf.label = spec.category;
    wf.origin = WireframeOrigin::Generated;
    out.push_back(std::move(wf));
  }
  return out;
}

WireframeResult Generator::generate_wireframes(const Room& room, std::span<const Wireframe> existing,
                                               const GenConfig& config) const {
  check_config(config);
  std::vector<Footprint> obstacles;
  std::map<std::string, int> counts;
  std::set<std::string> taken;
  for (const auto& wf : existing) {
    taken.insert(wf.wf_id);
    if (wf.hidden) continue;
    const SpecFit fit = fit_spec(wf, config);
    const double h = fit.spec->dims.height * fit.scale;
    Footprint f;
    f.id = wf.wf_id;
    f.category = wf.label;
    f.rect = wireframe_rect(wf);
    f.center = wf.center;
    f.width = wf.width;
    f.depth = wf.depth;
    f.yaw = wf.yaw;
    f.bottom = fit.spec->placement == PlacementClass::Ceiling
                   ? ceiling_mount_y(room.ceiling_height, config.lamp_drop, fit.spec->dims.height,
                                     fit.scale)
                   : 0.0;
    f.top = f.bottom + h;
    obstacles.push_back(std::move(f));
    ++counts[wf.label];
  }
  Sampler sampler(room, config, std::move(obstacles));
  WireframeResult result;
  const auto placed = run_menu(room, catalog_, priors_, config, sampler, counts, result.warnings);
  int counter = 0;
  for (const auto& p : placed) {
    Wireframe wf;
    wf.wf_id = fresh_id("wf-gen-", counter, taken);
    wf.center = {p.pose.position.x, p.pose.position.z};
    wf.width = p.spec->dims.width;
    wf.depth = p.spec->dims.depth;
    wf.yaw = p.pose.yaw;
    wf.label = p.spec->category;
    wf.origin = WireframeOrigin::Generated;
    result.wireframes.push_back(std::move(wf));
  }
  return result;
}

}  // namespace cocreate
