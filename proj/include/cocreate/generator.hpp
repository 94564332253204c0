#pragma once

// Built-in layout sampler: priority-ranked category menus, rule-driven pose
// proposals and rejection sampling against the room and existing furniture.
// Every operation is a pure function of its inputs and the configured seed.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocreate/catalog.hpp"
#include "cocreate/priors.hpp"
#include "cocreate/scene.hpp"

namespace cocreate {

struct GenConfig {
  std::uint64_t seed = 0;
  int max_retries_per_object = 20;
  int suggestion_count = 3;
  double scale_min = 0.8;
  double scale_max = 1.2;
  double lamp_drop = 0.5;
  // Keep door swings and window strips free while sampling. Off by default:
  // like the learned model it replaces, the sampler ignores openings.
  bool respect_openings = false;
  double door_swing_radius = 0.8;
  double window_strip_depth = 0.6;
};

// Throws InvalidArgument when suggestion_count < 1 or the clamp misses 1.0.
void check_config(const GenConfig& config);

struct Pose {
  Vec3 position;
  double yaw = 0.0;
  double scale = 1.0;
};

struct GenWarning {
  std::string kind;     // PlacementExhausted, OverlapAfterPopulate, ...
  std::string subject;  // category or instance id
  std::string message;
};

struct CompletionResult {
  std::vector<SceneObject> objects;
  std::vector<GenWarning> warnings;
};

struct WireframeResult {
  std::vector<Wireframe> wireframes;
  std::vector<GenWarning> warnings;
};

struct Suggestion {
  FurnitureSpec spec;
  Pose pose;
  double clearance = 0.0;
};

// Best catalog match for a wireframe footprint.
struct SpecFit {
  const FurnitureSpec* spec = nullptr;
  bool transposed = false;
  double scale = 1.0;
};

class Generator {
 public:
  Generator(const Catalog& catalog, const PriorTable& priors)
      : catalog_(catalog), priors_(priors) {}

  // Objects to add to `existing`. Categories already at their menu maximum
  // are not added again; objects that exhaust their retries are skipped and
  // reported as PlacementExhausted warnings.
  CompletionResult complete_scene(const Room& room, std::span<const SceneObject> existing,
                                  const GenConfig& config) const;

  // Up to suggestion_count distinct specs matching `filter` that fit at
  // `location`, best clearance first. Throws NoCandidates.
  std::vector<Suggestion> suggest_objects(const Room& room, std::span<const SceneObject> scene,
                                          geom::Vec2 location, const CatalogFilter& filter,
                                          const GenConfig& config) const;

  // Throws PlacementExhausted.
  Pose suggest_placement(const Room& room, std::span<const SceneObject> scene,
                         const FurnitureSpec& spec, const GenConfig& config) const;

  // Same sampler as complete_scene, emitting generated wireframes. Visible
  // existing wireframes act as obstacles and count toward the menu.
  WireframeResult generate_wireframes(const Room& room, std::span<const Wireframe> existing,
                                      const GenConfig& config) const;

  // One object per wireframe. Throws NoSpecForLabel; overlaps between the
  // populated objects are reported as warnings.
  CompletionResult populate_wireframes(const Room& room, std::span<const Wireframe> wireframes,
                                       const GenConfig& config) const;

  std::vector<Wireframe> abstract_scene(std::span<const SceneObject> objects) const;

  SpecFit fit_spec(const Wireframe& wf, const GenConfig& config) const;

  const Catalog& catalog() const { return catalog_; }
  const PriorTable& priors() const { return priors_; }

 private:
  const Catalog& catalog_;
  const PriorTable& priors_;
};

}  // namespace cocreate
