#include "cocreate/workspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "cocreate/error.hpp"

namespace cocreate {

namespace {

using geom::Vec2;

constexpr Vec2 kDuplicateOffset{0.3, 0.3};
constexpr double kStrokeFallback = 0.5;

Footprint shifted(Footprint fp, Vec2 d) {
  for (auto& c : fp.rect) c = c + d;
  fp.center = fp.center + d;
  return fp;
}

bool inside(const Room& room, const Footprint& fp) { return contains_rect(room, fp.rect); }

double mount_y(const Room& room, const FurnitureSpec& spec, double scale) {
  return spec.placement == PlacementClass::Ceiling
             ? ceiling_mount_y(room.ceiling_height, GenConfig{}.lamp_drop, spec.dims.height, scale)
             : 0.0;
}

std::string object_id(std::uint64_t rev, std::size_t k) {
  return "o" + std::to_string(rev) + "." + std::to_string(k);
}

std::string wireframe_id(std::uint64_t rev, std::size_t k) {
  return "w" + std::to_string(rev) + "." + std::to_string(k);
}

const SceneObject& object_in(const Workspace& ws, const std::string& id) {
  auto it = ws.objects().find(id);
  if (it == ws.objects().end()) throw Error(ErrorCode::UnknownInstance, "no object '" + id + "'");
  return it->second;
}

const Wireframe& wireframe_in(const Workspace& ws, const std::string& id) {
  auto it = ws.wireframes().find(id);
  if (it == ws.wireframes().end()) throw Error(ErrorCode::UnknownWireframe, "no wireframe '" + id + "'");
  return it->second;
}

void check_label(const Catalog& catalog, const std::string& label) {
  if (!label.empty() && !catalog.vocabulary().categories.count(label)) {
    throw Error(ErrorCode::UnknownAttribute, "unknown category '" + label + "'");
  }
}

Footprint wireframe_footprint(const Wireframe& wf) {
  Footprint fp;
  fp.id = wf.wf_id;
  fp.category = wf.label;
  fp.rect = wireframe_rect(wf);
  fp.center = wf.center;
  fp.width = wf.width;
  fp.depth = wf.depth;
  fp.yaw = wf.yaw;
  fp.top = 1.0;
  return fp;
}

}  // namespace

Change Change::upsert(SceneObject o) {
  Change c;
  c.kind = Kind::UpsertObject;
  c.id = o.instance_id;
  c.object = std::move(o);
  return c;
}

Change Change::upsert(Wireframe w) {
  Change c;
  c.kind = Kind::UpsertWireframe;
  c.id = w.wf_id;
  c.wireframe = std::move(w);
  return c;
}

Change Change::remove_object(std::string id) {
  Change c;
  c.kind = Kind::RemoveObject;
  c.id = std::move(id);
  return c;
}

Change Change::remove_wireframe(std::string id) {
  Change c;
  c.kind = Kind::RemoveWireframe;
  c.id = std::move(id);
  return c;
}

Workspace::Workspace(std::string ws_id, Room room) : ws_id_(std::move(ws_id)), room_(std::move(room)) {}

std::vector<SceneObject> Workspace::object_list() const {
  std::vector<SceneObject> out;
  out.reserve(objects_.size());
  for (const auto& [id, o] : objects_) out.push_back(o);
  return out;
}

std::vector<Wireframe> Workspace::wireframe_list(bool include_hidden) const {
  std::vector<Wireframe> out;
  for (const auto& [id, w] : wireframes_) {
    if (include_hidden || !w.hidden) out.push_back(w);
  }
  return out;
}

void Workspace::apply(std::span<const Change> changes) {
  for (const auto& c : changes) {
    switch (c.kind) {
      case Change::Kind::UpsertObject: objects_[c.id] = *c.object; break;
      case Change::Kind::RemoveObject: objects_.erase(c.id); break;
      case Change::Kind::UpsertWireframe: wireframes_[c.id] = *c.wireframe; break;
      case Change::Kind::RemoveWireframe: wireframes_.erase(c.id); break;
    }
  }
  ++revision_;
}

void Workspace::restore(std::uint64_t revision, std::vector<SceneObject> objects,
                        std::vector<Wireframe> wireframes) {
  revision_ = revision;
  objects_.clear();
  wireframes_.clear();
  for (auto& o : objects) {
    std::string id = o.instance_id;
    objects_.emplace(std::move(id), std::move(o));
  }
  for (auto& w : wireframes) {
    std::string id = w.wf_id;
    wireframes_.emplace(std::move(id), std::move(w));
  }
}

std::optional<Vec2> find_nudge(const Room& room, std::span<const Footprint> moving,
                               std::span<const Footprint> obstacles, double limit, double step) {
  const int n = static_cast<int>(std::floor(limit / step + 1e-9));
  std::vector<std::pair<int, int>> grid;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) grid.emplace_back(i, j);
  }
  std::sort(grid.begin(), grid.end(), [](auto a, auto b) {
    return std::make_tuple(a.first * a.first + a.second * a.second, a.first, a.second) <
           std::make_tuple(b.first * b.first + b.second * b.second, b.first, b.second);
  });
  for (auto [i, j] : grid) {
    const Vec2 d{i * step, j * step};
    bool ok = true;
    for (const auto& m : moving) {
      const Footprint fp = shifted(m, d);
      if (!inside(room, fp)) {
        ok = false;
        break;
      }
      for (const auto& o : obstacles) {
        if (conflicts(fp, o)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return d;
  }
  return std::nullopt;
}

Session::Session(std::string session_id, Room room_template, const Generator& generator)
    : session_id_(std::move(session_id)), template_(std::move(room_template)), generator_(generator) {
  validate_room(template_);
  create_workspace();
}

Workspace& Session::find(const std::string& ws_id) {
  for (auto& ws : workspaces_) {
    if (ws.id() == ws_id) return ws;
  }
  throw Error(ErrorCode::UnknownWorkspace, "no workspace '" + ws_id + "'");
}

const Workspace& Session::workspace(const std::string& ws_id) const {
  return const_cast<Session*>(this)->find(ws_id);
}

const Workspace& Session::active() const {
  if (workspaces_.empty()) throw Error(ErrorCode::UnknownWorkspace, "session has no workspaces");
  return workspaces_[active_];
}

void Session::log(Event e) {
  e.seq = last_seq() + 1;
  events_.push_back(std::move(e));
}

std::string Session::create_workspace() {
  std::string id = "ws-" + std::to_string(next_ws_++);
  Workspace fresh(id, template_);
  workspaces_.push_back(fresh);
  Event e;
  e.type = Event::Type::WorkspaceCreated;
  e.ws_id = id;
  e.revision = fresh.revision();
  e.snapshot = std::move(fresh);
  log(std::move(e));
  return id;
}

std::string Session::import_workspace(Workspace ws) {
  validate_room(ws.room());
  const auto& catalog = generator_.catalog();
  for (const auto& o : ws.object_list()) {
    const auto& spec = catalog.at(o.spec_id);
    if (!(o.scale > 0.0)) throw Error(ErrorCode::SchemaError, "object " + o.instance_id + " has a non-positive scale");
    if (!inside(ws.room(), footprint_of(o, spec))) {
      throw Error(ErrorCode::OutOfBounds, "object " + o.instance_id + " lies outside the room");
    }
  }
  for (const auto& w : ws.wireframe_list()) {
    if (!(w.width > 0.0 && w.depth > 0.0)) {
      throw Error(ErrorCode::SchemaError, "wireframe " + w.wf_id + " has non-positive dimensions");
    }
  }

  // The document keeps its id when that id is free here.
  std::string id = ws.id();
  const bool taken = std::any_of(workspaces_.begin(), workspaces_.end(),
                                 [&](const Workspace& w) { return w.id() == id; });
  if (id.empty() || taken) {
    id = "ws-" + std::to_string(next_ws_++);
  } else if (id.rfind("ws-", 0) == 0) {
    const std::string digits = id.substr(3);
    if (!digits.empty() && digits.size() < 19 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      next_ws_ = std::max<std::uint64_t>(next_ws_, std::stoull(digits) + 1);
    }
  }
  Workspace fresh(id, ws.room());
  fresh.restore(ws.revision(), ws.object_list(), ws.wireframe_list());
  workspaces_.push_back(fresh);
  Event e;
  e.type = Event::Type::WorkspaceCreated;
  e.ws_id = id;
  e.revision = fresh.revision();
  e.snapshot = std::move(fresh);
  log(std::move(e));
  return id;
}

void Session::switch_workspace(const std::string& ws_id) {
  for (std::size_t i = 0; i < workspaces_.size(); ++i) {
    if (workspaces_[i].id() == ws_id) {
      active_ = i;
      Event e;
      e.type = Event::Type::ActiveChanged;
      e.ws_id = ws_id;
      e.revision = workspaces_[i].revision();
      log(std::move(e));
      return;
    }
  }
  throw Error(ErrorCode::UnknownWorkspace, "no workspace '" + ws_id + "'");
}

void Session::delete_workspace(const std::string& ws_id) {
  auto it = std::find_if(workspaces_.begin(), workspaces_.end(),
                         [&](const Workspace& w) { return w.id() == ws_id; });
  if (it == workspaces_.end()) throw Error(ErrorCode::UnknownWorkspace, "no workspace '" + ws_id + "'");
  if (workspaces_.size() == 1) {
    throw Error(ErrorCode::InvalidArgument, "cannot delete the last workspace");
  }
  const auto idx = static_cast<std::size_t>(it - workspaces_.begin());
  const std::uint64_t rev = it->revision();
  workspaces_.erase(it);
  if (idx < active_ || active_ >= workspaces_.size()) --active_;
  Event e;
  e.type = Event::Type::WorkspaceDeleted;
  e.ws_id = ws_id;
  e.revision = rev;
  log(std::move(e));
}

std::vector<WorkspaceSummary> Session::list_workspaces() const {
  std::vector<WorkspaceSummary> out;
  for (std::size_t i = 0; i < workspaces_.size(); ++i) {
    const auto& ws = workspaces_[i];
    out.push_back({ws.id(), ws.revision(), ws.objects().size(), ws.wireframes().size(), i == active_});
  }
  return out;
}

MutationResult Session::commit(Workspace& ws, std::vector<Change> changes,
                               std::vector<std::string> new_ids, std::vector<GenWarning> warnings) {
  ws.apply(changes);
  Event e;
  e.type = Event::Type::Changes;
  e.ws_id = ws.id();
  e.revision = ws.revision();
  e.changes = std::move(changes);
  log(std::move(e));
  return {ws.revision(), std::move(new_ids), std::move(warnings)};
}

MutationResult Session::add_object(const std::string& ws_id, const std::string& spec_id, Vec2 at,
                                   double yaw, double scale) {
  auto& ws = find(ws_id);
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  const auto& spec = generator_.catalog().at(spec_id);
  SceneObject o;
  o.instance_id = object_id(ws.revision() + 1, 1);
  o.spec_id = spec_id;
  o.yaw = geom::normalize_yaw(yaw);
  o.scale = scale;
  o.position = {at.x, mount_y(ws.room(), spec, scale), at.z};
  if (!inside(ws.room(), footprint_of(o, spec))) {
    throw Error(ErrorCode::OutOfBounds, "'" + spec_id + "' does not fit inside the room there");
  }
  std::string id = o.instance_id;
  return commit(ws, {Change::upsert(std::move(o))}, {id});
}

MutationResult Session::move_object(const std::string& ws_id, const std::string& id, Vec2 delta) {
  auto& ws = find(ws_id);
  const SceneObject& old = object_in(ws, id);
  const auto& spec = generator_.catalog().at(old.spec_id);
  auto fits_at = [&](Vec2 p) {
    SceneObject o = old;
    o.position.x = p.x;
    o.position.z = p.z;
    return inside(ws.room(), footprint_of(o, spec));
  };
  const Vec2 from = old.floor_position();
  const Vec2 target = from + delta;
  Vec2 pos = target;
  std::vector<GenWarning> warnings;
  if (!fits_at(target) && fits_at(from)) {
    pos = from;
    for (int axis = 0; axis < 2; ++axis) {
      Vec2 full = pos;
      (axis == 0 ? full.x : full.z) = axis == 0 ? target.x : target.z;
      if (fits_at(full)) {
        pos = full;
        continue;
      }
      double lo = 0.0, hi = 1.0;
      for (int k = 0; k < 48; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (fits_at(pos + (full - pos) * mid)) lo = mid;
        else hi = mid;
      }
      pos = pos + (full - pos) * lo;
    }
    warnings.push_back({"OutOfBounds", id, "move clamped at the room boundary"});
  }
  SceneObject moved = old;
  moved.position.x = pos.x;
  moved.position.z = pos.z;
  return commit(ws, {Change::upsert(std::move(moved))}, {}, std::move(warnings));
}

MutationResult Session::rotate_object(const std::string& ws_id, const std::string& id, double yaw) {
  auto& ws = find(ws_id);
  SceneObject o = object_in(ws, id);
  o.yaw = geom::normalize_yaw(yaw);
  if (!inside(ws.room(), footprint_of(o, generator_.catalog().at(o.spec_id)))) {
    throw Error(ErrorCode::OutOfBounds, "rotation would cross a wall");
  }
  return commit(ws, {Change::upsert(std::move(o))}, {});
}

MutationResult Session::rescale_object(const std::string& ws_id, const std::string& id, double factor) {
  auto& ws = find(ws_id);
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  }
  SceneObject o = object_in(ws, id);
  const auto& spec = generator_.catalog().at(o.spec_id);
  o.scale *= factor;
  o.position.y = mount_y(ws.room(), spec, o.scale);
  if (!inside(ws.room(), footprint_of(o, spec))) {
    throw Error(ErrorCode::OutOfBounds, "rescaled object would cross a wall");
  }
  return commit(ws, {Change::upsert(std::move(o))}, {});
}

MutationResult Session::delete_objects(const std::string& ws_id, std::span<const std::string> ids) {
  auto& ws = find(ws_id);
  if (ids.empty()) throw Error(ErrorCode::MissingTarget, "nothing to delete");
  std::set<std::string> seen;
  std::vector<Change> changes;
  for (const auto& id : ids) {
    object_in(ws, id);
    if (seen.insert(id).second) changes.push_back(Change::remove_object(id));
  }
  return commit(ws, std::move(changes), {});
}

MutationResult Session::duplicate_objects(const std::string& ws_id, std::span<const std::string> ids) {
  auto& ws = find(ws_id);
  if (ids.empty()) throw Error(ErrorCode::MissingTarget, "nothing to duplicate");
  const auto& catalog = generator_.catalog();
  const auto objects = ws.object_list();
  std::vector<Footprint> obstacles = footprints_of(objects, catalog);
  std::vector<Change> changes;
  std::vector<std::string> new_ids;
  const std::uint64_t rev = ws.revision() + 1;
  for (const auto& id : ids) {
    SceneObject copy = object_in(ws, id);
    const auto& spec = catalog.at(copy.spec_id);
    copy.position.x += kDuplicateOffset.x;
    copy.position.z += kDuplicateOffset.z;
    copy.instance_id = object_id(rev, new_ids.size() + 1);
    const Footprint fp = footprint_of(copy, spec);
    const auto nudge = find_nudge(ws.room(), std::span(&fp, 1), obstacles);
    if (!nudge) throw Error(ErrorCode::PasteBlocked, "no free spot near '" + id + "' for a duplicate");
    copy.position.x += nudge->x;
    copy.position.z += nudge->z;
    obstacles.push_back(shifted(fp, *nudge));
    new_ids.push_back(copy.instance_id);
    changes.push_back(Change::upsert(std::move(copy)));
  }
  return commit(ws, std::move(changes), std::move(new_ids));
}

MutationResult Session::regenerate_object(const std::string& ws_id, const std::string& id,
                                          const CatalogFilter& filter, const GenConfig& config) {
  auto& ws = find(ws_id);
  check_config(config);
  const auto& catalog = generator_.catalog();
  const SceneObject old = object_in(ws, id);
  const auto& old_spec = catalog.at(old.spec_id);
  CatalogFilter f = filter;
  f.category = old_spec.category;
  auto candidates = catalog.query(f);
  if (candidates.empty()) throw Error(ErrorCode::NoCandidates, "no catalog item matches the request");
  std::vector<FurnitureSpec> others;
  for (const auto& c : candidates) {
    if (c.spec_id != old.spec_id) others.push_back(c);
  }
  const auto& pool = others.empty() ? candidates : others;
  const FurnitureSpec& pick = pool[config.seed % pool.size()];

  std::vector<SceneObject> scene;
  for (const auto& o : ws.object_list()) {
    if (o.instance_id != id) scene.push_back(o);
  }
  SceneObject fresh;
  fresh.instance_id = object_id(ws.revision() + 1, 1);
  fresh.spec_id = pick.spec_id;
  fresh.yaw = old.yaw;
  fresh.scale = 1.0;
  fresh.position = {old.position.x, mount_y(ws.room(), pick, 1.0), old.position.z};

  const Footprint fp = footprint_of(fresh, pick);
  bool keeps_spot = inside(ws.room(), fp);
  if (keeps_spot) {
    for (const auto& o : footprints_of(scene, catalog)) {
      if (conflicts(fp, o)) {
        keeps_spot = false;
        break;
      }
    }
  }
  if (!keeps_spot) {
    const Pose pose = generator_.suggest_placement(ws.room(), scene, pick, config);
    fresh.position = pose.position;
    fresh.yaw = pose.yaw;
    fresh.scale = pose.scale;
  }
  std::string new_id = fresh.instance_id;
  return commit(ws, {Change::remove_object(id), Change::upsert(std::move(fresh))}, {new_id});
}

MutationResult Session::add_wireframe(const std::string& ws_id, Wireframe wf) {
  auto& ws = find(ws_id);
  if (!(wf.width > 0.0) || !(wf.depth > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "wireframe needs a positive width and depth");
  }
  check_label(generator_.catalog(), wf.label);
  wf.yaw = geom::normalize_yaw(wf.yaw);
  wf.wf_id = wireframe_id(ws.revision() + 1, 1);
  const Footprint fp = wireframe_footprint(wf);
  const auto nudge = find_nudge(ws.room(), std::span(&fp, 1), {});
  if (!nudge) throw Error(ErrorCode::OutOfBounds, "wireframe does not fit inside the room");
  wf.center = wf.center + *nudge;
  std::string id = wf.wf_id;
  return commit(ws, {Change::upsert(std::move(wf))}, {id});
}

MutationResult Session::add_wireframe_from_stroke(const std::string& ws_id,
                                                  std::span<const Vec2> stroke,
                                                  const std::string& label) {
  if (stroke.empty()) throw Error(ErrorCode::InvalidArgument, "empty stroke");
  Wireframe wf;
  wf.label = label;
  wf.origin = WireframeOrigin::UserDrawn;
  try {
    const auto r = geom::min_area_bounding_rect(stroke);
    wf.center = r.center;
    wf.width = r.width;
    wf.depth = r.depth;
    wf.yaw = r.yaw;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateStroke) throw;
    Vec2 sum{};
    for (auto p : stroke) sum = sum + p;
    wf.center = sum * (1.0 / static_cast<double>(stroke.size()));
    wf.width = wf.depth = kStrokeFallback;
  }
  return add_wireframe(ws_id, std::move(wf));
}

MutationResult Session::update_wireframe(const std::string& ws_id, Wireframe wf) {
  auto& ws = find(ws_id);
  wireframe_in(ws, wf.wf_id);
  if (!(wf.width > 0.0) || !(wf.depth > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "wireframe needs a positive width and depth");
  }
  check_label(generator_.catalog(), wf.label);
  wf.yaw = geom::normalize_yaw(wf.yaw);
  if (!contains_rect(ws.room(), wireframe_rect(wf))) {
    throw Error(ErrorCode::OutOfBounds, "wireframe does not fit inside the room");
  }
  return commit(ws, {Change::upsert(std::move(wf))}, {});
}

MutationResult Session::delete_wireframes(const std::string& ws_id, std::span<const std::string> ids) {
  auto& ws = find(ws_id);
  if (ids.empty()) throw Error(ErrorCode::MissingTarget, "nothing to delete");
  std::set<std::string> seen;
  std::vector<Change> changes;
  for (const auto& id : ids) {
    wireframe_in(ws, id);
    if (seen.insert(id).second) changes.push_back(Change::remove_wireframe(id));
  }
  return commit(ws, std::move(changes), {});
}

MutationResult Session::complete(const std::string& ws_id, const GenConfig& config) {
  const auto& ws = find(ws_id);
  return add_generated(ws_id, generator_.complete_scene(ws.room(), ws.object_list(), config));
}

MutationResult Session::add_generated(const std::string& ws_id, CompletionResult result) {
  auto& ws = find(ws_id);
  const std::uint64_t rev = ws.revision() + 1;
  std::map<std::string, std::string> renamed;
  std::vector<Change> changes;
  std::vector<std::string> ids;
  for (auto& o : result.objects) {
    std::string id = object_id(rev, ids.size() + 1);
    renamed[o.instance_id] = id;
    o.instance_id = id;
    ids.push_back(id);
    changes.push_back(Change::upsert(std::move(o)));
  }
  for (auto& w : result.warnings) {
    if (auto it = renamed.find(w.subject); it != renamed.end()) w.subject = it->second;
  }
  return commit(ws, std::move(changes), std::move(ids), std::move(result.warnings));
}

MutationResult Session::generate_wireframes(const std::string& ws_id, const GenConfig& config) {
  auto& ws = find(ws_id);
  auto result = generator_.generate_wireframes(ws.room(), ws.wireframe_list(false), config);
  const std::uint64_t rev = ws.revision() + 1;
  std::vector<Change> changes;
  std::vector<std::string> ids;
  for (auto& wf : result.wireframes) {
    wf.wf_id = wireframe_id(rev, ids.size() + 1);
    ids.push_back(wf.wf_id);
    changes.push_back(Change::upsert(std::move(wf)));
  }
  return commit(ws, std::move(changes), std::move(ids), std::move(result.warnings));
}

MutationResult Session::populate(const std::string& ws_id, const GenConfig& config) {
  auto& ws = find(ws_id);
  std::vector<Wireframe> visible;
  std::vector<GenWarning> warnings;
  for (const auto& wf : ws.wireframe_list(false)) {
    if (wf.label.empty()) {
      warnings.push_back({"UnlabeledWireframe", wf.wf_id, "wireframe has no label and was skipped"});
    } else {
      visible.push_back(wf);
    }
  }
  if (visible.empty()) throw Error(ErrorCode::MissingTarget, "no labelled wireframes to populate");
  auto result = generator_.populate_wireframes(ws.room(), visible, config);
  const std::uint64_t rev = ws.revision() + 1;
  std::map<std::string, std::string> renamed;
  std::vector<Change> changes;
  std::vector<std::string> ids;
  for (auto& o : result.objects) {
    std::string id = object_id(rev, ids.size() + 1);
    renamed[o.instance_id] = id;
    o.instance_id = id;
    ids.push_back(id);
    changes.push_back(Change::upsert(std::move(o)));
  }
  for (auto wf : visible) {
    wf.hidden = true;
    changes.push_back(Change::upsert(std::move(wf)));
  }
  for (auto& w : result.warnings) {
    if (auto it = renamed.find(w.subject); it != renamed.end()) w.subject = it->second;
    warnings.push_back(std::move(w));
  }
  return commit(ws, std::move(changes), std::move(ids), std::move(warnings));
}

MutationResult Session::abstract(const std::string& ws_id) {
  auto& ws = find(ws_id);
  if (ws.objects().empty()) throw Error(ErrorCode::MissingTarget, "no objects to abstract");
  auto wfs = generator_.abstract_scene(ws.object_list());
  const std::uint64_t rev = ws.revision() + 1;
  std::vector<Change> changes;
  std::vector<std::string> ids;
  for (const auto& [id, o] : ws.objects()) changes.push_back(Change::remove_object(id));
  for (const auto& [id, w] : ws.wireframes()) {
    if (w.hidden) changes.push_back(Change::remove_wireframe(id));
  }
  for (auto& wf : wfs) {
    wf.wf_id = wireframe_id(rev, ids.size() + 1);
    ids.push_back(wf.wf_id);
    changes.push_back(Change::upsert(std::move(wf)));
  }
  return commit(ws, std::move(changes), std::move(ids));
}

MutationResult Session::add_objects(const std::string& ws_id, std::span<const SceneObject> objects) {
  auto& ws = find(ws_id);
  const std::uint64_t rev = ws.revision() + 1;
  std::vector<Change> changes;
  std::vector<std::string> ids;
  for (SceneObject o : objects) {
    const auto& spec = generator_.catalog().at(o.spec_id);
    if (!inside(ws.room(), footprint_of(o, spec))) {
      throw Error(ErrorCode::OutOfBounds, "'" + o.spec_id + "' does not fit inside the room");
    }
    o.instance_id = object_id(rev, ids.size() + 1);
    ids.push_back(o.instance_id);
    changes.push_back(Change::upsert(std::move(o)));
  }
  return commit(ws, std::move(changes), std::move(ids));
}

std::size_t Session::copy(const std::string& ws_id, std::span<const std::string> ids) {
  auto& ws = find(ws_id);
  if (ids.empty()) throw Error(ErrorCode::MissingTarget, "nothing to copy");
  std::vector<ClipboardItem> items;
  for (const auto& id : ids) {
    const auto& o = object_in(ws, id);
    items.push_back({o.spec_id, o.floor_position(), o.position.y, o.yaw, o.scale});
  }
  clipboard_ = std::move(items);
  return clipboard_.size();
}

MutationResult Session::paste(const std::string& ws_id, std::optional<Vec2> anchor) {
  auto& ws = find(ws_id);
  if (clipboard_.empty()) throw Error(ErrorCode::PasteBlocked, "clipboard is empty");
  const auto& catalog = generator_.catalog();
  Vec2 center{};
  for (const auto& c : clipboard_) center = center + c.position;
  center = center * (1.0 / static_cast<double>(clipboard_.size()));
  const Vec2 shift = anchor ? *anchor - center : Vec2{};

  const std::uint64_t rev = ws.revision() + 1;
  std::vector<SceneObject> pasted;
  std::vector<Footprint> moving;
  for (const auto& c : clipboard_) {
    const auto& spec = catalog.at(c.spec_id);
    SceneObject o;
    o.instance_id = object_id(rev, pasted.size() + 1);
    o.spec_id = c.spec_id;
    o.yaw = c.yaw;
    o.scale = c.scale;
    const Vec2 p = c.position + shift;
    o.position = {p.x, mount_y(ws.room(), spec, c.scale), p.z};
    moving.push_back(footprint_of(o, spec));
    pasted.push_back(std::move(o));
  }
  const auto obstacles = footprints_of(ws.object_list(), catalog);
  const auto nudge = find_nudge(ws.room(), moving, obstacles);
  if (!nudge) throw Error(ErrorCode::PasteBlocked, "no free spot within 0.5 m of the paste location");
  std::vector<Change> changes;
  std::vector<std::string> ids;
  for (auto& o : pasted) {
    o.position.x += nudge->x;
    o.position.z += nudge->z;
    ids.push_back(o.instance_id);
    changes.push_back(Change::upsert(std::move(o)));
  }
  return commit(ws, std::move(changes), std::move(ids));
}

void Session::restore(std::vector<Workspace> workspaces, std::size_t active,
                      std::vector<ClipboardItem> clipboard, std::uint64_t next_ws,
                      std::vector<Event> events) {
  if (workspaces.empty() || active >= workspaces.size()) {
    throw Error(ErrorCode::SchemaError, "session document has no valid active workspace");
  }
  workspaces_ = std::move(workspaces);
  active_ = active;
  clipboard_ = std::move(clipboard);
  next_ws_ = next_ws;
  events_ = std::move(events);
}

std::map<std::string, Workspace> replay(std::span<const Event> events) {
  std::map<std::string, Workspace> out;
  for (const auto& e : events) {
    switch (e.type) {
      case Event::Type::WorkspaceCreated:
        if (!e.snapshot) throw Error(ErrorCode::SchemaError, "creation event without snapshot");
        out[e.ws_id] = *e.snapshot;
        break;
      case Event::Type::WorkspaceDeleted: out.erase(e.ws_id); break;
      case Event::Type::ActiveChanged: break;
      case Event::Type::Changes: {
        auto it = out.find(e.ws_id);
        if (it == out.end()) throw Error(ErrorCode::UnknownWorkspace, "event for unknown workspace");
        it->second.apply(e.changes);
        if (it->second.revision() != e.revision) {
          throw Error(ErrorCode::SchemaError, "event revision out of sequence");
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace cocreate
