#pragma once

// Design variants (workspaces) inside a session, with a shared clipboard and
// an append-only event log. Every successful mutation bumps the workspace
// revision by exactly one and emits one event; a failed mutation throws
// before touching state.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocreate/catalog.hpp"
#include "cocreate/generator.hpp"
#include "cocreate/layout.hpp"
#include "cocreate/scene.hpp"

namespace cocreate {

struct Change {
  enum class Kind { UpsertObject, RemoveObject, UpsertWireframe, RemoveWireframe };
  Kind kind = Kind::UpsertObject;
  std::string id;
  std::optional<SceneObject> object;
  std::optional<Wireframe> wireframe;

  static Change upsert(SceneObject o);
  static Change upsert(Wireframe w);
  static Change remove_object(std::string id);
  static Change remove_wireframe(std::string id);
};

class Workspace {
 public:
  Workspace() = default;
  Workspace(std::string ws_id, Room room);

  const std::string& id() const { return ws_id_; }
  const Room& room() const { return room_; }
  std::uint64_t revision() const { return revision_; }
  const std::map<std::string, SceneObject>& objects() const { return objects_; }
  const std::map<std::string, Wireframe>& wireframes() const { return wireframes_; }

  std::vector<SceneObject> object_list() const;
  std::vector<Wireframe> wireframe_list(bool include_hidden = true) const;

  // Applies one mutation's worth of changes and increments the revision.
  void apply(std::span<const Change> changes);

  // Used when restoring a persisted document.
  void restore(std::uint64_t revision, std::vector<SceneObject> objects,
               std::vector<Wireframe> wireframes);

 private:
  std::string ws_id_;
  Room room_;
  std::uint64_t revision_ = 0;
  std::map<std::string, SceneObject> objects_;
  std::map<std::string, Wireframe> wireframes_;
};

struct Event {
  enum class Type { WorkspaceCreated, WorkspaceDeleted, ActiveChanged, Changes };
  std::uint64_t seq = 0;
  Type type = Type::Changes;
  std::string ws_id;
  std::uint64_t revision = 0;
  std::vector<Change> changes;
  // WorkspaceCreated carries the initial document.
  std::optional<Workspace> snapshot;
};

struct ClipboardItem {
  std::string spec_id;
  geom::Vec2 position;  // floor position at copy time
  double y = 0.0;
  double yaw = 0.0;
  double scale = 1.0;
};

struct MutationResult {
  std::uint64_t revision = 0;
  std::vector<std::string> new_ids;
  std::vector<GenWarning> warnings;
};

struct WorkspaceSummary {
  std::string ws_id;
  std::uint64_t revision = 0;
  std::size_t object_count = 0;
  std::size_t wireframe_count = 0;
  bool active = false;
};

class Session {
 public:
  Session(std::string session_id, Room room_template, const Generator& generator);

  const std::string& id() const { return session_id_; }
  const Room& room_template() const { return template_; }

  // New workspace holding the room template and no furniture.
  std::string create_workspace();
  // Adds a workspace from an exported document after checking it: valid room,
  // known specs, objects inside the room. Keeps the document's id when it is
  // not in use. Throws InvalidRoom, SchemaError or OutOfBounds.
  std::string import_workspace(Workspace ws);
  void switch_workspace(const std::string& ws_id);
  void delete_workspace(const std::string& ws_id);
  std::vector<WorkspaceSummary> list_workspaces() const;
  const Workspace& workspace(const std::string& ws_id) const;
  const Workspace& active() const;
  std::size_t active_index() const { return active_; }

  // Object lifecycle. Moves beyond the walls are clamped and flagged with an
  // OutOfBounds warning; adds, rotations and rescales that leave the room
  // throw OutOfBounds. Overlaps between user-placed objects are allowed.
  MutationResult add_object(const std::string& ws_id, const std::string& spec_id,
                            geom::Vec2 at, double yaw, double scale = 1.0);
  MutationResult move_object(const std::string& ws_id, const std::string& id, geom::Vec2 delta);
  MutationResult rotate_object(const std::string& ws_id, const std::string& id, double yaw);
  MutationResult rescale_object(const std::string& ws_id, const std::string& id, double factor);
  MutationResult delete_objects(const std::string& ws_id, std::span<const std::string> ids);
  MutationResult duplicate_objects(const std::string& ws_id, std::span<const std::string> ids);
  // Replaces the object with another item of its category, placed by the
  // generator.
  MutationResult regenerate_object(const std::string& ws_id, const std::string& id,
                                   const CatalogFilter& filter, const GenConfig& config);

  MutationResult add_wireframe(const std::string& ws_id, Wireframe wf);
  // Normalises a stroke into a labelled wireframe (0.5 m square at the stroke
  // centroid when the stroke is degenerate).
  MutationResult add_wireframe_from_stroke(const std::string& ws_id,
                                           std::span<const geom::Vec2> stroke,
                                           const std::string& label);
  MutationResult update_wireframe(const std::string& ws_id, Wireframe wf);
  MutationResult delete_wireframes(const std::string& ws_id, std::span<const std::string> ids);

  MutationResult complete(const std::string& ws_id, const GenConfig& config);
  // Commits a completion computed elsewhere (e.g. by a remote backend). Ids are
  // reassigned and warning subjects follow them.
  MutationResult add_generated(const std::string& ws_id, CompletionResult result);
  MutationResult generate_wireframes(const std::string& ws_id, const GenConfig& config);
  // Visible wireframes become objects and are hidden, not deleted.
  MutationResult populate(const std::string& ws_id, const GenConfig& config);
  // Objects become generated wireframes; hidden wireframes are discarded.
  MutationResult abstract(const std::string& ws_id);
  // Adds already generated objects (remote backends, chosen suggestions).
  MutationResult add_objects(const std::string& ws_id, std::span<const SceneObject> objects);

  std::size_t copy(const std::string& ws_id, std::span<const std::string> ids);
  // Re-anchors the clipboard group at `anchor` (original spot when absent),
  // nudged by up to 0.5 m on a 5 cm grid to clear collisions. Throws
  // PasteBlocked.
  MutationResult paste(const std::string& ws_id, std::optional<geom::Vec2> anchor);
  const std::vector<ClipboardItem>& clipboard() const { return clipboard_; }

  const std::vector<Event>& events() const { return events_; }
  std::uint64_t last_seq() const { return events_.empty() ? 0 : events_.back().seq; }

  const Generator& generator() const { return generator_; }

  // Persistence support.
  std::uint64_t next_workspace_number() const { return next_ws_; }
  void restore(std::vector<Workspace> workspaces, std::size_t active, std::vector<ClipboardItem> clipboard,
               std::uint64_t next_ws, std::vector<Event> events);

 private:
  Workspace& find(const std::string& ws_id);
  MutationResult commit(Workspace& ws, std::vector<Change> changes, std::vector<std::string> new_ids,
                        std::vector<GenWarning> warnings = {});
  void log(Event e);

  std::string session_id_;
  Room template_;
  const Generator& generator_;
  std::vector<Workspace> workspaces_;
  std::size_t active_ = 0;
  std::vector<ClipboardItem> clipboard_;
  std::uint64_t next_ws_ = 1;
  std::vector<Event> events_;
};

// Replays an event log into the workspace documents it describes.
std::map<std::string, Workspace> replay(std::span<const Event> events);

// Smallest translation on a `step` grid with |dx|, |dz| <= `limit` that makes
// every footprint fit the room and clear `obstacles`; ties broken by (dx, dz).
std::optional<geom::Vec2> find_nudge(const Room& room, std::span<const Footprint> moving,
                                     std::span<const Footprint> obstacles, double limit = 0.5,
                                     double step = 0.05);

}  // namespace cocreate
