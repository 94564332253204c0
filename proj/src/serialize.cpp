#include "cocreate/serialize.hpp"

#include <cmath>
#include <fstream>

#include "cocreate/error.hpp"

namespace cocreate {

namespace {

using geom::Vec2;

template <class F>
auto schema_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string(what) + ": " + e.what());
  }
}

double number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw Error(ErrorCode::SchemaError, std::string("'") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorCode::SchemaError, std::string("'") + key + "' is not finite");
  return d;
}

json vec(Vec2 v) { return json::array({v.x, v.z}); }

Vec2 vec_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::SchemaError, "expected [x, z]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json polygon(const geom::Polygon& p) {
  json out = json::array();
  for (auto v : p) out.push_back(vec(v));
  return out;
}

geom::Polygon polygon_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::SchemaError, "expected a list of [x, z] points");
  geom::Polygon p;
  for (const auto& v : j) p.push_back(vec_from(v));
  return p;
}

std::string_view event_type(Event::Type t) {
  switch (t) {
    case Event::Type::WorkspaceCreated: return "workspace_created";
    case Event::Type::WorkspaceDeleted: return "workspace_deleted";
    case Event::Type::ActiveChanged: return "active_changed";
    case Event::Type::Changes: return "changes";
  }
  return "changes";
}

Event::Type event_type_from(const std::string& s) {
  if (s == "workspace_created") return Event::Type::WorkspaceCreated;
  if (s == "workspace_deleted") return Event::Type::WorkspaceDeleted;
  if (s == "active_changed") return Event::Type::ActiveChanged;
  if (s == "changes") return Event::Type::Changes;
  throw Error(ErrorCode::SchemaError, "unknown event type '" + s + "'");
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, "'" + path + "': " + e.what());
  }
}

json to_json(const Room& room) {
  json openings = json::array();
  for (const auto& o : room.openings) {
    openings.push_back({{"kind", o.kind == OpeningKind::Door ? "door" : "window"},
                        {"edge", o.edge},
                        {"offset", o.offset},
                        {"width", o.width},
                        {"sill_height", o.sill_height},
                        {"head_height", o.head_height}});
  }
  return {{"id", room.id},
          {"room_type", std::string(to_string(room.type))},
          {"footprint", polygon(room.footprint)},
          {"ceiling_height", room.ceiling_height},
          {"openings", openings}};
}

Room room_from_json(const json& j) {
  Room room = schema_guard("room", [&] {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "room must be an object");
    Room r;
    r.id = j.value("id", std::string("room"));
    try {
      r.type = room_type_from_string(j.at("room_type").get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaError, e.what());
    }
    r.footprint = polygon_from(j.at("footprint"));
    r.ceiling_height = number(j, "ceiling_height");
    if (j.contains("openings")) {
      for (const auto& o : j.at("openings")) {
        Opening op;
        const auto kind = o.at("kind").get<std::string>();
        if (kind == "door") op.kind = OpeningKind::Door;
        else if (kind == "window") op.kind = OpeningKind::Window;
        else throw Error(ErrorCode::SchemaError, "unknown opening kind '" + kind + "'");
        op.edge = o.at("edge").get<int>();
        op.offset = number(o, "offset");
        op.width = number(o, "width");
        op.sill_height = o.contains("sill_height") ? number(o, "sill_height") : 0.0;
        op.head_height = number(o, "head_height");
        r.openings.push_back(op);
      }
    }
    return r;
  });
  if (room.footprint.size() < 3) throw Error(ErrorCode::InvalidRoom, "room footprint needs at least 3 vertices");
  room = normalized(std::move(room));
  validate_room(room);
  return room;
}

Room room_from_file(const std::string& path) { return room_from_json(read_json_file(path)); }

json to_json(const SceneObject& o) {
  return {{"id", o.instance_id},
          {"spec_id", o.spec_id},
          {"position", json::array({o.position.x, o.position.y, o.position.z})},
          {"rotation", o.yaw},
          {"scale", o.scale}};
}

SceneObject object_from_json(const json& j) {
  return schema_guard("object", [&] {
    SceneObject o;
    o.instance_id = j.value("id", std::string());
    o.spec_id = j.at("spec_id").get<std::string>();
    const auto& p = j.at("position");
    if (!p.is_array() || p.size() != 3) throw Error(ErrorCode::SchemaError, "position must be [x, y, z]");
    for (const auto& c : p) {
      if (!c.is_number() || !std::isfinite(c.get<double>())) {
        throw Error(ErrorCode::SchemaError, "position must be numeric");
      }
    }
    o.position = {p[0].get<double>(), p[1].get<double>(), p[2].get<double>()};
    o.yaw = j.contains("rotation") ? number(j, "rotation") : 0.0;
    o.scale = j.contains("scale") ? number(j, "scale") : 1.0;
    if (!(o.scale > 0.0)) throw Error(ErrorCode::SchemaError, "scale must be positive");
    return o;
  });
}

json to_json(const Wireframe& w) {
  return {{"id", w.wf_id},
          {"center", vec(w.center)},
          {"width", w.width},
          {"depth", w.depth},
          {"rotation", w.yaw},
          {"label", w.label},
          {"origin", w.origin == WireframeOrigin::UserDrawn ? "user_drawn" : "generated"},
          {"hidden", w.hidden}};
}

Wireframe wireframe_from_json(const json& j) {
  return schema_guard("wireframe", [&] {
    Wireframe w;
    w.wf_id = j.value("id", std::string());
    w.center = vec_from(j.at("center"));
    w.width = number(j, "width");
    w.depth = number(j, "depth");
    w.yaw = j.contains("rotation") ? number(j, "rotation") : 0.0;
    w.label = j.value("label", std::string());
    const auto origin = j.value("origin", std::string("user_drawn"));
    if (origin == "user_drawn") w.origin = WireframeOrigin::UserDrawn;
    else if (origin == "generated") w.origin = WireframeOrigin::Generated;
    else throw Error(ErrorCode::SchemaError, "unknown wireframe origin '" + origin + "'");
    w.hidden = j.value("hidden", false);
    return w;
  });
}

json to_json(const FurnitureSpec& s) {
  return {{"spec_id", s.spec_id},
          {"category", s.category},
          {"style", s.style},
          {"material", s.material},
          {"dims", json::array({s.dims.width, s.dims.depth, s.dims.height})},
          {"placement_class", std::string(to_string(s.placement))},
          {"display_name", s.display_name}};
}

json to_json(const CatalogFilter& f) {
  json j = json::object();
  if (f.category) j["category"] = *f.category;
  if (f.style) j["style"] = *f.style;
  if (f.material) j["material"] = *f.material;
  return j;
}

CatalogFilter filter_from_json(const json& j) {
  return schema_guard("filter", [&] {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "filter must be an object");
    for (const auto& [key, value] : j.items()) {
      if (key != "category" && key != "style" && key != "material") {
        throw Error(ErrorCode::SchemaError, "unknown filter field '" + key + "'");
      }
    }
    CatalogFilter f;
    auto field = [&](const char* key, std::optional<std::string>& out) {
      if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<std::string>();
    };
    field("category", f.category);
    field("style", f.style);
    field("material", f.material);
    return f;
  });
}

json to_json(const Intent& i) {
  json targets = json::object();
  if (!i.targets.ids.empty()) targets["ids"] = i.targets.ids;
  if (i.targets.at) targets["at"] = vec(*i.targets.at);
  if (i.targets.region) targets["region"] = polygon(*i.targets.region);
  if (i.targets.category) targets["category"] = *i.targets.category;
  json j = {{"kind", std::string(to_string(i.kind))}, {"filter", to_json(i.filter)}, {"targets", targets}};
  j["location"] = i.location ? vec(*i.location) : json(nullptr);
  j["label"] = i.label;
  return j;
}

json to_json(const ParseResult& r) {
  return {{"intent", to_json(r.intent)},
          {"ignored_terms", r.ignored_terms},
          {"confidence", r.confidence == Confidence::Exact ? "exact" : "fuzzy"}};
}

ParseResult parse_result_from_json(const json& j) {
  return schema_guard("parse result", [&] {
    ParseResult r;
    const auto& in = j.at("intent");
    try {
      r.intent.kind = intent_kind_from_string(in.at("kind").get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaError, e.what());
    }
    if (in.contains("filter")) r.intent.filter = filter_from_json(in.at("filter"));
    if (in.contains("location") && !in.at("location").is_null()) r.intent.location = vec_from(in.at("location"));
    if (in.contains("targets")) {
      const auto& t = in.at("targets");
      if (!t.is_object()) throw Error(ErrorCode::SchemaError, "targets must be an object");
      if (t.contains("ids")) r.intent.targets.ids = t.at("ids").get<std::vector<std::string>>();
      if (t.contains("at") && !t.at("at").is_null()) r.intent.targets.at = vec_from(t.at("at"));
      if (t.contains("region") && !t.at("region").is_null()) r.intent.targets.region = polygon_from(t.at("region"));
      if (t.contains("category") && !t.at("category").is_null()) {
        r.intent.targets.category = t.at("category").get<std::string>();
      }
    }
    r.intent.label = in.value("label", std::string());
    if (j.contains("ignored_terms")) r.ignored_terms = j.at("ignored_terms").get<std::vector<std::string>>();
    const auto conf = j.value("confidence", std::string("exact"));
    if (conf == "exact") r.confidence = Confidence::Exact;
    else if (conf == "fuzzy") r.confidence = Confidence::Fuzzy;
    else throw Error(ErrorCode::SchemaError, "unknown confidence '" + conf + "'");
    return r;
  });
}

Command command_from_json(const json& j) {
  return schema_guard("command", [&] {
    Command c;
    c.text = j.at("text").get<std::string>();
    if (j.contains("pointer") && !j.at("pointer").is_null()) c.pointer = vec_from(j.at("pointer"));
    if (j.contains("stroke") && !j.at("stroke").is_null()) c.stroke = polygon_from(j.at("stroke"));
    if (j.contains("selection")) c.selection = j.at("selection").get<std::vector<std::string>>();
    return c;
  });
}

json to_json(const Command& c) {
  json j = {{"text", c.text}};
  if (c.pointer) j["pointer"] = vec(*c.pointer);
  if (c.stroke) j["stroke"] = polygon(*c.stroke);
  if (!c.selection.empty()) j["selection"] = c.selection;
  return j;
}

json to_json(const GenWarning& w) {
  return {{"kind", w.kind}, {"subject", w.subject}, {"message", w.message}};
}

json to_json(const Suggestion& s) {
  return {{"spec", to_json(s.spec)},
          {"position", json::array({s.pose.position.x, s.pose.position.y, s.pose.position.z})},
          {"rotation", s.pose.yaw},
          {"scale", s.pose.scale},
          {"clearance", s.clearance}};
}

GenConfig gen_config_from_json(const json& j, GenConfig c) {
  schema_guard("generator config", [&] {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "config must be an object");
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_retries_per_object")) c.max_retries_per_object = j.at("max_retries_per_object").get<int>();
    if (j.contains("suggestion_count")) c.suggestion_count = j.at("suggestion_count").get<int>();
    if (j.contains("scale_min")) c.scale_min = number(j, "scale_min");
    if (j.contains("scale_max")) c.scale_max = number(j, "scale_max");
    if (j.contains("lamp_drop")) c.lamp_drop = number(j, "lamp_drop");
    if (j.contains("respect_openings")) c.respect_openings = j.at("respect_openings").get<bool>();
    if (j.contains("door_swing_radius")) c.door_swing_radius = number(j, "door_swing_radius");
    if (j.contains("window_strip_depth")) c.window_strip_depth = number(j, "window_strip_depth");
    return 0;
  });
  check_config(c);
  return c;
}

json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"id", c.id}, {"passed", c.passed}, {"details", c.details}});
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"kind", v.kind}, {"ids", v.ids}});
  return {{"checks", checks}, {"violations", violations}, {"score", r.score}, {"all_passed", r.all_passed()}};
}

DesignGoals goals_from_json(const json& j, DesignGoals g) {
  return schema_guard("design goals", [&] {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "goals must be an object");
    if (j.contains("min_furniture_types")) g.min_furniture_types = j.at("min_furniture_types").get<int>();
    if (j.contains("require_seating")) g.require_seating = j.at("require_seating").get<bool>();
    if (j.contains("window_top_clear")) g.window_top_clear = j.at("window_top_clear").get<bool>();
    if (j.contains("navigable")) g.navigable = j.at("navigable").get<bool>();
    if (j.contains("tall_threshold") && !j.at("tall_threshold").is_null()) {
      g.tall_threshold = number(j, "tall_threshold");
    }
    if (j.contains("grid_cell")) g.grid_cell = number(j, "grid_cell");
    if (j.contains("min_reachable_fraction")) g.min_reachable_fraction = number(j, "min_reachable_fraction");
    if (j.contains("window_strip_depth")) g.window_strip_depth = number(j, "window_strip_depth");
    if (j.contains("door_swing_radius")) g.door_swing_radius = number(j, "door_swing_radius");
    if (j.contains("seating_categories")) {
      g.seating_categories = j.at("seating_categories").get<std::vector<std::string>>();
    }
    if (g.min_furniture_types < 0) throw Error(ErrorCode::SchemaError, "min_furniture_types must be >= 0");
    if (!(g.grid_cell > 0.0)) throw Error(ErrorCode::SchemaError, "grid_cell must be positive");
    if (!(g.min_reachable_fraction >= 0.0 && g.min_reachable_fraction <= 1.0)) {
      throw Error(ErrorCode::SchemaError, "min_reachable_fraction must be in [0, 1]");
    }
    if (!(g.window_strip_depth > 0.0) || !(g.door_swing_radius > 0.0)) {
      throw Error(ErrorCode::SchemaError, "strip depth and swing radius must be positive");
    }
    return g;
  });
}

json to_json(const Change& c) {
  switch (c.kind) {
    case Change::Kind::UpsertObject: return {{"op", "upsert_object"}, {"object", to_json(*c.object)}};
    case Change::Kind::RemoveObject: return {{"op", "remove_object"}, {"id", c.id}};
    case Change::Kind::UpsertWireframe: return {{"op", "upsert_wireframe"}, {"wireframe", to_json(*c.wireframe)}};
    case Change::Kind::RemoveWireframe: return {{"op", "remove_wireframe"}, {"id", c.id}};
  }
  return {};
}

Change change_from_json(const json& j) {
  return schema_guard("change", [&] {
    const auto op = j.at("op").get<std::string>();
    if (op == "upsert_object") return Change::upsert(object_from_json(j.at("object")));
    if (op == "remove_object") return Change::remove_object(j.at("id").get<std::string>());
    if (op == "upsert_wireframe") return Change::upsert(wireframe_from_json(j.at("wireframe")));
    if (op == "remove_wireframe") return Change::remove_wireframe(j.at("id").get<std::string>());
    throw Error(ErrorCode::SchemaError, "unknown change op '" + op + "'");
  });
}

json to_json(const Workspace& ws) {
  json objects = json::array();
  for (const auto& [id, o] : ws.objects()) objects.push_back(to_json(o));
  json wireframes = json::array();
  for (const auto& [id, w] : ws.wireframes()) wireframes.push_back(to_json(w));
  return {{"ws_id", ws.id()},
          {"revision", ws.revision()},
          {"room", to_json(ws.room())},
          {"objects", objects},
          {"wireframes", wireframes}};
}

Workspace workspace_from_json(const json& j) {
  return schema_guard("workspace", [&] {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "workspace must be an object");
    Workspace ws(j.value("ws_id", std::string()), room_from_json(j.at("room")));
    std::vector<SceneObject> objects;
    for (const auto& o : j.value("objects", json::array())) {
      objects.push_back(object_from_json(o));
      if (objects.back().instance_id.empty()) throw Error(ErrorCode::SchemaError, "object without id");
    }
    std::set<std::string> seen;
    for (const auto& o : objects) {
      if (!seen.insert(o.instance_id).second) throw Error(ErrorCode::SchemaError, "duplicate object id " + o.instance_id);
    }
    std::vector<Wireframe> wireframes;
    for (const auto& w : j.value("wireframes", json::array())) {
      wireframes.push_back(wireframe_from_json(w));
      if (wireframes.back().wf_id.empty()) throw Error(ErrorCode::SchemaError, "wireframe without id");
    }
    seen.clear();
    for (const auto& w : wireframes) {
      if (!seen.insert(w.wf_id).second) throw Error(ErrorCode::SchemaError, "duplicate wireframe id " + w.wf_id);
    }
    ws.restore(j.value("revision", std::uint64_t{0}), std::move(objects), std::move(wireframes));
    return ws;
  });
}

json to_json(const Event& e, const std::string& session_id) {
  json j = {{"seq", e.seq},
            {"session", session_id},
            {"type", std::string(event_type(e.type))},
            {"ws_id", e.ws_id},
            {"revision", e.revision}};
  json changes = json::array();
  for (const auto& c : e.changes) changes.push_back(to_json(c));
  j["changes"] = changes;
  if (e.snapshot) j["snapshot"] = to_json(*e.snapshot);
  return j;
}

Event event_from_json(const json& j) {
  return schema_guard("event", [&] {
    Event e;
    e.seq = j.at("seq").get<std::uint64_t>();
    e.type = event_type_from(j.at("type").get<std::string>());
    e.ws_id = j.at("ws_id").get<std::string>();
    e.revision = j.at("revision").get<std::uint64_t>();
    for (const auto& c : j.value("changes", json::array())) e.changes.push_back(change_from_json(c));
    if (j.contains("snapshot")) e.snapshot = workspace_from_json(j.at("snapshot"));
    return e;
  });
}

json to_json(const MutationResult& r) {
  json warnings = json::array();
  for (const auto& w : r.warnings) warnings.push_back(to_json(w));
  return {{"revision", r.revision}, {"new_ids", r.new_ids}, {"warnings", warnings}};
}

json to_json(const Session& s) {
  json workspaces = json::array();
  for (const auto& summary : s.list_workspaces()) workspaces.push_back(to_json(s.workspace(summary.ws_id)));
  json clipboard = json::array();
  for (const auto& c : s.clipboard()) {
    clipboard.push_back({{"spec_id", c.spec_id},
                         {"position", vec(c.position)},
                         {"y", c.y},
                         {"rotation", c.yaw},
                         {"scale", c.scale}});
  }
  json events = json::array();
  for (const auto& e : s.events()) events.push_back(to_json(e, s.id()));
  return {{"session_id", s.id()},
          {"room_template", to_json(s.room_template())},
          {"active", s.active_index()},
          {"next_workspace", s.next_workspace_number()},
          {"workspaces", workspaces},
          {"clipboard", clipboard},
          {"events", events}};
}

std::unique_ptr<Session> session_from_json(const json& j, const Generator& generator) {
  return schema_guard("session", [&] {
    auto s = std::make_unique<Session>(j.at("session_id").get<std::string>(),
                                       room_from_json(j.at("room_template")), generator);
    std::vector<Workspace> workspaces;
    for (const auto& w : j.at("workspaces")) workspaces.push_back(workspace_from_json(w));
    std::vector<ClipboardItem> clipboard;
    for (const auto& c : j.value("clipboard", json::array())) {
      clipboard.push_back({c.at("spec_id").get<std::string>(), vec_from(c.at("position")), number(c, "y"),
                           number(c, "rotation"), number(c, "scale")});
    }
    std::vector<Event> events;
    for (const auto& e : j.value("events", json::array())) events.push_back(event_from_json(e));
    s->restore(std::move(workspaces), j.at("active").get<std::size_t>(), std::move(clipboard),
               j.at("next_workspace").get<std::uint64_t>(), std::move(events));
    return s;
  });
}

}  // namespace cocreate
