#pragma once

// JSON forms of the public types. Objects travel as
// {id, spec_id, position:[x,y,z], rotation, scale}; rotation is yaw in degrees.
// Readers throw SchemaError on malformed input and InvalidRoom on rooms that
// parse but are not valid.

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "cocreate/catalog.hpp"
#include "cocreate/generator.hpp"
#include "cocreate/intent.hpp"
#include "cocreate/scene.hpp"
#include "cocreate/validate.hpp"
#include "cocreate/workspace.hpp"

namespace cocreate {

using json = nlohmann::json;

json to_json(const Room& room);
Room room_from_json(const json& j);
Room room_from_file(const std::string& path);

json to_json(const SceneObject& o);
SceneObject object_from_json(const json& j);

json to_json(const Wireframe& w);
Wireframe wireframe_from_json(const json& j);

json to_json(const FurnitureSpec& s);
json to_json(const CatalogFilter& f);
CatalogFilter filter_from_json(const json& j);

json to_json(const Intent& i);
json to_json(const ParseResult& r);
ParseResult parse_result_from_json(const json& j);
Command command_from_json(const json& j);
json to_json(const Command& c);

json to_json(const GenWarning& w);
json to_json(const Suggestion& s);
GenConfig gen_config_from_json(const json& j, GenConfig base = {});

json to_json(const ValidationReport& r);
DesignGoals goals_from_json(const json& j, DesignGoals base = {});

json to_json(const Change& c);
Change change_from_json(const json& j);

// {ws_id, revision, room, objects, wireframes}; lists ordered by id.
json to_json(const Workspace& ws);
Workspace workspace_from_json(const json& j);

json to_json(const Event& e, const std::string& session_id);
Event event_from_json(const json& j);

json to_json(const MutationResult& r);

// Full session state including the event log.
json to_json(const Session& s);
// Rebuilds a session; the generator must outlive it.
std::unique_ptr<Session> session_from_json(const json& j, const Generator& generator);

json read_json_file(const std::string& path);

}  // namespace cocreate
