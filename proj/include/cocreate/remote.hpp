#pragma once

// Client for an external layout model reached over TCP. One request line and
// one reply line, both JSON:
//   -> {"type":"complete","room":{...},"objects":[{id, spec_id, position, rotation, scale}, ...]}
//   <- {"objects":[...]}
// Reply objects whose ids were not sent are the model's additions.

#include <span>
#include <string>
#include <string_view>

#include "cocreate/catalog.hpp"
#include "cocreate/generator.hpp"
#include "cocreate/scene.hpp"

namespace cocreate {

struct RemoteBackend {
  std::string host;
  int port = 0;
  int timeout_ms = 10000;

  // "host:port"; throws InvalidArgument.
  static RemoteBackend parse(std::string_view address);
};

// Sends one line and returns the reply line without its newline. Throws
// BackendUnavailable on connect/IO failure or timeout.
std::string exchange_line(const RemoteBackend& backend, const std::string& line);

// New objects from the backend after re-validation: unknown specs, objects
// outside the room and objects colliding with the scene are dropped with a
// RejectedByValidator warning. y follows the mounting rule. Throws
// BackendUnavailable or DecodeError.
CompletionResult remote_complete(const RemoteBackend& backend, const Room& room,
                                 std::span<const SceneObject> existing, const Catalog& catalog,
                                 double lamp_drop = 0.5);

}  // namespace cocreate
