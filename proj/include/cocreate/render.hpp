#pragma once

// Top-down SVG drawing of a workspace: room outline, openings, object
// footprints labelled by category and visible wireframes dashed.

#include <string>

#include "cocreate/catalog.hpp"
#include "cocreate/workspace.hpp"

namespace cocreate {

struct RenderOptions {
  double pixels_per_meter = 100.0;
  double margin = 20.0;  // pixels
  // Ids drawn in red (e.g. validation offenders).
  std::vector<std::string> highlight;
};

// Throws SchemaError for objects with unknown specs.
std::string render_svg(const Workspace& ws, const Catalog& catalog, const RenderOptions& options = {});

}  // namespace cocreate
