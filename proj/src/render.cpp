#include "cocreate/render.hpp"

#include <algorithm>
#include <cstdio>

#include "cocreate/layout.hpp"

namespace cocreate {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Frame {
  geom::Vec2 origin;
  double ppm;
  double margin;
  std::string x(double v) const { return num(margin + (v - origin.x) * ppm); }
  std::string y(double v) const { return num(margin + (v - origin.z) * ppm); }
  std::string points(std::span<const geom::Vec2> poly) const {
    std::string s;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) s += ' ';
      s += x(poly[i].x) + "," + y(poly[i].z);
    }
    return s;
  }
};

}  // namespace

std::string render_svg(const Workspace& ws, const Catalog& catalog, const RenderOptions& options) {
  const Room& room = ws.room();
  const auto [lo, hi] = room_bounds(room);
  const Frame f{lo, options.pixels_per_meter, options.margin};
  const double w = (hi.x - lo.x) * f.ppm + 2 * f.margin;
  const double h = (hi.z - lo.z) * f.ppm + 2 * f.margin;
  auto highlighted = [&](const std::string& id) {
    return std::find(options.highlight.begin(), options.highlight.end(), id) != options.highlight.end();
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
                    "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  svg += "<g id=\"room\">\n<polygon class=\"room\" points=\"" + f.points(room.footprint) +
         "\" fill=\"#fafafa\" stroke=\"#222\" stroke-width=\"3\"/>\n";
  for (const auto& o : room.openings) {
    const auto [a, b] = opening_span(room, o);
    const bool door = o.kind == OpeningKind::Door;
    svg += std::string("<line class=\"") + (door ? "door" : "window") + "\" x1=\"" + f.x(a.x) + "\" y1=\"" + f.y(a.z) +
           "\" x2=\"" + f.x(b.x) + "\" y2=\"" + f.y(b.z) + "\" stroke=\"" + (door ? "#b5651d" : "#3b8fd9") +
           "\" stroke-width=\"6\"/>\n";
  }
  svg += "</g>\n";

  const auto objects = ws.object_list();
  if (!objects.empty()) {
    svg += "<g id=\"objects\">\n";
    for (const auto& fp : footprints_of(objects, catalog)) {
      const char* stroke = highlighted(fp.id) ? "#d22" : "#555";
      svg += "<polygon class=\"object\" data-id=\"" + escape(fp.id) + "\" points=\"" + f.points(fp.rect) +
             "\" fill=\"#e6dccb\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"/>\n";
      svg += "<text x=\"" + f.x(fp.center.x) + "\" y=\"" + f.y(fp.center.z) +
             "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + escape(fp.category) +
             "</text>\n";
    }
    svg += "</g>\n";
  }

  const auto wireframes = ws.wireframe_list(false);
  if (!wireframes.empty()) {
    svg += "<g id=\"wireframes\">\n";
    for (const auto& wf : wireframes) {
      const auto rect = wireframe_rect(wf);
      svg += "<polygon class=\"wireframe\" data-id=\"" + escape(wf.wf_id) + "\" points=\"" + f.points(rect) +
             "\" fill=\"none\" stroke=\"" + (highlighted(wf.wf_id) ? "#d22" : "#2a7") +
             "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
      if (!wf.label.empty()) {
        svg += "<text x=\"" + f.x(wf.center.x) + "\" y=\"" + f.y(wf.center.z) +
               "\" font-size=\"10\" fill=\"#2a7\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               escape(wf.label) + "</text>\n";
      }
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cocreate
