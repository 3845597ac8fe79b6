#include "planembed/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace planembed {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PlaneGraph& g, const std::vector<Point>& coords,
                       const SvgOptions& options) {
  double lo_x = coords.empty() ? 0.0 : coords[0].x, hi_x = lo_x;
  double lo_y = coords.empty() ? 0.0 : coords[0].y, hi_y = lo_y;
  for (Point p : coords) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double inner = options.width - 2.0 * options.margin;
  const double s = inner / extent;
  const double height = (hi_y - lo_y) * s + 2.0 * options.margin;
  auto sx = [&](Point p) { return fmt(options.margin + (p.x - lo_x) * s); };
  // y grows downward in SVG, so counterclockwise in the plane shows clockwise on screen.
  auto sy = [&](Point p) { return fmt(options.margin + (hi_y - p.y) * s); };
  auto at = [&](VertexIndex v) { return coords[static_cast<std::size_t>(v)]; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(options.width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(options.width) + " " + fmt(height) + "\">\n";
  out += "<!-- y axis flipped: plane y-up is drawn y-down -->\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g stroke=\"#444\" stroke-width=\"1.2\">\n";
  for (const Edge& e : g.edges())
    out += "<line x1=\"" + sx(at(e.a)) + "\" y1=\"" + sy(at(e.a)) + "\" x2=\"" + sx(at(e.b)) +
           "\" y2=\"" + sy(at(e.b)) + "\"/>\n";
  out += "</g>\n";

  const auto outer = g.outer_cycle();
  if (outer.size() >= 2) {
    out += "<polygon fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\" points=\"";
    for (std::size_t i = 0; i < outer.size(); ++i)
      out += (i ? " " : "") + sx(at(outer[i])) + "," + sy(at(outer[i]));
    out += "\"/>\n";
  }

  out += "<g fill=\"#1f4e79\">\n";
  for (std::size_t v = 0; v < coords.size(); ++v)
    out += "<circle cx=\"" + sx(coords[v]) + "\" cy=\"" + sy(coords[v]) + "\" r=\"3.5\"/>\n";
  out += "</g>\n";
  if (options.labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">\n";
    for (std::size_t v = 0; v < coords.size(); ++v)
      out += "<text x=\"" + fmt(options.margin + (coords[v].x - lo_x) * s + 5.0) + "\" y=\"" +
             fmt(options.margin + (hi_y - coords[v].y) * s - 5.0) + "\">" +
             escape(g.id(static_cast<VertexIndex>(v))) + "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace planembed
