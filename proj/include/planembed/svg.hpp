#pragma once

#include <string>
#include <vector>

#include "planembed/geometry.hpp"
#include "planembed/plane_graph.hpp"

namespace planembed {

struct SvgOptions {
  double width = 480.0;
  double margin = 24.0;
  bool labels = true;
};

/// Edges as line segments, vertices as dots, the outer boundary drawn
/// heavier. Output depends only on the inputs.
std::string render_svg(const PlaneGraph& g, const std::vector<Point>& coords,
                       const SvgOptions& options = {});

}  // namespace planembed
