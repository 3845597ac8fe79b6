#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planembed/geometry.hpp"
#include "planembed/plane_graph.hpp"

namespace planembed {

/// Plane graph of a straight-line drawing: rotations sorted counterclockwise
/// by angle, outer face the one traced clockwise with the largest area. The
/// drawing must be connected and crossing-free; `coords[i]` belongs to
/// `ids[i]`. Throws like PlaneGraph::build.
PlaneGraph from_straight_line_drawing(const std::vector<std::string>& ids,
                                      const std::vector<Point>& coords,
                                      const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace planembed
