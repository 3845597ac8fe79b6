#include "planembed/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "planembed/error.hpp"

namespace planembed {

PlaneGraph from_straight_line_drawing(const std::vector<std::string>& ids,
                                      const std::vector<Point>& coords,
                                      const std::vector<std::pair<std::string, std::string>>& edges) {
  if (ids.size() != coords.size())
    throw Error(ErrorCode::MissingCoordinate, "one coordinate per vertex is required");
  std::map<std::string, Point> at;
  for (std::size_t i = 0; i < ids.size(); ++i) at[ids[i]] = coords[i];
  auto point_of = [&](const std::string& v) {
    auto it = at.find(v);
    if (it == at.end()) throw Error(ErrorCode::UnknownVertex, "vertex " + v);
    return it->second;
  };

  std::map<std::string, std::vector<std::string>> rotation;
  for (const auto& [u, v] : edges) {
    rotation[u].push_back(v);
    rotation[v].push_back(u);
  }
  for (auto& [u, nbrs] : rotation) {
    const Point c = point_of(u);
    std::stable_sort(nbrs.begin(), nbrs.end(), [&](const std::string& a, const std::string& b) {
      const Point pa = point_of(a) - c;
      const Point pb = point_of(b) - c;
      return std::atan2(pa.y, pa.x) < std::atan2(pb.y, pb.x);
    });
  }

  const PlaneGraph first = PlaneGraph::build(ids, rotation, FaceId{0});
  FaceId outer = 0;
  double most_negative = 0.0;
  for (const Face& f : first.faces()) {
    std::vector<Point> poly;
    for (VertexIndex v : f.cycle()) poly.push_back(point_of(first.id(v)));
    const double area = signed_area(poly);
    if (area < most_negative) {
      most_negative = area;
      outer = f.id;
    }
  }
  return PlaneGraph::build(ids, rotation, outer);
}

}  // namespace planembed
