#pragma once

// JSON file formats. Every parser throws Error(ParseError) with the line and
// column of malformed JSON, or the path of the offending field.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "planembed/connectivity.hpp"
#include "planembed/plane_graph.hpp"
#include "planembed/solver.hpp"
#include "planembed/validator.hpp"

namespace planembed::io {

using nlohmann::json;

/// {"vertices": [id...], "rotation": {id: [id...]}, "outer_cycle": [id...]}.
/// An "added_edges" array (as written by triangulate) is accepted and
/// ignored; any other key is rejected.
PlaneGraph parse_graph(std::string_view text);

/// Canonical form: keys sorted, vertices sorted, outer cycle counterclockwise
/// from its smallest id. `added_edges` is emitted when nonempty.
json graph_to_json(const PlaneGraph& g, const std::vector<Edge>& added_edges = {});

/// {"coords": {id: [x, y]}}. Throws MissingCoordinate for an absent vertex
/// and UnknownVertex for an id not in g.
std::vector<Point> parse_coords(std::string_view text, const PlaneGraph& g);
json coords_to_json(const PlaneGraph& g, const std::vector<Point>& coords);

/// {u: {v: lambda}}. Rows of external vertices may be omitted; when present
/// they must be {u: 1}. The result is not validated against g.
WeightScheme parse_weights(std::string_view text, const PlaneGraph& g);
json weights_to_json(const PlaneGraph& g, const WeightScheme& w);

/// {"placement": [{"id": v, "x": x, "y": y}, ...]} counterclockwise.
BoundaryPlacement parse_placement(std::string_view text, const PlaneGraph& g);
json placement_to_json(const PlaneGraph& g, const BoundaryPlacement& p);

json structure_report_to_json(const PlaneGraph& g, const StructureReport& r);
json validation_report_to_json(const PlaneGraph& g, const ValidationReport& r);

/// Whole file as a string; throws InvalidArgument when it cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace planembed::io
