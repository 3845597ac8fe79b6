#include "planembed/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "planembed/error.hpp"

namespace planembed::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const json& object_at(const json& doc, const std::string& field) {
  if (!doc.is_object()) fail(field, "expected an object");
  return doc;
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed,
               const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      fail(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
}

std::string string_at(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> strings_at(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(string_at(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

double number_at(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(field, "expected a finite number");
  return d;
}

VertexIndex vertex_at(const PlaneGraph& g, const std::string& id) {
  auto v = g.index_of(id);
  if (!v) throw Error(ErrorCode::UnknownVertex, "vertex " + id);
  return *v;
}

json ids_of(const PlaneGraph& g, const std::vector<VertexIndex>& vs) {
  json out = json::array();
  for (VertexIndex v : vs) out.push_back(g.id(v));
  return out;
}

json edge_json(const PlaneGraph& g, Edge e) { return json::array({g.id(e.a), g.id(e.b)}); }

json face_json(const PlaneGraph& g, FaceId f) {
  return json{{"id", f}, {"cycle", ids_of(g, g.face(f).cycle())}};
}

json subgraph_json(const PlaneGraph& g, const Subgraph& s) {
  json edges = json::array();
  for (Edge e : s.edges) edges.push_back(edge_json(g, e));
  return json{{"vertices", ids_of(g, s.vertices)}, {"edges", edges}};
}

json pair_json(const PlaneGraph& g, const std::optional<std::pair<FaceId, FaceId>>& p) {
  if (!p) return nullptr;
  return json::array({face_json(g, p->first), face_json(g, p->second)});
}

json point_json(Point p) { return json::array({p.x, p.y}); }

}  // namespace

PlaneGraph parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  object_at(doc, "<root>");
  only_keys(doc, {"vertices", "rotation", "outer_cycle", "added_edges"}, "");

  const auto vertices = strings_at(member(doc, "vertices", ""), "vertices");
  const json& rot = member(doc, "rotation", "");
  if (!rot.is_object()) fail("rotation", "expected an object mapping ids to arrays");
  std::map<std::string, std::vector<std::string>> rotation;
  for (auto it = rot.begin(); it != rot.end(); ++it)
    rotation[it.key()] = strings_at(it.value(), "rotation." + it.key());
  const auto outer = strings_at(member(doc, "outer_cycle", ""), "outer_cycle");
  if (auto it = doc.find("added_edges"); it != doc.end()) {
    if (!it->is_array()) fail("added_edges", "expected an array of id pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string field = "added_edges[" + std::to_string(i) + "]";
      if (strings_at((*it)[i], field).size() != 2) fail(field, "expected two ids");
    }
  }
  return PlaneGraph::build(vertices, rotation, outer);
}

json graph_to_json(const PlaneGraph& g, const std::vector<Edge>& added_edges) {
  json rotation = json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    json list = json::array();
    for (VertexIndex w : g.rotation(static_cast<VertexIndex>(v))) list.push_back(g.id(w));
    rotation[g.id(static_cast<VertexIndex>(v))] = list;
  }
  json out{{"vertices", g.ids()}, {"rotation", rotation}, {"outer_cycle", ids_of(g, g.outer_cycle())}};
  if (!added_edges.empty()) {
    json added = json::array();
    for (Edge e : added_edges) added.push_back(edge_json(g, e));
    out["added_edges"] = added;
  }
  return out;
}

std::vector<Point> parse_coords(std::string_view text, const PlaneGraph& g) {
  const json doc = parse_json(text);
  object_at(doc, "<root>");
  only_keys(doc, {"coords"}, "");
  const json& coords = member(doc, "coords", "");
  if (!coords.is_object()) fail("coords", "expected an object mapping ids to [x, y]");
  std::vector<Point> out(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  for (auto it = coords.begin(); it != coords.end(); ++it) {
    const std::string field = "coords." + it.key();
    const VertexIndex v = vertex_at(g, it.key());
    if (!it->is_array() || it->size() != 2) fail(field, "expected [x, y]");
    out[static_cast<std::size_t>(v)] = {number_at((*it)[0], field + "[0]"),
                                        number_at((*it)[1], field + "[1]")};
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v])
      throw Error(ErrorCode::MissingCoordinate, "no coordinate for " + g.id(static_cast<VertexIndex>(v)));
  return out;
}

json coords_to_json(const PlaneGraph& g, const std::vector<Point>& coords) {
  json c = json::object();
  for (std::size_t v = 0; v < coords.size(); ++v) c[g.id(static_cast<VertexIndex>(v))] = point_json(coords[v]);
  return json{{"coords", c}};
}

WeightScheme parse_weights(std::string_view text, const PlaneGraph& g) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("<root>", "expected an object mapping ids to weight rows");
  WeightScheme w;
  w.rows.resize(g.vertex_count());
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const VertexIndex u = vertex_at(g, it.key());
    if (!it->is_object()) fail(it.key(), "expected an object mapping neighbour ids to weights");
    auto& row = w.rows[static_cast<std::size_t>(u)];
    for (auto jt = it->begin(); jt != it->end(); ++jt)
      row.emplace_back(vertex_at(g, jt.key()), number_at(jt.value(), it.key() + "." + jt.key()));
    std::sort(row.begin(), row.end());
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_external(static_cast<VertexIndex>(v)) && w.rows[v].empty())
      w.rows[v] = {{static_cast<VertexIndex>(v), 1.0}};
  return w;
}

json weights_to_json(const PlaneGraph& g, const WeightScheme& w) {
  json out = json::object();
  for (std::size_t u = 0; u < w.rows.size(); ++u) {
    json row = json::object();
    for (const auto& [v, lambda] : w.rows[u]) row[g.id(v)] = lambda;
    out[g.id(static_cast<VertexIndex>(u))] = row;
  }
  return out;
}

BoundaryPlacement parse_placement(std::string_view text, const PlaneGraph& g) {
  const json doc = parse_json(text);
  object_at(doc, "<root>");
  only_keys(doc, {"placement"}, "");
  const json& list = member(doc, "placement", "");
  if (!list.is_array()) fail("placement", "expected an array of {id, x, y}");
  BoundaryPlacement p;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "placement[" + std::to_string(i) + "]";
    const json& entry = list[i];
    if (!entry.is_object()) fail(field, "expected {id, x, y}");
    only_keys(entry, {"id", "x", "y"}, field);
    p.cycle.push_back(vertex_at(g, string_at(member(entry, "id", field), field + ".id")));
    p.corners.push_back({number_at(member(entry, "x", field), field + ".x"),
                         number_at(member(entry, "y", field), field + ".y")});
  }
  return p;
}

json placement_to_json(const PlaneGraph& g, const BoundaryPlacement& p) {
  json list = json::array();
  for (std::size_t i = 0; i < p.cycle.size(); ++i)
    list.push_back(json{{"id", g.id(p.cycle[i])}, {"x", p.corners[i].x}, {"y", p.corners[i].y}});
  return json{{"placement", list}};
}

json structure_report_to_json(const PlaneGraph& g, const StructureReport& r) {
  json inverted = json::array();
  for (const auto& s : r.inverted_subgraphs)
    inverted.push_back(json{{"external_edge", edge_json(g, s.external_edge)},
                            {"blocking_face", face_json(g, s.blocking_face)},
                            {"region", subgraph_json(g, s.region)}});
  json witness = nullptr;
  if (r.witness)
    witness = json{{"u", g.id(r.witness->u)},
                   {"v", g.id(r.witness->v)},
                   {"h", subgraph_json(g, r.witness->h)},
                   {"k", subgraph_json(g, r.witness->k)}};
  return json{{"biconnected", r.biconnected},
              {"faces_simple", r.faces_simple},
              {"nodally_3_connected", r.nodally_3_connected},
              {"offending_face_pair", pair_json(g, r.offending_face_pair)},
              {"convex_embeddable", r.convex_embeddable},
              {"disconnected_bounded_pair", pair_json(g, r.disconnected_bounded_pair)},
              {"inverted_subgraphs", inverted},
              {"witness", witness}};
}

json validation_report_to_json(const PlaneGraph& g, const ValidationReport& r) {
  auto kind_name = [](kernels::PairKind k) {
    switch (k) {
      case kernels::PairKind::Crossing: return "crossing";
      case kernels::PairKind::Overlap: return "overlap";
      case kernels::PairKind::Touching: return "touching";
      case kernels::PairKind::Suspect: return "suspect";
    }
    return "crossing";
  };
  auto pairs = [&](const std::vector<EdgePairIssue>& list) {
    json out = json::array();
    for (const auto& p : list)
      out.push_back(json{{"edges", json::array({edge_json(g, p.first), edge_json(g, p.second)})},
                         {"kind", kind_name(p.kind)},
                         {"distance", p.distance}});
    return out;
  };
  json degenerate = json::array();
  for (Edge e : r.degenerate_edges) degenerate.push_back(edge_json(g, e));
  json coincident = json::array();
  for (const auto& [u, v] : r.coincident_vertex_pairs) coincident.push_back(json::array({g.id(u), g.id(v)}));
  json on_edge = json::array();
  for (const auto& x : r.vertex_on_edge)
    on_edge.push_back(json{{"vertex", g.id(x.vertex)}, {"edge", edge_json(g, x.edge)}, {"distance", x.distance}});
  json nonconvex = json::array();
  for (FaceId f : r.nonconvex_faces) nonconvex.push_back(face_json(g, f));
  json faces = json::array();
  for (const auto& c : r.face_classifications) {
    json corners = json::array();
    for (Point p : c.corners) corners.push_back(point_json(p));
    faces.push_back(json{{"face", face_json(g, c.face)},
                         {"kind", std::string(to_string(c.kind))},
                         {"corners", corners},
                         {"reflex_corners", c.reflex_corners}});
  }
  json covering = nullptr;
  if (r.covering_checked) {
    covering = json::array();
    for (const auto& v : r.covering_number_violations)
      covering.push_back(json{{"sample", point_json(v.sample)}, {"count", v.count}, {"on_edge", v.on_edge}});
  }
  return json{{"is_embedding", r.is_embedding},
              {"degenerate_edges", degenerate},
              {"coincident_vertex_pairs", coincident},
              {"crossing_or_overlapping_edge_pairs", pairs(r.crossing_or_overlapping_edge_pairs)},
              {"vertex_on_edge", on_edge},
              {"suspect_pairs", pairs(r.suspect_pairs)},
              {"nonconvex_faces", nonconvex},
              {"face_classifications", faces},
              {"covering_number_violations", covering},
              {"orientation_preserved", r.orientation_preserved},
              {"tolerance", r.tolerance}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << contents;
}

}  // namespace planembed::io
