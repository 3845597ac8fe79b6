#include "planembed/triangulate.hpp"

#include <algorithm>
#include <set>

#include "planembed/error.hpp"

namespace planembed {

namespace {

class ChordInserter {
 public:
  ChordInserter(const PlaneGraph& g) : rotation_(g.rotations()) {
    for (const Edge& e : g.edges()) edges_.insert(e);
  }

  /// Splits the polygon `cycle` (a bounded face walk) into triangles,
  /// appending each triangle's walk to `triangles`.
  void triangulate_polygon(std::vector<VertexIndex> cycle,
                           std::vector<std::vector<VertexIndex>>& triangles) {
    const std::size_t k = cycle.size();
    if (k <= 3) {
      triangles.push_back(std::move(cycle));
      return;
    }
    const auto first = static_cast<std::size_t>(
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin());

    for (std::size_t step = 0; step < k; ++step) {
      const std::size_t apex = (first + step) % k;
      if (!fan_is_valid(cycle, apex)) continue;
      apply_fan(cycle, apex, triangles);
      return;
    }

    for (std::size_t step = 0; step < k; ++step) {
      const std::size_t i = (first + step) % k;
      for (std::size_t off = 2; off + 1 < k; ++off) {
        const std::size_t j = (i + off) % k;
        if (edges_.count(Edge(cycle[i], cycle[j]))) continue;
        insert_chord(cycle, i, j);
        std::vector<VertexIndex> left, right;
        for (std::size_t t = i;; t = (t + 1) % k) {
          left.push_back(cycle[t]);
          if (t == j) break;
        }
        for (std::size_t t = j;; t = (t + 1) % k) {
          right.push_back(cycle[t]);
          if (t == i) break;
        }
        triangulate_polygon(std::move(left), triangles);
        triangulate_polygon(std::move(right), triangles);
        return;
      }
    }
    throw Error(ErrorCode::InvalidArgument, "face admits no new diagonal; embedding is inconsistent");
  }

  const std::vector<std::vector<VertexIndex>>& rotation() const { return rotation_; }
  const std::vector<Edge>& added() const { return added_; }

 private:
  bool fan_is_valid(const std::vector<VertexIndex>& cycle, std::size_t apex) const {
    const std::size_t k = cycle.size();
    for (std::size_t off = 2; off + 1 < k; ++off)
      if (edges_.count(Edge(cycle[apex], cycle[(apex + off) % k]))) return false;
    return true;
  }

  void apply_fan(const std::vector<VertexIndex>& cycle, std::size_t apex,
                 std::vector<std::vector<VertexIndex>>& triangles) {
    const std::size_t k = cycle.size();
    const VertexIndex a = cycle[apex];
    // Within the face, the apex sees the other corners counterclockwise in
    // walk order, starting just after its successor on the walk.
    VertexIndex anchor = cycle[(apex + 1) % k];
    for (std::size_t off = 2; off + 1 < k; ++off) {
      const std::size_t j = (apex + off) % k;
      insert_after(a, anchor, cycle[j]);
      insert_after(cycle[j], cycle[(j + 1) % k], a);
      record(a, cycle[j]);
      anchor = cycle[j];
    }
    for (std::size_t off = 1; off + 1 < k; ++off)
      triangles.push_back({a, cycle[(apex + off) % k], cycle[(apex + off + 1) % k]});
  }

  void insert_chord(const std::vector<VertexIndex>& cycle, std::size_t i, std::size_t j) {
    const std::size_t k = cycle.size();
    insert_after(cycle[i], cycle[(i + 1) % k], cycle[j]);
    insert_after(cycle[j], cycle[(j + 1) % k], cycle[i]);
    record(cycle[i], cycle[j]);
  }

  /// Places `added` right after `anchor` in the rotation of `at`, which puts
  /// it inside the face sector that starts at `anchor`.
  void insert_after(VertexIndex at, VertexIndex anchor, VertexIndex added) {
    auto& rot = rotation_[static_cast<std::size_t>(at)];
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, added);
  }

  void record(VertexIndex u, VertexIndex v) {
    edges_.insert(Edge(u, v));
    added_.emplace_back(u, v);
  }

  std::vector<std::vector<VertexIndex>> rotation_;
  std::set<Edge> edges_;
  std::vector<Edge> added_;
};

}  // namespace

TriangulationResult triangulate(const PlaneGraph& g) {
  if (!is_biconnected(g))
    throw Error(ErrorCode::NotBiconnected, "triangulation needs a biconnected graph");

  ChordInserter inserter(g);
  std::vector<std::pair<FaceId, std::vector<std::vector<VertexIndex>>>> pieces;
  for (const Face& f : g.faces()) {
    if (f.is_outer || f.boundary.empty()) continue;
    std::vector<std::vector<VertexIndex>> triangles;
    inserter.triangulate_polygon(f.cycle(), triangles);
    pieces.emplace_back(f.id, std::move(triangles));
  }

  std::optional<Dart> outer;
  if (g.edge_count() > 0) outer = g.outer_face().boundary.front();
  TriangulationResult result{PlaneGraph::from_indices(g.ids(), inserter.rotation(), outer),
                             inserter.added(),
                             {}};
  std::sort(result.added_edges.begin(), result.added_edges.end());

  for (auto& [fid, triangles] : pieces) {
    std::vector<FaceId> tiles;
    for (const auto& tri : triangles)
      tiles.push_back(*result.graph.face_of(Dart{tri[0], tri[1]}));
    std::sort(tiles.begin(), tiles.end());
    result.face_map.emplace_back(fid, std::move(tiles));
  }
  return result;
}

std::vector<NeighbourDelta> neighbour_deltas(const PlaneGraph& g, const PlaneGraph& g_tri) {
  if (g.ids() != g_tri.ids())
    throw Error(ErrorCode::InvalidArgument, "triangulation must keep the vertex set");
  std::vector<NeighbourDelta> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto vi = static_cast<VertexIndex>(v);
    if (g.is_external(vi)) continue;
    out.push_back(NeighbourDelta{vi, g.neighbours(vi), g_tri.neighbours(vi)});
  }
  return out;
}

}  // namespace planembed
