#pragma once

#include <vector>

#include "planembed/plane_graph.hpp"

namespace planembed {

struct TriangulationResult {
  /// Same vertices, a superset of the edges, every bounded face a triangle,
  /// outer boundary unchanged.
  PlaneGraph graph;
  std::vector<Edge> added_edges;
  /// For every bounded face of the input (by input face id), the faces of
  /// `graph` that tile it.
  std::vector<std::pair<FaceId, std::vector<FaceId>>> face_map;
};

/// Adds chords inside every bounded face until all bounded faces are
/// triangles. Each face is fanned from the first apex (scanning from its
/// smallest vertex) whose chords are all new edges; when no apex works a
/// single new diagonal splits the face and both halves are handled the same
/// way. The outer face is left alone. Throws NotBiconnected.
TriangulationResult triangulate(const PlaneGraph& g);

struct NeighbourDelta {
  VertexIndex vertex = 0;
  /// Neighbours in the original graph, ascending.
  std::vector<VertexIndex> original;
  /// Neighbours in the triangulation, ascending; always a superset.
  std::vector<VertexIndex> triangulated;
};

/// Neighbour sets of every internal vertex before and after triangulation.
/// Both graphs must share their vertex ids.
std::vector<NeighbourDelta> neighbour_deltas(const PlaneGraph& g, const PlaneGraph& g_tri);

}  // namespace planembed
