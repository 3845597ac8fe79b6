#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace planembed {

/// Position of a vertex in the sorted id list of its graph.
using VertexIndex = std::int32_t;
using FaceId = std::int32_t;

/// Undirected edge, normalized so that a < b.
struct Edge {
  VertexIndex a = 0;
  VertexIndex b = 0;

  Edge() = default;
  Edge(VertexIndex u, VertexIndex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed half of an edge.
struct Dart {
  VertexIndex tail = 0;
  VertexIndex head = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// A traced face: a closed walk of darts. Bounded faces of an embedding with
/// counterclockwise rotations are traced counterclockwise, the outer face
/// clockwise.
struct Face {
  FaceId id = 0;
  std::vector<Dart> boundary;
  bool is_outer = false;

  /// Tails of the boundary darts, in walk order.
  std::vector<VertexIndex> cycle() const;
  /// Sorted, without repeats.
  std::vector<VertexIndex> vertex_set() const;
  std::vector<Edge> edge_set() const;
  std::size_t length() const { return boundary.size(); }
};

/// Vertex and edge sets with set semantics. Both vectors are kept sorted and
/// free of duplicates. An edge's endpoints need not be listed in `vertices`.
struct Subgraph {
  std::vector<VertexIndex> vertices;
  std::vector<Edge> edges;

  static Subgraph make(std::vector<VertexIndex> vertices, std::vector<Edge> edges);
  bool empty() const { return vertices.empty() && edges.empty(); }
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b);
Subgraph subgraph_intersection(const Subgraph& a, const Subgraph& b);

/// Selects the outer face at build time: either a face id from tracing, or
/// the outer boundary listed counterclockwise (cyclic shifts accepted).
using OuterSpec = std::variant<FaceId, std::vector<std::string>>;

/// Combinatorial plane embedding of a finite simple graph: opaque string ids,
/// a counterclockwise rotation of neighbours at every vertex and a designated
/// outer face. Immutable after construction.
///
/// Vertices are indexed in sorted id order, so every traversal and report is
/// reproducible. Faces are traced with the predecessor rule: the dart after
/// (u,v) is (v,w) where w immediately precedes u in the rotation of v.
///
/// Components of a disconnected graph are traced independently; each has its
/// own clockwise boundary walk, only one of which is flagged as outer. A graph
/// with no edges gets a single outer face with an empty boundary.
class PlaneGraph {
 public:
  /// Validating constructor from vertex ids and per-vertex rotation lists.
  /// Vertices missing from `rotation` are isolated. Throws Error with
  /// UnknownVertex, DuplicateVertex, EmptyGraph, SelfLoop, DuplicateEdge,
  /// AsymmetricRotation, NonPlanarRotation or OuterFaceNotFound.
  static PlaneGraph build(const std::vector<std::string>& vertices,
                          const std::map<std::string, std::vector<std::string>>& rotation,
                          const OuterSpec& outer);

  /// Low-level constructor used by graph transformations. `ids` must be
  /// sorted and unique, `rotation[v]` holds indices into `ids`, and
  /// `outer_dart` must lie on the intended outer face. Same validation as
  /// build().
  static PlaneGraph from_indices(std::vector<std::string> ids,
                                 std::vector<std::vector<VertexIndex>> rotation,
                                 std::optional<Dart> outer_dart);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return dart_head_.size(); }

  const std::string& id(VertexIndex v) const { return ids_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<VertexIndex> index_of(const std::string& id) const;

  std::span<const VertexIndex> rotation(VertexIndex v) const {
    return rotation_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::vector<VertexIndex>>& rotations() const { return rotation_; }
  std::size_t degree(VertexIndex v) const { return rotation(v).size(); }
  /// Neighbours of v in ascending index order.
  std::vector<VertexIndex> neighbours(VertexIndex v) const;

  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(VertexIndex u, VertexIndex v) const;

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[static_cast<std::size_t>(f)]; }
  FaceId outer_face_id() const { return outer_face_; }
  const Face& outer_face() const { return face(outer_face_); }
  /// Face on the left of the dart; nullopt when (tail, head) is not an edge.
  std::optional<FaceId> face_of(Dart d) const;

  /// Outer boundary vertices listed counterclockwise (the reverse of the
  /// traced walk), starting from the smallest index.
  std::vector<VertexIndex> outer_cycle() const;
  /// True for vertices on the outer face boundary.
  bool is_external(VertexIndex v) const { return external_[static_cast<std::size_t>(v)]; }

  std::size_t component_count() const { return component_count_; }
  std::size_t isolated_vertex_count() const;

 private:
  PlaneGraph() = default;
  static PlaneGraph make(std::vector<std::string> ids,
                         std::vector<std::vector<VertexIndex>> rotation);
  void trace();
  void set_outer(FaceId f);
  std::optional<std::size_t> dart_index(VertexIndex tail, VertexIndex head) const;

  std::vector<std::string> ids_;
  std::vector<std::vector<VertexIndex>> rotation_;
  std::vector<std::size_t> dart_offset_;
  std::vector<VertexIndex> dart_head_;
  std::vector<std::size_t> twin_;
  std::vector<FaceId> dart_face_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<char> external_;
  FaceId outer_face_ = 0;
  std::size_t component_count_ = 0;
};

/// Fresh trace of all faces (identical to g.faces()).
std::vector<Face> trace_faces(const PlaneGraph& g);

struct EulerReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t components = 0;
  bool holds = false;
};

/// Checks v - e + f = c + 1, with f counted as regions of the plane: the
/// outer walks of all components bound one shared unbounded region.
EulerReport euler_check(const PlaneGraph& g);

bool is_connected(const PlaneGraph& g);
/// Connected and no cut vertex. A single vertex or a single edge counts as
/// biconnected.
bool is_biconnected(const PlaneGraph& g);
/// Biconnected and no pair of vertices whose deletion disconnects the graph.
/// Graphs with fewer than four vertices are triconnected exactly when they
/// are complete (K1, K2, K3).
bool is_triconnected(const PlaneGraph& g);

/// A closed walk of at least three darts that visits no vertex twice.
bool face_boundary_is_simple_cycle(const Face& f);

Subgraph face_boundary(const Face& f);
Subgraph face_intersection(const Face& f1, const Face& f2);

/// Connectivity over the subgraph's vertices and edges (edge endpoints count
/// as vertices). The empty subgraph is connected.
bool subgraph_is_connected(const Subgraph& s);
/// A nonempty path graph: a single vertex, or connected with two vertices of
/// degree one and all others of degree two.
bool subgraph_is_simple_path(const Subgraph& s);

/// Deletes the edges of the shared boundary path of two bounded faces and
/// the inner vertices of that path that are left without edges, merging the
/// faces into one. Throws FacesNotAdjacent when
/// they share no edge, IntersectionDisconnected when the shared part is not
/// connected, FacesNotSimple when either boundary is not a simple cycle.
PlaneGraph merge_faces(const PlaneGraph& g, FaceId f1, FaceId f2);

/// Deterministic order key for faces: sorted vertex ids, then face id.
bool face_order_less(const PlaneGraph& g, const Face& a, const Face& b);

}  // namespace planembed
