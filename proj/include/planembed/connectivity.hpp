#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planembed/plane_graph.hpp"

namespace planembed {

/// Certificate that a biconnected graph is not nodally 3-connected:
/// G = H u K, H n K = ({u, v}, {}), neither side a path graph nor all of G.
struct Witness {
  Subgraph h;
  Subgraph k;
  VertexIndex u = 0;
  VertexIndex v = 0;
};

/// A bounded face that touches both ends of an external edge without being
/// incident to it, together with the part of the graph enclosed between the
/// face and that edge.
struct InvertedSubgraph {
  Edge external_edge;
  FaceId blocking_face = 0;
  Subgraph region;
};

struct NodalResult {
  bool nodally_3_connected = false;
  bool biconnected = false;
  /// First face pair (in face_order_less order) with a disconnected
  /// intersection; empty when the graph is not biconnected or passes.
  std::optional<std::pair<FaceId, FaceId>> offending_pair;
};

struct StructureReport {
  bool biconnected = false;
  bool faces_simple = false;
  bool nodally_3_connected = false;
  std::optional<std::pair<FaceId, FaceId>> offending_face_pair;
  bool convex_embeddable = false;
  std::optional<std::pair<FaceId, FaceId>> disconnected_bounded_pair;
  std::vector<InvertedSubgraph> inverted_subgraphs;
  /// Present when the graph is biconnected, not nodally 3-connected and small
  /// enough for the exhaustive search.
  std::optional<Witness> witness;
};

inline constexpr std::size_t kDefaultWitnessCap = 16;

/// Biconnected and every two face boundaries (outer face included) meet in a
/// connected subgraph. An empty intersection counts as connected.
NodalResult is_nodally_3connected(const PlaneGraph& g);

/// Exhaustive search over vertex pairs and splits of the remaining
/// components. Returns nothing iff the graph is nodally 3-connected.
/// Throws NotBiconnected, or InstanceTooLarge above `vertex_cap` vertices.
std::optional<Witness> find_witnesses_bruteforce(const PlaneGraph& g,
                                                 std::size_t vertex_cap = kDefaultWitnessCap);

/// True when the quadruple satisfies every witness condition for g.
bool is_valid_witness(const PlaneGraph& g, const Witness& w);

/// All (external edge, bounded face) inversions. Throws FacesNotSimple.
std::vector<InvertedSubgraph> find_inverted_subgraphs(const PlaneGraph& g);

/// Face boundaries simple, bounded face pairs meet connectedly, no inverted
/// subgraphs. Also fills the nodal 3-connectivity fields.
StructureReport is_convex_embeddable(const PlaneGraph& g,
                                     std::size_t witness_cap = kDefaultWitnessCap);

/// Chords that break nodal 3-connectivity of a triangulated graph: edges
/// between two outer vertices, not on the outer boundary, lying on a bounded
/// triangle whose other two edges are not both external. Throws
/// NotTriangulated when some bounded face is not a triangle.
std::vector<Edge> chord_diagnostic(const PlaneGraph& g);

/// Every bounded face has exactly three boundary darts.
bool is_triangulated(const PlaneGraph& g);

}  // namespace planembed
