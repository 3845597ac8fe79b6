#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "planembed/geometry.hpp"
#include "planembed/kernels.hpp"
#include "planembed/plane_graph.hpp"
#include "planembed/tolerances.hpp"

namespace planembed {

enum class FaceImage { Point, Segment, ConvexPolygon, Other };

std::string_view to_string(FaceImage kind);

struct FaceClassification {
  FaceId face = 0;
  FaceImage kind = FaceImage::Other;
  /// Corners left after merging coincident neighbours and dropping straight
  /// corners. Empty for points and segments.
  std::vector<Point> corners;
  /// Distilled corners that turn against the polygon's orientation, plus
  /// corners where the boundary folds back on itself.
  std::size_t reflex_corners = 0;
};

struct EdgePairIssue {
  Edge first;
  Edge second;
  kernels::PairKind kind = kernels::PairKind::Crossing;
  double distance = 0.0;
};

struct VertexOnEdge {
  VertexIndex vertex = 0;
  Edge edge;
  double distance = 0.0;
};

struct CoveringViolation {
  Point sample;
  /// Bounded faces whose image contains the sample; -1 when every retry
  /// landed on an edge image.
  int count = 0;
  bool on_edge = false;

  friend bool operator==(const CoveringViolation&, const CoveringViolation&) = default;
};

struct ValidationReport {
  /// Decided by injectivity alone: no degenerate edge, no coincident
  /// vertices, no edge pair meeting outside a shared endpoint and no vertex
  /// on a non-incident edge.
  bool is_embedding = false;
  std::vector<Edge> degenerate_edges;
  std::vector<std::pair<VertexIndex, VertexIndex>> coincident_vertex_pairs;
  /// Crossing, Overlap and Touching pairs.
  std::vector<EdgePairIssue> crossing_or_overlapping_edge_pairs;
  std::vector<VertexOnEdge> vertex_on_edge;
  /// Pairs within the suspect band. Diagnostic only.
  std::vector<EdgePairIssue> suspect_pairs;
  /// Bounded faces whose image is not a convex polygon.
  std::vector<FaceId> nonconvex_faces;
  /// One entry per bounded face, by face id.
  std::vector<FaceClassification> face_classifications;
  std::vector<CoveringViolation> covering_number_violations;
  bool covering_checked = false;
  /// False whenever some bounded face image is degenerate.
  bool orientation_preserved = false;
  /// Absolute geometric tolerance that was applied.
  double tolerance = 0.0;
};

struct ValidationOptions {
  Tolerances tol;
  /// Length unit for the relative tolerances. Defaults to the diameter of
  /// the coordinates.
  std::optional<double> scale;
  /// Random samples for the covering number check; 0 skips it.
  std::size_t covering_samples = 0;
  std::uint64_t seed = 1;
};

/// Throws MissingCoordinate unless coords has one finite point per vertex.
ValidationReport validate(const PlaneGraph& g, const std::vector<Point>& coords,
                          const ValidationOptions& options = {});

/// `tol` is absolute.
FaceClassification classify_face_image(const Face& face, const std::vector<Point>& coords,
                                       double tol);

/// Draws `samples` points uniformly inside the outer boundary image, away
/// from every edge image, and reports those not covered by exactly one
/// bounded face image. A sample landing within `tol` of an edge is redrawn
/// up to 8 times before it is reported with on_edge set. Throws
/// OuterNotSimpleCycle, or DegenerateFace when the outer image has no area.
std::vector<CoveringViolation> covering_number_check(const PlaneGraph& g,
                                                     const std::vector<Point>& coords,
                                                     std::size_t samples, std::uint64_t seed,
                                                     double tol);

/// True iff every bounded face image and the outer cycle image (listed
/// counterclockwise) have positive signed area. `tol` is absolute; areas
/// below tol * coordinate_scale count as zero. Throws FacesNotSimple, or
/// DegenerateFace when some face image has area within tolerance of zero.
bool orientation_check(const PlaneGraph& g, const std::vector<Point>& coords, double tol);

/// Diameter of the points, or 1 when they all coincide.
double coordinate_scale(const std::vector<Point>& coords);

}  // namespace planembed
