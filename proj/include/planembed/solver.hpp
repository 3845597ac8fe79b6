#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "planembed/geometry.hpp"
#include "planembed/plane_graph.hpp"
#include "planembed/tolerances.hpp"
#include "planembed/triangulate.hpp"

namespace planembed {

/// Coefficients lambda(u, v) of a convex combination map, one sparse row per
/// vertex (indexed like the graph), entries sorted by column and nonzero.
/// External rows hold the single entry (v, 1).
struct WeightScheme {
  std::vector<std::vector<std::pair<VertexIndex, double>>> rows;

  double weight(VertexIndex u, VertexIndex v) const;
};

/// Throws InvalidWeights naming the first row that breaks the convex
/// combination rules for g.
void validate_weights(const PlaneGraph& g, const WeightScheme& w, const Tolerances& tol = {});

/// Outer cycle vertices in counterclockwise cyclic order with their corners.
struct BoundaryPlacement {
  std::vector<VertexIndex> cycle;
  std::vector<Point> corners;
  /// Set by validate_placement when some corner lies on the segment joining
  /// its neighbours. Accepted, but the polygon is not strictly convex.
  bool has_collinear_corners = false;
};

/// Checks that the placement lists the outer cycle of g (any starting
/// vertex, counterclockwise) and forms a convex counterclockwise polygon.
/// Throws OuterNotSimpleCycle, PlacementMismatch or NonConvexPlacement.
/// Returns a copy with has_collinear_corners filled in.
BoundaryPlacement validate_placement(const PlaneGraph& g, const BoundaryPlacement& p,
                                     const Tolerances& tol = {});

/// Diameter of the corners (1 if they coincide); geometric tolerances scale with it.
double placement_scale(const BoundaryPlacement& p);

/// A x = b_x, A y = b_y with boundary rows first. Row i <-> vertex order[i].
struct LinearSystem {
  std::size_t size = 0;
  std::size_t boundary_rows = 0;
  /// Row-major, size * size.
  std::vector<double> a;
  std::vector<double> bx;
  std::vector<double> by;
  std::vector<VertexIndex> order;
  std::vector<std::size_t> row_of;

  double at(std::size_t i, std::size_t j) const { return a[i * size + j]; }
};

struct Solution {
  std::vector<double> x;
  std::vector<double> y;
  /// Max-norm of A x - b over both right-hand sides.
  double residual = 0.0;
};

struct EmbeddingResult {
  /// Indexed by vertex.
  std::vector<Point> coords;
  WeightScheme scheme;
  BoundaryPlacement placement;
  double residual = 0.0;
};

struct PerturbationParams {
  double delta = 0.0;
  TriangulationResult triangulation;
};

/// lambda(u, v) = 1 / deg(u) for internal u. Throws OuterNotSimpleCycle, or
/// NotConnected for an isolated internal vertex.
WeightScheme barycentric_weights(const PlaneGraph& g);

/// Strictly positive random weights on every internal row, normalized.
/// Deterministic for a given seed on every platform.
WeightScheme random_weight_scheme(const PlaneGraph& g, std::uint64_t seed);

/// Corners at angles 2*pi*k/n on a circle, in counterclockwise order.
/// Throws CycleTooShort below three vertices.
BoundaryPlacement regular_polygon_placement(const std::vector<VertexIndex>& outer_cycle,
                                            double radius);

/// Builds A, b_x and b_y. Validates the weights and the placement first.
LinearSystem assemble_system(const PlaneGraph& g, const WeightScheme& w,
                             const BoundaryPlacement& p, const Tolerances& tol = {});

/// Dense Gaussian elimination with partial pivoting (OpenMP kernel).
/// Throws SingularSystem when a pivot vanishes.
Solution solve(const LinearSystem& sys);

/// The unique convex combination map for weights w and boundary placement p.
/// Throws NotConnected, OuterNotSimpleCycle, InvalidWeights,
/// PlacementMismatch, NonConvexPlacement, SingularSystem, or InaccurateSolve
/// when the residual exceeds tol.residual_rel * scale.
EmbeddingResult convex_combination_map(const PlaneGraph& g, const WeightScheme& w,
                                       const BoundaryPlacement& p, const Tolerances& tol = {});

/// Weights on the triangulated supergraph: unchanged rows where
/// triangulation added no neighbour; otherwise delta spread evenly over the
/// added neighbours and (1 - delta) * lambda on the original ones.
WeightScheme perturbed_weights(const PlaneGraph& g, const WeightScheme& w,
                               const TriangulationResult& tri, double delta);

/// Solves the convex combination map of the triangulated supergraph with
/// perturbed weights and the same boundary placement. The returned scheme
/// is the perturbed one (on the supergraph); coordinates are per vertex,
/// which is the same vertex set as g. Throws InvalidArgument unless
/// 0 <= delta < 1 and the triangulation was derived from g.
EmbeddingResult perturbed_map(const PlaneGraph& g, const WeightScheme& w,
                              const BoundaryPlacement& p, const PerturbationParams& params,
                              const Tolerances& tol = {});

/// max_v |f(v) - g(v)|.
double max_deviation(const std::vector<Point>& f, const std::vector<Point>& g);

}  // namespace planembed
