#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version
// (suffix _serial) and an OpenMP version (suffix _omp) that must produce
// identical results; the library calls the OpenMP versions.

#include <cstdint>
#include <span>
#include <vector>

#include "planembed/geometry.hpp"
#include "planembed/plane_graph.hpp"

namespace planembed::kernels {

/// In-place Gaussian elimination with partial pivoting on a dense row-major
/// m x m matrix, solving for two right-hand sides at once. On return bx and
/// by hold the solutions. Returns false if a pivot magnitude drops below
/// `pivot_floor` (the matrix is then left partially reduced).
bool gauss_solve_serial(std::vector<double>& a, std::size_t m, std::vector<double>& bx,
                        std::vector<double>& by, double pivot_floor);
bool gauss_solve_omp(std::vector<double>& a, std::size_t m, std::vector<double>& bx,
                     std::vector<double>& by, double pivot_floor);

enum class PairKind : std::uint8_t {
  Crossing,  // relative interiors meet at a single point
  Overlap,   // collinear with a common piece of positive length
  Touching,  // an endpoint of one lies on the other (not a shared vertex)
  Suspect,   // apart, but within the suspect band
};

struct PairFinding {
  std::uint32_t first = 0;   // index into the edge list
  std::uint32_t second = 0;  // first < second
  PairKind kind = PairKind::Crossing;
  double distance = 0.0;

  friend bool operator==(const PairFinding&, const PairFinding&) = default;
};

/// Classifies every pair of non-degenerate edges (length > tol). Pairs that
/// share a vertex are checked only for overlap. Results are sorted by
/// (first, second).
std::vector<PairFinding> scan_edge_pairs_serial(std::span<const Point> points,
                                                std::span<const Edge> edges, double tol,
                                                double suspect_band);
std::vector<PairFinding> scan_edge_pairs_omp(std::span<const Point> points,
                                             std::span<const Edge> edges, double tol,
                                             double suspect_band);

/// For each sample, the number of polygons containing it (even-odd rule).
std::vector<int> covering_counts_serial(std::span<const std::vector<Point>> polygons,
                                        std::span<const Point> samples);
std::vector<int> covering_counts_omp(std::span<const std::vector<Point>> polygons,
                                     std::span<const Point> samples);

}  // namespace planembed::kernels
