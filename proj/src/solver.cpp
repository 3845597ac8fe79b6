#include "planembed/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "planembed/error.hpp"
#include "planembed/kernels.hpp"

namespace planembed {

namespace {

constexpr double kPivotFloor = 1e-14;

void require_simple_outer(const PlaneGraph& g) {
  if (!face_boundary_is_simple_cycle(g.outer_face()))
    throw Error(ErrorCode::OuterNotSimpleCycle, "outer face boundary is not a simple cycle");
}

LinearSystem assemble_unchecked(const PlaneGraph& g, const WeightScheme& w,
                                const BoundaryPlacement& p) {
  const std::size_t m = g.vertex_count();
  LinearSystem sys;
  sys.size = m;
  sys.boundary_rows = p.cycle.size();
  sys.order = p.cycle;
  for (std::size_t v = 0; v < m; ++v)
    if (!g.is_external(static_cast<VertexIndex>(v))) sys.order.push_back(static_cast<VertexIndex>(v));
  sys.row_of.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) sys.row_of[static_cast<std::size_t>(sys.order[i])] = i;

  sys.a.assign(m * m, 0.0);
  sys.bx.assign(m, 0.0);
  sys.by.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) sys.a[i * m + i] = 1.0;
  for (std::size_t i = 0; i < sys.boundary_rows; ++i) {
    sys.bx[i] = p.corners[i].x;
    sys.by[i] = p.corners[i].y;
  }
  for (std::size_t i = sys.boundary_rows; i < m; ++i) {
    const auto& row = w.rows[static_cast<std::size_t>(sys.order[i])];
    for (const auto& [v, lambda] : row) sys.a[i * m + sys.row_of[static_cast<std::size_t>(v)]] -= lambda;
  }
  return sys;
}

EmbeddingResult finish(const PlaneGraph& g, const LinearSystem& sys, WeightScheme scheme,
                       BoundaryPlacement placement, const Tolerances& tol) {
  const Solution sol = solve(sys);
  double bmax = 1.0;
  for (std::size_t i = 0; i < sys.size; ++i)
    bmax = std::max({bmax, std::abs(sys.bx[i]), std::abs(sys.by[i])});
  if (!(sol.residual <= tol.residual_rel * bmax))
    throw Error(ErrorCode::InaccurateSolve, "residual " + std::to_string(sol.residual) +
                                                " exceeds bound " +
                                                std::to_string(tol.residual_rel * bmax));
  EmbeddingResult r;
  r.coords.assign(g.vertex_count(), Point{});
  for (std::size_t i = 0; i < sys.size; ++i)
    r.coords[static_cast<std::size_t>(sys.order[i])] = Point{sol.x[i], sol.y[i]};
  r.scheme = std::move(scheme);
  r.placement = std::move(placement);
  r.residual = sol.residual;
  return r;
}

}  // namespace

double WeightScheme::weight(VertexIndex u, VertexIndex v) const {
  const auto& row = rows[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const auto& entry, VertexIndex key) { return entry.first < key; });
  return it != row.end() && it->first == v ? it->second : 0.0;
}

void validate_weights(const PlaneGraph& g, const WeightScheme& w, const Tolerances& tol) {
  if (w.rows.size() != g.vertex_count())
    throw Error(ErrorCode::InvalidWeights, "scheme has " + std::to_string(w.rows.size()) +
                                               " rows for " + std::to_string(g.vertex_count()) +
                                               " vertices");
  for (std::size_t ui = 0; ui < g.vertex_count(); ++ui) {
    const auto u = static_cast<VertexIndex>(ui);
    const auto& row = w.rows[ui];
    const std::string where = "row of " + g.id(u);
    if (g.is_external(u)) {
      if (row.size() != 1 || row[0].first != u || row[0].second != 1.0)
        throw Error(ErrorCode::InvalidWeights, where + ": external rows must be the identity");
      continue;
    }
    const auto nbrs = g.neighbours(u);
    if (row.size() != nbrs.size())
      throw Error(ErrorCode::InvalidWeights,
                  where + ": needs exactly one positive weight per neighbour");
    double sum = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto [v, lambda] = row[k];
      if (v != nbrs[k])
        throw Error(ErrorCode::InvalidWeights,
                    where + ": weight on non-neighbour or unsorted entry");
      if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw Error(ErrorCode::InvalidWeights,
                    where + ": weight on " + g.id(v) + " must be positive");
      sum += lambda;
    }
    if (!(std::abs(sum - 1.0) <= tol.weight_sum))
      throw Error(ErrorCode::InvalidWeights, where + ": weights sum to " + std::to_string(sum));
  }
}

double placement_scale(const BoundaryPlacement& p) {
  const double d = diameter(p.corners);
  return d > 0.0 ? d : 1.0;
}

BoundaryPlacement validate_placement(const PlaneGraph& g, const BoundaryPlacement& p,
                                     const Tolerances& tol) {
  require_simple_outer(g);
  const auto outer = g.outer_cycle();
  const std::size_t k = outer.size();
  if (p.cycle.size() != k || p.corners.size() != k)
    throw Error(ErrorCode::PlacementMismatch,
                "placement must list the " + std::to_string(k) + " outer vertices");
  auto start = std::find(outer.begin(), outer.end(), p.cycle.front());
  if (start == outer.end())
    throw Error(ErrorCode::PlacementMismatch, g.id(p.cycle.front()) + " is not an outer vertex");
  const auto shift = static_cast<std::size_t>(start - outer.begin());
  for (std::size_t i = 0; i < k; ++i)
    if (outer[(shift + i) % k] != p.cycle[i])
      throw Error(ErrorCode::PlacementMismatch,
                  "placement does not follow the outer cycle counterclockwise at " +
                      g.id(p.cycle[i]));

  BoundaryPlacement out = p;
  out.has_collinear_corners = false;
  const double eps = tol.geometric_rel * placement_scale(p);
  double turning = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Point prev = p.corners[(i + k - 1) % k];
    const Point cur = p.corners[i];
    const Point next = p.corners[(i + 1) % k];
    const std::string at = "corner " + g.id(p.cycle[i]);
    if (distance(cur, next) <= eps)
      throw Error(ErrorCode::NonConvexPlacement, at + " coincides with its successor");
    const double offset = orient(prev, cur, next) / distance(prev, next);
    if (offset < -eps) throw Error(ErrorCode::NonConvexPlacement, at + " is reflex or clockwise");
    if (offset <= eps) {
      if (dot(prev - cur, next - cur) >= 0.0)
        throw Error(ErrorCode::NonConvexPlacement, at + " folds back on its neighbours");
      out.has_collinear_corners = true;
    }
    turning += std::atan2(cross(cur - prev, next - cur), dot(cur - prev, next - cur));
  }
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6)
    throw Error(ErrorCode::NonConvexPlacement, "corners wind around more than once or clockwise");
  return out;
}

WeightScheme barycentric_weights(const PlaneGraph& g) {
  require_simple_outer(g);
  WeightScheme w;
  w.rows.resize(g.vertex_count());
  for (std::size_t ui = 0; ui < g.vertex_count(); ++ui) {
    const auto u = static_cast<VertexIndex>(ui);
    if (g.is_external(u)) {
      w.rows[ui] = {{u, 1.0}};
      continue;
    }
    const auto nbrs = g.neighbours(u);
    if (nbrs.empty()) throw Error(ErrorCode::NotConnected, "internal vertex " + g.id(u) + " is isolated");
    const double lambda = 1.0 / static_cast<double>(nbrs.size());
    for (VertexIndex v : nbrs) w.rows[ui].emplace_back(v, lambda);
  }
  return w;
}

WeightScheme random_weight_scheme(const PlaneGraph& g, std::uint64_t seed) {
  require_simple_outer(g);
  // mt19937_64 output is fixed by the standard; the conversion to [0, 1)
  // is done by hand because distributions are implementation-defined.
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  WeightScheme w;
  w.rows.resize(g.vertex_count());
  for (std::size_t ui = 0; ui < g.vertex_count(); ++ui) {
    const auto u = static_cast<VertexIndex>(ui);
    if (g.is_external(u)) {
      w.rows[ui] = {{u, 1.0}};
      continue;
    }
    const auto nbrs = g.neighbours(u);
    if (nbrs.empty()) throw Error(ErrorCode::NotConnected, "internal vertex " + g.id(u) + " is isolated");
    double sum = 0.0;
    for (VertexIndex v : nbrs) {
      const double raw = 0.1 + 0.9 * unit();
      w.rows[ui].emplace_back(v, raw);
      sum += raw;
    }
    for (auto& entry : w.rows[ui]) entry.second /= sum;
  }
  return w;
}

BoundaryPlacement regular_polygon_placement(const std::vector<VertexIndex>& outer_cycle,
                                            double radius) {
  const std::size_t n = outer_cycle.size();
  if (n < 3)
    throw Error(ErrorCode::CycleTooShort, "a convex polygon needs at least three corners");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  BoundaryPlacement p;
  p.cycle = outer_cycle;
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    p.corners.push_back(Point{radius * std::cos(angle), radius * std::sin(angle)});
  }
  return p;
}

LinearSystem assemble_system(const PlaneGraph& g, const WeightScheme& w,
                             const BoundaryPlacement& p, const Tolerances& tol) {
  const BoundaryPlacement checked = validate_placement(g, p, tol);
  validate_weights(g, w, tol);
  return assemble_unchecked(g, w, checked);
}

Solution solve(const LinearSystem& sys) {
  const std::size_t m = sys.size;
  std::vector<double> a = sys.a;
  Solution sol{sys.bx, sys.by, 0.0};
  if (!kernels::gauss_solve_omp(a, m, sol.x, sol.y, kPivotFloor))
    throw Error(ErrorCode::SingularSystem,
                "pivot vanished; the graph has a component without an outer vertex");

  for (std::size_t i = 0; i < m; ++i) {
    double rx = -sys.bx[i];
    double ry = -sys.by[i];
    for (std::size_t j = 0; j < m; ++j) {
      const double v = sys.a[i * m + j];
      if (v == 0.0) continue;
      rx += v * sol.x[j];
      ry += v * sol.y[j];
    }
    sol.residual = std::max({sol.residual, std::abs(rx), std::abs(ry)});
  }
  return sol;
}

EmbeddingResult convex_combination_map(const PlaneGraph& g, const WeightScheme& w,
                                       const BoundaryPlacement& p, const Tolerances& tol) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "convex combination maps need a connected graph");
  const BoundaryPlacement checked = validate_placement(g, p, tol);
  validate_weights(g, w, tol);
  return finish(g, assemble_unchecked(g, w, checked), w, checked, tol);
}

WeightScheme perturbed_weights(const PlaneGraph& g, const WeightScheme& w,
                               const TriangulationResult& tri, double delta) {
  WeightScheme out;
  out.rows.resize(g.vertex_count());
  for (std::size_t ui = 0; ui < g.vertex_count(); ++ui) {
    const auto u = static_cast<VertexIndex>(ui);
    if (g.is_external(u)) {
      out.rows[ui] = {{u, 1.0}};
      continue;
    }
    const auto before = g.neighbours(u);
    const auto after = tri.graph.neighbours(u);
    std::vector<VertexIndex> added;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(added));
    if (added.empty()) {
      out.rows[ui] = w.rows[ui];
      continue;
    }
    const double spread = delta / static_cast<double>(added.size());
    for (VertexIndex v : after) {
      const bool is_new = std::binary_search(added.begin(), added.end(), v);
      const double lambda = is_new ? spread : (1.0 - delta) * w.weight(u, v);
      if (lambda != 0.0) out.rows[ui].emplace_back(v, lambda);
    }
  }
  return out;
}

EmbeddingResult perturbed_map(const PlaneGraph& g, const WeightScheme& w,
                              const BoundaryPlacement& p, const PerturbationParams& params,
                              const Tolerances& tol) {
  if (!(params.delta >= 0.0 && params.delta < 1.0))
    throw Error(ErrorCode::InvalidArgument, "delta must lie in [0, 1)");
  const PlaneGraph& sup = params.triangulation.graph;
  if (sup.ids() != g.ids() || sup.outer_cycle() != g.outer_cycle() ||
      !std::includes(sup.edges().begin(), sup.edges().end(), g.edges().begin(), g.edges().end()))
    throw Error(ErrorCode::InvalidArgument, "triangulation was not derived from this graph");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "convex combination maps need a connected graph");

  const BoundaryPlacement checked = validate_placement(g, p, tol);
  validate_weights(g, w, tol);
  WeightScheme damped = perturbed_weights(g, w, params.triangulation, params.delta);
  // With delta = 0 the added neighbours carry no weight, so the scheme is not
  // a valid one for the supergraph; it still defines the same system as f.
  if (params.delta > 0.0) validate_weights(sup, damped, tol);
  LinearSystem sys = assemble_unchecked(sup, damped, checked);
  return finish(sup, sys, std::move(damped), checked, tol);
}

double max_deviation(const std::vector<Point>& f, const std::vector<Point>& g) {
  if (f.size() != g.size()) throw Error(ErrorCode::InvalidArgument, "maps cover different vertex sets");
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) best = std::max(best, distance(f[i], g[i]));
  return best;
}

}  // namespace planembed
