#include "planembed/validator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "planembed/error.hpp"

namespace planembed {

namespace {

constexpr int kSampleRetries = 8;

std::vector<Point> image(const std::vector<VertexIndex>& cycle, const std::vector<Point>& coords) {
  std::vector<Point> out;
  out.reserve(cycle.size());
  for (VertexIndex v : cycle) out.push_back(coords[static_cast<std::size_t>(v)]);
  return out;
}

double line_offset(Point prev, Point cur, Point next) {
  const double base = distance(prev, next);
  return base == 0.0 ? 0.0 : orient(prev, cur, next) / base;
}

// A corner whose neighbours lie on a common line through it, on the same side.
bool folds_back(Point prev, Point cur, Point next, double tol) {
  return std::abs(line_offset(prev, cur, next)) <= tol && dot(prev - cur, next - cur) >= 0.0;
}

std::vector<Point> distill(std::vector<Point> pts, double tol) {
  bool changed = true;
  while (changed && pts.size() > 2) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() > 2; ++i) {
      const std::size_t n = pts.size();
      const Point prev = pts[(i + n - 1) % n];
      const Point cur = pts[i];
      const Point next = pts[(i + 1) % n];
      const bool duplicate = distance(cur, next) <= tol;
      const bool straight = std::abs(line_offset(prev, cur, next)) <= tol &&
                            dot(prev - cur, next - cur) < 0.0;
      if (duplicate || straight) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return pts;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_coords(const PlaneGraph& g, const std::vector<Point>& coords) {
  if (coords.size() != g.vertex_count())
    throw Error(ErrorCode::MissingCoordinate, "expected " + std::to_string(g.vertex_count()) +
                                                  " coordinates, got " +
                                                  std::to_string(coords.size()));
  for (std::size_t v = 0; v < coords.size(); ++v)
    if (!std::isfinite(coords[v].x) || !std::isfinite(coords[v].y))
      throw Error(ErrorCode::MissingCoordinate,
                  "coordinate of " + g.id(static_cast<VertexIndex>(v)) + " is not finite");
}

}  // namespace

std::string_view to_string(FaceImage kind) {
  switch (kind) {
    case FaceImage::Point: return "Point";
    case FaceImage::Segment: return "Segment";
    case FaceImage::ConvexPolygon: return "ConvexPolygon";
    case FaceImage::Other: return "Other";
  }
  return "Other";
}

double coordinate_scale(const std::vector<Point>& coords) {
  const double d = diameter(coords);
  return d > 0.0 ? d : 1.0;
}

FaceClassification classify_face_image(const Face& face, const std::vector<Point>& coords,
                                       double tol) {
  FaceClassification out;
  out.face = face.id;
  const std::vector<Point> pts = image(face.cycle(), coords);
  if (pts.empty()) return out;

  std::size_t far = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (distance(pts[0], pts[i]) > distance(pts[0], pts[far])) far = i;
  if (distance(pts[0], pts[far]) <= tol) {
    out.kind = FaceImage::Point;
    return out;
  }
  const bool collinear = std::all_of(pts.begin(), pts.end(), [&](Point p) {
    return std::abs(orient(pts[0], pts[far], p)) / distance(pts[0], pts[far]) <= tol;
  });
  if (collinear) {
    out.kind = FaceImage::Segment;
    return out;
  }

  out.corners = distill(pts, tol);
  const std::size_t n = out.corners.size();
  const double orientation = signed_area(out.corners) >= 0.0 ? 1.0 : -1.0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = out.corners[(i + n - 1) % n];
    const Point cur = out.corners[i];
    const Point next = out.corners[(i + 1) % n];
    if (folds_back(prev, cur, next, tol) || orientation * line_offset(prev, cur, next) < 0.0)
      ++out.reflex_corners;
    turning += std::atan2(cross(cur - prev, next - cur), dot(cur - prev, next - cur));
  }
  const bool winds_once = std::abs(std::abs(turning) - 2.0 * std::numbers::pi) < 1e-6;
  out.kind = n >= 3 && out.reflex_corners == 0 && winds_once ? FaceImage::ConvexPolygon
                                                             : FaceImage::Other;
  return out;
}

std::vector<CoveringViolation> covering_number_check(const PlaneGraph& g,
                                                     const std::vector<Point>& coords,
                                                     std::size_t samples, std::uint64_t seed,
                                                     double tol) {
  check_coords(g, coords);
  if (!face_boundary_is_simple_cycle(g.outer_face()))
    throw Error(ErrorCode::OuterNotSimpleCycle, "outer face boundary is not a simple cycle");
  const std::vector<Point> outer = image(g.outer_cycle(), coords);
  if (std::abs(signed_area(outer)) <= tol * coordinate_scale(outer))
    throw Error(ErrorCode::DegenerateFace, "outer boundary image has no area");

  std::vector<std::vector<Point>> polygons;
  for (const Face& f : g.faces())
    if (!f.is_outer) polygons.push_back(image(f.cycle(), coords));

  double lo_x = outer[0].x, hi_x = outer[0].x, lo_y = outer[0].y, hi_y = outer[0].y;
  for (Point p : outer) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }

  auto near_edge = [&](Point p) {
    for (const Edge& e : g.edges())
      if (point_segment_distance(p, coords[static_cast<std::size_t>(e.a)],
                                 coords[static_cast<std::size_t>(e.b)]) <= tol)
        return true;
    return false;
  };

  // Each sample owns a generator seeded from (seed, index), so the points do
  // not depend on how the counting is scheduled.
  std::vector<Point> points(samples);
  std::vector<char> on_edge(samples, 0);
  for (std::size_t s = 0; s < samples; ++s) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(s)));
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto draw_inside = [&] {
      for (;;) {
        const Point p{lo_x + (hi_x - lo_x) * unit(), lo_y + (hi_y - lo_y) * unit()};
        if (point_in_polygon(p, outer) && point_polygon_boundary_distance(p, outer) > tol) return p;
      }
    };
    Point p = draw_inside();
    int attempt = 0;
    while (near_edge(p) && attempt < kSampleRetries) {
      p = draw_inside();
      ++attempt;
    }
    points[s] = p;
    on_edge[s] = near_edge(p) ? 1 : 0;
  }

  const std::vector<int> counts = kernels::covering_counts_omp(polygons, points);
  std::vector<CoveringViolation> out;
  for (std::size_t s = 0; s < samples; ++s) {
    if (on_edge[s])
      out.push_back({points[s], -1, true});
    else if (counts[s] != 1)
      out.push_back({points[s], counts[s], false});
  }
  return out;
}

bool orientation_check(const PlaneGraph& g, const std::vector<Point>& coords, double tol) {
  check_coords(g, coords);
  const double area_tol = tol * coordinate_scale(coords);
  bool positive = true;
  for (const Face& f : g.faces()) {
    if (!face_boundary_is_simple_cycle(f))
      throw Error(ErrorCode::FacesNotSimple,
                  "face " + std::to_string(f.id) + " is not bounded by a simple cycle");
    const std::vector<Point> poly =
        f.is_outer ? image(g.outer_cycle(), coords) : image(f.cycle(), coords);
    const double area = signed_area(poly);
    if (std::abs(area) <= area_tol)
      throw Error(ErrorCode::DegenerateFace,
                  "image of face " + std::to_string(f.id) + " has no area");
    if (area < 0.0) positive = false;
  }
  return positive;
}

ValidationReport validate(const PlaneGraph& g, const std::vector<Point>& coords,
                          const ValidationOptions& options) {
  check_coords(g, coords);
  const double scale = options.scale.value_or(coordinate_scale(coords));
  const double tol = options.tol.geometric_rel * scale;
  const double band = options.tol.suspect_factor * tol;
  ValidationReport r;
  r.tolerance = tol;

  for (const Edge& e : g.edges())
    if (distance(coords[static_cast<std::size_t>(e.a)], coords[static_cast<std::size_t>(e.b)]) <= tol)
      r.degenerate_edges.push_back(e);

  for (std::size_t u = 0; u < coords.size(); ++u)
    for (std::size_t v = u + 1; v < coords.size(); ++v)
      if (distance(coords[u], coords[v]) <= tol)
        r.coincident_vertex_pairs.emplace_back(static_cast<VertexIndex>(u), static_cast<VertexIndex>(v));

  const auto& edges = g.edges();
  for (const auto& f : kernels::scan_edge_pairs_omp(coords, edges, tol, band)) {
    EdgePairIssue issue{edges[f.first], edges[f.second], f.kind, f.distance};
    if (f.kind == kernels::PairKind::Suspect)
      r.suspect_pairs.push_back(issue);
    else
      r.crossing_or_overlapping_edge_pairs.push_back(issue);
  }

  for (std::size_t w = 0; w < coords.size(); ++w)
    for (const Edge& e : edges) {
      if (e.a == static_cast<VertexIndex>(w) || e.b == static_cast<VertexIndex>(w)) continue;
      const Point a = coords[static_cast<std::size_t>(e.a)];
      const Point b = coords[static_cast<std::size_t>(e.b)];
      if (distance(a, b) <= tol) continue;
      const double d = point_segment_distance(coords[w], a, b);
      if (d <= tol && distance(coords[w], a) > tol && distance(coords[w], b) > tol)
        r.vertex_on_edge.push_back({static_cast<VertexIndex>(w), e, d});
    }

  r.is_embedding = r.degenerate_edges.empty() && r.coincident_vertex_pairs.empty() &&
                   r.crossing_or_overlapping_edge_pairs.empty() && r.vertex_on_edge.empty();

  for (const Face& f : g.faces()) {
    if (f.is_outer) continue;
    r.face_classifications.push_back(classify_face_image(f, coords, tol));
    if (r.face_classifications.back().kind != FaceImage::ConvexPolygon)
      r.nonconvex_faces.push_back(f.id);
  }

  try {
    r.orientation_preserved = orientation_check(g, coords, tol);
  } catch (const Error&) {
    r.orientation_preserved = false;
  }

  if (options.covering_samples > 0 && r.crossing_or_overlapping_edge_pairs.empty() &&
      face_boundary_is_simple_cycle(g.outer_face())) {
    try {
      r.covering_number_violations =
          covering_number_check(g, coords, options.covering_samples, options.seed, tol);
      r.covering_checked = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateFace) throw;
    }
  }
  return r;
}

}  // namespace planembed
