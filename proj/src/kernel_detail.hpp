#pragma once

// Per-element work shared by the serial and OpenMP kernels.

#include <algorithm>
#include <cmath>
#include <optional>

#include "planembed/kernels.hpp"

namespace planembed::kernels::detail {

inline double line_distance(Point p, Point a, Point b) {
  return std::abs(orient(a, b, p)) / distance(a, b);
}

inline std::optional<PairFinding> classify_pair(std::span<const Point> pts, Edge e1, Edge e2,
                                                std::uint32_t i, std::uint32_t j, double tol,
                                                double band) {
  auto at = [&](VertexIndex v) { return pts[static_cast<std::size_t>(v)]; };
  const Point p1 = at(e1.a), p2 = at(e1.b), q1 = at(e2.a), q2 = at(e2.b);
  if (distance(p1, p2) <= tol || distance(q1, q2) <= tol) return std::nullopt;

  const bool share = e1.a == e2.a || e1.a == e2.b || e1.b == e2.a || e1.b == e2.b;
  if (share) {
    const VertexIndex s = (e1.a == e2.a || e1.a == e2.b) ? e1.a : e1.b;
    const Point ps = at(s);
    const Point p = at(e1.a == s ? e1.b : e1.a);
    const Point q = at(e2.a == s ? e2.b : e2.a);
    const double d = std::min(point_segment_distance(q, ps, p), point_segment_distance(p, ps, q));
    if (d <= tol) return PairFinding{i, j, PairKind::Overlap, d};
    if (d <= band) return PairFinding{i, j, PairKind::Suspect, d};
    return std::nullopt;
  }

  const double d = segment_segment_distance(p1, p2, q1, q2);
  if (d > tol) {
    if (d <= band) return PairFinding{i, j, PairKind::Suspect, d};
    return std::nullopt;
  }

  if (line_distance(q1, p1, p2) <= tol && line_distance(q2, p1, p2) <= tol) {
    const Point dir = (1.0 / distance(p1, p2)) * (p2 - p1);
    const double t1 = dot(q1 - p1, dir);
    const double t2 = dot(q2 - p1, dir);
    const double lo = std::max(0.0, std::min(t1, t2));
    const double hi = std::min(distance(p1, p2), std::max(t1, t2));
    if (hi - lo > tol) return PairFinding{i, j, PairKind::Overlap, d};
  }
  const double touch = std::min({point_segment_distance(q1, p1, p2), point_segment_distance(q2, p1, p2),
                                 point_segment_distance(p1, q1, q2), point_segment_distance(p2, q1, q2)});
  if (touch <= tol) return PairFinding{i, j, PairKind::Touching, d};
  return PairFinding{i, j, PairKind::Crossing, d};
}

inline int covering_count(std::span<const std::vector<Point>> polygons, Point p) {
  int count = 0;
  for (const auto& poly : polygons)
    if (point_in_polygon(p, poly)) ++count;
  return count;
}

inline bool pair_less(const PairFinding& a, const PairFinding& b) {
  return a.first != b.first ? a.first < b.first : a.second < b.second;
}

}  // namespace planembed::kernels::detail
