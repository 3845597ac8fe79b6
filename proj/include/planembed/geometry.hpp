#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace planembed {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Twice the signed area of triangle abc; positive when a, b, c turn counterclockwise.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

double point_segment_distance(Point p, Point a, Point b);

/// Zero when the closed segments ab and cd intersect.
double segment_segment_distance(Point a, Point b, Point c, Point d);

/// Shoelace formula; positive for counterclockwise polygons.
double signed_area(std::span<const Point> polygon);

/// Even-odd ray crossing test. Points exactly on the boundary give an
/// unspecified answer; callers keep samples away from edges.
bool point_in_polygon(Point p, std::span<const Point> polygon);

double point_polygon_boundary_distance(Point p, std::span<const Point> polygon);

/// Largest pairwise distance, or 0 for fewer than two points.
double diameter(std::span<const Point> points);

}  // namespace planembed
