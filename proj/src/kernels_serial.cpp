#include <cmath>
#include <utility>

#include "kernel_detail.hpp"
#include "planembed/kernels.hpp"

namespace planembed::kernels {

bool gauss_solve_serial(std::vector<double>& a, std::size_t m, std::vector<double>& bx,
                        std::vector<double>& by, double pivot_floor) {
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a[col * m + col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      const double v = std::abs(a[r * m + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < pivot_floor) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[pivot * m + c], a[col * m + c]);
      std::swap(bx[pivot], bx[col]);
      std::swap(by[pivot], by[col]);
    }
    const double* prow = &a[col * m];
    for (std::size_t r = col + 1; r < m; ++r) {
      double* row = &a[r * m];
      if (row[col] == 0.0) continue;
      const double f = row[col] / prow[col];
      row[col] = 0.0;
      for (std::size_t c = col + 1; c < m; ++c) row[c] -= f * prow[c];
      bx[r] -= f * bx[col];
      by[r] -= f * by[col];
    }
  }
  for (std::size_t r = m; r-- > 0;) {
    double sx = bx[r];
    double sy = by[r];
    for (std::size_t c = r + 1; c < m; ++c) {
      const double v = a[r * m + c];
      if (v == 0.0) continue;
      sx -= v * bx[c];
      sy -= v * by[c];
    }
    bx[r] = sx / a[r * m + r];
    by[r] = sy / a[r * m + r];
  }
  return true;
}

std::vector<PairFinding> scan_edge_pairs_serial(std::span<const Point> points,
                                                std::span<const Edge> edges, double tol,
                                                double suspect_band) {
  std::vector<PairFinding> out;
  const auto n = static_cast<std::uint32_t>(edges.size());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (auto f = detail::classify_pair(points, edges[i], edges[j], i, j, tol, suspect_band))
        out.push_back(*f);
  return out;
}

std::vector<int> covering_counts_serial(std::span<const std::vector<Point>> polygons,
                                        std::span<const Point> samples) {
  std::vector<int> out(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s)
    out[s] = detail::covering_count(polygons, samples[s]);
  return out;
}

}  // namespace planembed::kernels
