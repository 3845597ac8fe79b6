#include <algorithm>
#include <cmath>
#include <utility>

#include "kernel_detail.hpp"
#include "planembed/kernels.hpp"

namespace planembed::kernels {

bool gauss_solve_omp(std::vector<double>& a, std::size_t m, std::vector<double>& bx,
                     std::vector<double>& by, double pivot_floor) {
  const auto rows = static_cast<std::ptrdiff_t>(m);
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
    const double pivot_value = prow[col];
    const double bxc = bx[col];
    const double byc = by[col];
    double* base = a.data();
    double* bxp = bx.data();
    double* byp = by.data();
    // Row updates are independent; each performs the same arithmetic as the
    // serial kernel, so results match bit for bit.
#pragma omp parallel for schedule(static) if (m - col > 64)
    for (std::ptrdiff_t r = static_cast<std::ptrdiff_t>(col) + 1; r < rows; ++r) {
      double* row = base + static_cast<std::size_t>(r) * m;
      if (row[col] == 0.0) continue;
      const double f = row[col] / pivot_value;
      row[col] = 0.0;
      for (std::size_t c = col + 1; c < m; ++c) row[c] -= f * prow[c];
      bxp[r] -= f * bxc;
      byp[r] -= f * byc;
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

std::vector<PairFinding> scan_edge_pairs_omp(std::span<const Point> points,
                                             std::span<const Edge> edges, double tol,
                                             double suspect_band) {
  std::vector<PairFinding> out;
  const auto n = static_cast<std::int64_t>(edges.size());
#pragma omp parallel
  {
    std::vector<PairFinding> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = i + 1; j < n; ++j)
        if (auto f = detail::classify_pair(points, edges[static_cast<std::size_t>(i)],
                                           edges[static_cast<std::size_t>(j)],
                                           static_cast<std::uint32_t>(i),
                                           static_cast<std::uint32_t>(j), tol, suspect_band))
          local.push_back(*f);
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(), detail::pair_less);
  return out;
}

std::vector<int> covering_counts_omp(std::span<const std::vector<Point>> polygons,
                                     std::span<const Point> samples) {
  std::vector<int> out(samples.size());
  const auto n = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < n; ++s)
    out[static_cast<std::size_t>(s)] =
        detail::covering_count(polygons, samples[static_cast<std::size_t>(s)]);
  return out;
}

}  // namespace planembed::kernels
