#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "planembed/plane_graph.hpp"

inline planembed::VertexIndex vid(const planembed::PlaneGraph& g, const std::string& id) {
  return *g.index_of(id);
}

inline std::vector<std::string> names(const planembed::PlaneGraph& g,
                                      const std::vector<planembed::VertexIndex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.id(v));
  return out;
}

inline std::vector<std::size_t> sorted_face_lengths(const planembed::PlaneGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& f : g.faces()) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}

inline const planembed::Face& face_with(const planembed::PlaneGraph& g, std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  for (const auto& f : g.faces()) {
    auto got = names(g, f.vertex_set());
    std::sort(got.begin(), got.end());
    if (got == ids && !f.is_outer) return f;
  }
  throw std::runtime_error("no bounded face with the given vertices");
}

/// Cyclic shift starting at the smallest entry.
inline std::vector<std::string> canonical(std::vector<std::string> cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}
