#include "planembed/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "planembed/error.hpp"

namespace planembed {

namespace {

std::vector<const Face*> faces_in_report_order(const PlaneGraph& g, bool bounded_only) {
  std::vector<const Face*> out;
  for (const Face& f : g.faces())
    if (!(bounded_only && f.is_outer) && !f.boundary.empty()) out.push_back(&f);
  std::sort(out.begin(), out.end(),
            [&](const Face* a, const Face* b) { return face_order_less(g, *a, *b); });
  return out;
}

std::optional<std::pair<FaceId, FaceId>> first_disconnected_pair(const PlaneGraph& g,
                                                                 bool bounded_only) {
  const auto order = faces_in_report_order(g, bounded_only);
  std::vector<Subgraph> boundaries;
  boundaries.reserve(order.size());
  for (const Face* f : order) boundaries.push_back(face_boundary(*f));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!subgraph_is_connected(subgraph_intersection(boundaries[i], boundaries[j])))
        return std::make_pair(order[i]->id, order[j]->id);
  return std::nullopt;
}

/// Components of G minus {u, v}, each as a sorted vertex list.
std::vector<std::vector<VertexIndex>> components_without(const PlaneGraph& g, VertexIndex u,
                                                         VertexIndex v) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  comp[static_cast<std::size_t>(u)] = comp[static_cast<std::size_t>(v)] = -2;
  std::vector<std::vector<VertexIndex>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexIndex> stack{static_cast<VertexIndex>(s)};
    comp[s] = id;
    while (!stack.empty()) {
      VertexIndex x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (VertexIndex y : g.rotation(x)) {
        auto yi = static_cast<std::size_t>(y);
        if (comp[yi] != -1) continue;
        comp[yi] = id;
        stack.push_back(y);
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Subgraph spanned(const PlaneGraph& g, std::vector<VertexIndex> vertices, Edge skip) {
  std::sort(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e == skip) continue;
    if (std::binary_search(vertices.begin(), vertices.end(), e.a) &&
        std::binary_search(vertices.begin(), vertices.end(), e.b))
      edges.push_back(e);
  }
  return Subgraph::make(std::move(vertices), std::move(edges));
}

Subgraph whole_graph(const PlaneGraph& g) {
  std::vector<VertexIndex> vs(g.vertex_count());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<VertexIndex>(i);
  return Subgraph{std::move(vs), g.edges()};
}

Subgraph with_edge(Subgraph s, Edge e) {
  s.edges.push_back(e);
  return Subgraph::make(std::move(s.vertices), std::move(s.edges));
}

bool is_subgraph_of(const Subgraph& s, const PlaneGraph& g) {
  for (VertexIndex v : s.vertices)
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) return false;
  for (const Edge& e : s.edges) {
    if (!g.has_edge(e.a, e.b)) return false;
    if (!std::binary_search(s.vertices.begin(), s.vertices.end(), e.a) ||
        !std::binary_search(s.vertices.begin(), s.vertices.end(), e.b))
      return false;
  }
  return true;
}

}  // namespace

NodalResult is_nodally_3connected(const PlaneGraph& g) {
  NodalResult r;
  r.biconnected = is_biconnected(g);
  if (!r.biconnected) return r;
  r.offending_pair = first_disconnected_pair(g, false);
  r.nodally_3_connected = !r.offending_pair.has_value();
  return r;
}

bool is_valid_witness(const PlaneGraph& g, const Witness& w) {
  if (!is_subgraph_of(w.h, g) || !is_subgraph_of(w.k, g)) return false;
  const Subgraph all = whole_graph(g);
  if (subgraph_union(w.h, w.k) != all) return false;
  const Subgraph meet = subgraph_intersection(w.h, w.k);
  if (!meet.edges.empty()) return false;
  if (meet.vertices != Subgraph::make({w.u, w.v}, {}).vertices || w.u == w.v) return false;
  if (w.h == all || w.k == all) return false;
  return !subgraph_is_simple_path(w.h) && !subgraph_is_simple_path(w.k);
}

std::optional<Witness> find_witnesses_bruteforce(const PlaneGraph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(g.vertex_count()) +
                                                 " vertices exceed the oracle cap of " +
                                                 std::to_string(vertex_cap));
  if (!is_biconnected(g)) throw Error(ErrorCode::NotBiconnected, "witness search needs a biconnected graph");

  const auto n = static_cast<VertexIndex>(g.vertex_count());
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex v = u + 1; v < n; ++v) {
      const auto comps = components_without(g, u, v);
      const std::size_t k = comps.size();
      if (k < 2) continue;
      const bool adjacent = g.has_edge(u, v);
      const Edge uv(u, v);
      // Splits S and its complement give the same pairs with sides swapped,
      // so the last component always stays on the K side.
      const std::size_t limit = std::size_t{1} << (k - 1);
      for (std::size_t mask = 1; mask < limit; ++mask) {
        std::vector<VertexIndex> hv{u, v};
        std::vector<VertexIndex> kv{u, v};
        for (std::size_t c = 0; c < k; ++c) {
          auto& side = (mask >> c) & 1 ? hv : kv;
          side.insert(side.end(), comps[c].begin(), comps[c].end());
        }
        const Subgraph h = spanned(g, hv, uv);
        const Subgraph kk = spanned(g, kv, uv);
        std::vector<Witness> candidates;
        if (adjacent) {
          candidates.push_back(Witness{with_edge(h, uv), kk, u, v});
          candidates.push_back(Witness{h, with_edge(kk, uv), u, v});
        } else {
          candidates.push_back(Witness{h, kk, u, v});
        }
        for (auto& w : candidates)
          if (is_valid_witness(g, w)) return std::move(w);
      }
    }
  }
  return std::nullopt;
}

std::vector<InvertedSubgraph> find_inverted_subgraphs(const PlaneGraph& g) {
  for (const Face& f : g.faces())
    if (!face_boundary_is_simple_cycle(f))
      throw Error(ErrorCode::FacesNotSimple,
                  "face " + std::to_string(f.id) + " is not bounded by a simple cycle");

  std::vector<InvertedSubgraph> out;
  const FaceId outer = g.outer_face_id();
  const auto external_edges = g.outer_face().edge_set();
  for (const Edge& e : external_edges) {
    for (const Face& f : g.faces()) {
      if (f.is_outer) continue;
      const auto vs = f.vertex_set();
      const auto es = f.edge_set();
      if (!std::binary_search(vs.begin(), vs.end(), e.a) ||
          !std::binary_search(vs.begin(), vs.end(), e.b) ||
          std::binary_search(es.begin(), es.end(), e))
        continue;

      // Flood the faces enclosed by e and the boundary of f, never crossing
      // the boundary of f or entering the outer face.
      FaceId start = *g.face_of(Dart{e.a, e.b});
      if (start == outer) start = *g.face_of(Dart{e.b, e.a});
      std::vector<char> seen(g.faces().size(), 0);
      std::deque<FaceId> queue{start};
      seen[static_cast<std::size_t>(start)] = 1;
      Subgraph region;
      while (!queue.empty()) {
        const Face& cur = g.face(queue.front());
        queue.pop_front();
        region = subgraph_union(region, face_boundary(cur));
        for (const Dart& d : cur.boundary) {
          if (std::binary_search(es.begin(), es.end(), Edge(d.tail, d.head))) continue;
          const FaceId next = *g.face_of(Dart{d.head, d.tail});
          if (next == outer || next == f.id || seen[static_cast<std::size_t>(next)]) continue;
          seen[static_cast<std::size_t>(next)] = 1;
          queue.push_back(next);
        }
      }
      out.push_back(InvertedSubgraph{e, f.id, std::move(region)});
    }
  }
  return out;
}

StructureReport is_convex_embeddable(const PlaneGraph& g, std::size_t witness_cap) {
  StructureReport r;
  r.biconnected = is_biconnected(g);
  r.faces_simple = std::all_of(g.faces().begin(), g.faces().end(),
                               [](const Face& f) { return face_boundary_is_simple_cycle(f); });
  const NodalResult nodal = is_nodally_3connected(g);
  r.nodally_3_connected = nodal.nodally_3_connected;
  r.offending_face_pair = nodal.offending_pair;

  if (r.faces_simple) {
    r.disconnected_bounded_pair = first_disconnected_pair(g, true);
    r.inverted_subgraphs = find_inverted_subgraphs(g);
  }
  r.convex_embeddable = g.vertex_count() > 0 && r.faces_simple &&
                        !r.disconnected_bounded_pair.has_value() && r.inverted_subgraphs.empty();

  if (r.biconnected && !r.nodally_3_connected && g.vertex_count() <= witness_cap)
    r.witness = find_witnesses_bruteforce(g, witness_cap);
  return r;
}

bool is_triangulated(const PlaneGraph& g) {
  return std::all_of(g.faces().begin(), g.faces().end(),
                     [](const Face& f) { return f.is_outer || f.length() == 3; });
}

std::vector<Edge> chord_diagnostic(const PlaneGraph& g) {
  if (!is_triangulated(g))
    throw Error(ErrorCode::NotTriangulated, "every bounded face must have three edges");
  const auto outer_edges = g.outer_face().edge_set();
  auto is_outer_edge = [&](VertexIndex a, VertexIndex b) {
    return std::binary_search(outer_edges.begin(), outer_edges.end(), Edge(a, b));
  };

  std::vector<Edge> chords;
  for (const Edge& e : g.edges()) {
    if (!g.is_external(e.a) || !g.is_external(e.b) || is_outer_edge(e.a, e.b)) continue;
    bool flagged = false;
    for (const Dart d : {Dart{e.a, e.b}, Dart{e.b, e.a}}) {
      const Face& tri = g.face(*g.face_of(d));
      if (tri.is_outer) continue;
      int external_sides = 0;
      for (const Dart& side : tri.boundary)
        if (Edge(side.tail, side.head) != e && is_outer_edge(side.tail, side.head))
          ++external_sides;
      if (external_sides < 2) flagged = true;
    }
    if (flagged) chords.push_back(e);
  }
  return chords;
}

}  // namespace planembed
