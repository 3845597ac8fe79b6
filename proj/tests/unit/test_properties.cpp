#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "helpers.hpp"
#include "planembed/connectivity.hpp"
#include "planembed/solver.hpp"
#include "planembed/triangulate.hpp"
#include "planembed/validator.hpp"

using namespace planembed;

namespace {

std::vector<PlaneGraph> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<PlaneGraph> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(corpus::random_triangulation(6 + i % 12, rng));
    out.push_back(corpus::random_biconnected(5 + i % 8, rng));
  }
  return out;
}

bool all_faces_simple(const PlaneGraph& g) {
  return std::all_of(g.faces().begin(), g.faces().end(),
                     [](const Face& f) { return face_boundary_is_simple_cycle(f); });
}

}  // namespace

TEST_CASE("euler relation and dart counts") {
  auto graphs = random_corpus(1, 30);
  for (const auto& [name, g] : corpus::named_instances()) graphs.push_back(g);
  for (const auto& g : graphs) {
    const EulerReport e = euler_check(g);
    CHECK(e.holds);
    std::size_t total = 0;
    std::set<std::pair<VertexIndex, VertexIndex>> darts;
    for (const Face& f : g.faces()) {
      total += f.length();
      for (const Dart& d : f.boundary) darts.insert({d.tail, d.head});
    }
    CHECK(total == 2 * g.edge_count());
    CHECK(darts.size() == 2 * g.edge_count());
  }
}

TEST_CASE("connectivity implications") {
  auto graphs = random_corpus(2, 40);
  for (const auto& [name, g] : corpus::named_instances()) graphs.push_back(g);
  for (const auto& g : graphs) {
    if (is_connected(g) && g.vertex_count() >= 3) CHECK(is_biconnected(g) == all_faces_simple(g));
    const bool nodal = is_nodally_3connected(g).nodally_3_connected;
    if (is_triconnected(g)) CHECK(nodal);
    if (nodal) CHECK(is_biconnected(g));
  }
}

TEST_CASE("random graphs are biconnected and random triangulations triangulated") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) {
    const PlaneGraph t = corpus::random_triangulation(5 + i, rng);
    CHECK(is_triangulated(t));
    CHECK(t.vertex_count() == static_cast<std::size_t>(5 + i));
    const PlaneGraph b = corpus::random_biconnected(4 + i % 7, rng);
    CHECK(is_biconnected(b));
    CHECK(b.vertex_count() <= static_cast<std::size_t>(4 + i % 7));
  }
}

TEST_CASE("triangulation invariants") {
  for (const auto& g : random_corpus(4, 30)) {
    if (!is_biconnected(g)) continue;
    const TriangulationResult t = triangulate(g);
    CHECK(is_triangulated(t.graph));
    CHECK(t.graph.outer_cycle() == g.outer_cycle());
    CHECK(t.graph.edge_count() == g.edge_count() + t.added_edges.size());
    // Every bounded face of a triangulated biconnected plane graph with V
    // vertices and outer length k: E = 3V - 3 - k.
    CHECK(t.graph.edge_count() == 3 * g.vertex_count() - 3 - g.outer_cycle().size());
    for (const Edge& e : g.edges()) CHECK(t.graph.has_edge(e.a, e.b));
    const TriangulationResult again = triangulate(t.graph);
    CHECK(again.added_edges.empty());
  }
}

TEST_CASE("chord diagnostic agrees with nodal connectivity on triangulations") {
  for (const auto& g : random_corpus(5, 30)) {
    if (!is_biconnected(g)) continue;
    const PlaneGraph t = triangulate(g).graph;
    CHECK(chord_diagnostic(t).empty() == is_nodally_3connected(t).nodally_3_connected);
  }
}

TEST_CASE("merging faces keeps the outer cycle") {
  for (const auto& [name, g] : corpus::convex_embeddable_family()) {
    CAPTURE(name);
    std::vector<std::string> outer = names(g, g.outer_cycle());
    for (const Face& f : g.faces()) {
      if (f.is_outer) continue;
      for (const Face& h : g.faces()) {
        if (h.is_outer || h.id <= f.id) continue;
        const Subgraph s = face_intersection(f, h);
        if (s.edges.empty() || !subgraph_is_connected(s)) continue;
        const PlaneGraph m = merge_faces(g, f.id, h.id);
        CHECK(names(m, m.outer_cycle()) == outer);
        CHECK(m.faces().size() + 1 == g.faces().size());
      }
    }
  }
}

TEST_CASE("convex combination maps: residual, hull and distinct boundary") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const PlaneGraph g = corpus::random_triangulation(8 + i, rng);
    const WeightScheme w = random_weight_scheme(g, static_cast<std::uint64_t>(i));
    const BoundaryPlacement p = regular_polygon_placement(g.outer_cycle(), 1.0);
    const auto r = convex_combination_map(g, w, p);
    CHECK(r.residual < 1e-9);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      CHECK((point_in_polygon(r.coords[v], p.corners) ||
             point_polygon_boundary_distance(r.coords[v], p.corners) < 1e-9));
    for (std::size_t a = 0; a < p.cycle.size(); ++a)
      for (std::size_t b = a + 1; b < p.cycle.size(); ++b)
        CHECK(distance(r.coords[static_cast<std::size_t>(p.cycle[a])],
                       r.coords[static_cast<std::size_t>(p.cycle[b])]) > 1e-6);
    CHECK(validate(g, r.coords).is_embedding);
  }
}

TEST_CASE("relabelling vertices does not move them") {
  const corpus::Drawing d = corpus::drawing_of_grid(3, 4);
  corpus::Drawing renamed = d;
  for (auto& id : renamed.ids) id = "z" + std::string(id.rbegin(), id.rend());
  for (auto& [a, b] : renamed.edges) {
    a = "z" + std::string(a.rbegin(), a.rend());
    b = "z" + std::string(b.rbegin(), b.rend());
  }
  const PlaneGraph g1 = d.graph();
  const PlaneGraph g2 = renamed.graph();
  const auto r1 = convex_combination_map(g1, barycentric_weights(g1), regular_polygon_placement(g1.outer_cycle(), 1.0));
  // Same corners for the same vertices.
  BoundaryPlacement p2;
  const auto p1 = regular_polygon_placement(g1.outer_cycle(), 1.0);
  for (std::size_t i = 0; i < p1.cycle.size(); ++i) {
    const std::string& id = g1.id(p1.cycle[i]);
    p2.cycle.push_back(vid(g2, "z" + std::string(id.rbegin(), id.rend())));
    p2.corners.push_back(p1.corners[i]);
  }
  const auto r2 = convex_combination_map(g2, barycentric_weights(g2), p2);
  for (std::size_t v = 0; v < g1.vertex_count(); ++v) {
    const std::string& id = g1.id(static_cast<VertexIndex>(v));
    const Point q = r2.coords[static_cast<std::size_t>(vid(g2, "z" + std::string(id.rbegin(), id.rend())))];
    CHECK(distance(r1.coords[v], q) < 1e-12);
  }
}
