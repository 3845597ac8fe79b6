// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "planembed/connectivity.hpp"
#include "planembed/solver.hpp"
#include "planembed/triangulate.hpp"
#include "planembed/validator.hpp"

using namespace planembed;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

std::size_t euler_checks = 0;
std::size_t euler_failures = 0;

// Every graph a criterion touches goes through here.
PlaneGraph seen(PlaneGraph g) {
  ++euler_checks;
  if (!euler_check(g).holds) ++euler_failures;
  return g;
}

BoundaryPlacement unit_square(const PlaneGraph& g) {
  BoundaryPlacement p;
  const std::vector<std::pair<std::string, Point>> corners{
      {"v1", {0, 0}}, {"v2", {1, 0}}, {"v3", {1, 1}}, {"v4", {0, 1}}};
  for (const auto& [id, pt] : corners) {
    p.cycle.push_back(*g.index_of(id));
    p.corners.push_back(pt);
  }
  return p;
}

// Criterion 1.
void nodal_equivalence(Outcome& out) {
  std::vector<std::pair<std::string, PlaneGraph>> graphs{{"square_diagonal", corpus::square_diagonal()},
                                                         {"collapse", corpus::collapse()},
                                                         {"theta", corpus::theta()},
                                                         {"distinguishing", corpus::distinguishing()}};
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 240; ++i)
    graphs.emplace_back("random#" + std::to_string(i), corpus::random_biconnected(4 + i % 7, rng));

  std::size_t checked = 0, nodal = 0, witnessed = 0;
  for (const auto& [name, g] : graphs) {
    seen(g);
    if (!is_biconnected(g) || g.vertex_count() > 10) {
      out.fail(name + " is not a biconnected graph with at most 10 vertices");
      continue;
    }
    ++checked;
    const bool criterion = is_nodally_3connected(g).nodally_3_connected;
    const auto witness = find_witnesses_bruteforce(g);
    if (criterion) ++nodal;
    if (witness) {
      ++witnessed;
      if (!is_valid_witness(g, *witness)) out.fail(name + ": invalid witness");
    }
    if (criterion == witness.has_value()) out.fail(name + ": criterion and witness search disagree");
  }
  out.detail << checked << " graphs, " << nodal << " nodally 3-connected, " << witnessed << " with witnesses";
}

// Criterion 2.
void triangulations_embed(Outcome& out) {
  std::mt19937_64 rng(7);
  std::size_t maps = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 10 + i % 21;
    const PlaneGraph g = seen(corpus::random_triangulation(n, rng));
    if (!is_triangulated(g)) out.fail("generator produced a non-triangulated graph");
    const BoundaryPlacement p = regular_polygon_placement(g.outer_cycle(), 1.0);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto r = convex_combination_map(g, random_weight_scheme(g, 1000 * i + s), p);
      ValidationOptions opt;
      opt.scale = placement_scale(p);
      const ValidationReport v = validate(g, r.coords, opt);
      ++maps;
      if (!v.is_embedding) out.fail("triangulation " + std::to_string(i) + " scheme " + std::to_string(s) + " not an embedding");
      if (!v.nonconvex_faces.empty()) out.fail("triangulation " + std::to_string(i) + " has a non-convex face image");
    }
  }
  out.detail << maps << " maps of 50 triangulations with 10-30 vertices";
}

// Criterion 3.
void collapse(Outcome& out) {
  const PlaneGraph g = seen(corpus::collapse());
  const auto r = convex_combination_map(g, barycentric_weights(g), unit_square(g));
  const Point u2 = r.coords[static_cast<std::size_t>(*g.index_of("u2"))];
  const Point u4 = r.coords[static_cast<std::size_t>(*g.index_of("u4"))];
  // Hand solution: each inner vertex is the average of v1 and v3.
  if (distance(u2, {0.5, 0.5}) > 1e-9 || distance(u4, {0.5, 0.5}) > 1e-9) out.fail("inner vertices not at (0.5, 0.5)");
  if (distance(u2, u4) > 1e-9) out.fail("u2 and u4 do not coincide");
  const ValidationReport v = validate(g, r.coords);
  std::string inner_kind = "missing";
  for (const auto& c : v.face_classifications) {
    const auto vs = g.face(c.face).vertex_set();
    if (std::find(vs.begin(), vs.end(), *g.index_of("u2")) != vs.end() &&
        std::find(vs.begin(), vs.end(), *g.index_of("u4")) != vs.end())
      inner_kind = std::string(to_string(c.kind));
  }
  if (inner_kind != "Segment") out.fail("inner face is " + inner_kind);
  if (v.is_embedding) out.fail("reported as an embedding");
  if (is_nodally_3connected(g).nodally_3_connected) out.fail("reported nodally 3-connected");
  char buf[200];
  std::snprintf(buf, sizeof buf, "u2=(%.12g, %.12g) u4=(%.12g, %.12g), inner face %s", u2.x, u2.y, u4.x, u4.y,
                inner_kind.c_str());
  out.detail << buf;
}

// Criterion 4.
void convex_embeddable_embed(Outcome& out) {
  std::size_t maps = 0, samples = 0;
  const auto family = corpus::convex_embeddable_family();
  for (const auto& [name, g] : family) {
    seen(g);
    if (!is_convex_embeddable(g).convex_embeddable) out.fail(name + " is not convex embeddable");
    const BoundaryPlacement p = regular_polygon_placement(g.outer_cycle(), 1.0);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto r = convex_combination_map(g, random_weight_scheme(g, 77 + s), p);
      ValidationOptions opt;
      opt.scale = placement_scale(p);
      opt.covering_samples = 1000;
      opt.seed = s + 1;
      const ValidationReport v = validate(g, r.coords, opt);
      ++maps;
      samples += opt.covering_samples;
      if (!v.is_embedding) out.fail(name + " scheme " + std::to_string(s) + " not an embedding");
      if (!v.covering_checked) out.fail(name + " covering check did not run");
      if (!v.covering_number_violations.empty()) out.fail(name + " has covering number violations");
    }
  }
  out.detail << family.size() << " instances, " << maps << " maps, " << samples << " covering samples";
}

// Criterion 5.
void contrapositive(Outcome& out) {
  const PlaneGraph g = seen(corpus::theta());
  const BoundaryPlacement p = regular_polygon_placement(g.outer_cycle(), 1.0);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto r = convex_combination_map(g, random_weight_scheme(g, s), p);
    if (validate(g, r.coords).is_embedding) out.fail("scheme " + std::to_string(s) + " gave an embedding");
  }
  const StructureReport rep = is_convex_embeddable(g);
  if (rep.inverted_subgraphs.size() != 1)
    out.fail(std::to_string(rep.inverted_subgraphs.size()) + " inverted subgraphs");
  out.detail << "10 schemes, none an embedding; " << rep.inverted_subgraphs.size() << " inverted subgraph";
}

// Criterion 6.
void limit(Outcome& out) {
  const std::vector<std::pair<std::string, PlaneGraph>> instances{
      {"collapse", corpus::collapse()},
      {"theta", corpus::theta()},
      {"prism5", corpus::prism(5)},
      {"hexagon_with_bridge", corpus::hexagon_with_bridge()},
      {"square_with_ear", corpus::square_with_ear()},
      {"grid3x3", corpus::grid(3, 3)},
      {"grid3x4", corpus::grid(3, 4)},
      {"grid4x4", corpus::grid(4, 4)},
      {"prism4", corpus::prism(4)},
      {"double_prism3", corpus::double_prism(3)}};
  const double deltas[] = {1e-2, 1e-4, 1e-6};
  double worst_ratio = 0.0;
  for (const auto& [name, g] : instances) {
    seen(g);
    // Random weights: symmetric ones can cancel the perturbation exactly.
    const WeightScheme w = random_weight_scheme(g, 31);
    const BoundaryPlacement p =
        name == "collapse" ? unit_square(g) : regular_polygon_placement(g.outer_cycle(), 1.0);
    const double scale = placement_scale(p);
    const auto f = convex_combination_map(g, w, p);
    const TriangulationResult t = triangulate(g);
    seen(t.graph);
    double previous = std::numeric_limits<double>::infinity();
    for (double d : deltas) {
      const auto fd = perturbed_map(g, w, p, PerturbationParams{d, t});
      const double dev = max_deviation(fd.coords, f.coords);
      if (!(dev < previous)) out.fail(name + ": deviation not strictly decreasing");
      previous = dev;
      ValidationOptions opt;
      opt.scale = scale;
      if (!validate(t.graph, fd.coords, opt).is_embedding) out.fail(name + ": perturbed map is not an embedding");
    }
    if (!(previous < 1e-4 * scale)) out.fail(name + ": final deviation too large");
    worst_ratio = std::max(worst_ratio, previous / scale);
  }
  out.detail << instances.size() << " instances, largest deviation at 1e-6 is " << worst_ratio << " x scale";
}

bool cyclic_subsequence(std::span<const VertexIndex> small, std::span<const VertexIndex> big) {
  if (small.empty()) return true;
  const auto start = std::find(big.begin(), big.end(), small[0]);
  if (start == big.end()) return false;
  std::size_t at = static_cast<std::size_t>(start - big.begin());
  std::size_t next = 1;
  for (std::size_t k = 1; k < big.size() && next < small.size(); ++k)
    if (big[(at + k) % big.size()] == small[next]) ++next;
  return next == small.size();
}

// Criterion 7.
void structure(Outcome& out) {
  std::mt19937_64 rng(99);
  std::size_t triangulated = 0, chord_free = 0;
  for (int i = 0; i < 100; ++i) {
    const PlaneGraph g = seen(i % 2 ? corpus::random_biconnected(5 + i % 10, rng)
                                     : corpus::random_triangulation(6 + i % 15, rng));
    const TriangulationResult t = triangulate(g);
    seen(t.graph);
    if (!is_triangulated(t.graph)) out.fail("triangulate left a non-triangle face");
    if (!triangulate(t.graph).added_edges.empty()) out.fail("triangulation is not idempotent");
    if (t.graph.outer_cycle() != g.outer_cycle()) out.fail("triangulation changed the outer cycle");
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (!cyclic_subsequence(g.rotation(static_cast<VertexIndex>(v)), t.graph.rotation(static_cast<VertexIndex>(v))))
        out.fail("rotation of " + g.id(static_cast<VertexIndex>(v)) + " not a subsequence");
    for (const PlaneGraph* h : {&g, &t.graph}) {
      if (!is_triangulated(*h)) continue;
      ++triangulated;
      const bool empty = chord_diagnostic(*h).empty();
      if (empty) ++chord_free;
      if (empty != is_nodally_3connected(*h).nodally_3_connected) out.fail("chord diagnostic disagrees");
    }
  }
  for (const auto& [name, g] : corpus::named_instances()) {
    seen(g);
    if (is_biconnected(g)) {
      const PlaneGraph t = triangulate(g).graph;
      seen(t);
      ++triangulated;
      if (chord_diagnostic(t).empty() != is_nodally_3connected(t).nodally_3_connected)
        out.fail(name + ": chord diagnostic disagrees");
    }
  }
  out.detail << "100 random instances; " << triangulated << " triangulated graphs, " << chord_free
             << " chord-free";
}

std::size_t bounded_faces(const PlaneGraph& g) { return g.faces().size() - 1; }

// Two bounded faces sharing a connected boundary path, such that the merged
// face meets every other face in a connected set.
bool admissible(const PlaneGraph& g, const PlaneGraph& merged, const Face& f1, const Face& f2) {
  const Subgraph q = face_intersection(f1, f2);
  if (q.edges.empty() || !subgraph_is_connected(q)) return false;
  // The merged face holds the darts of f1 that are not on q. Merging may
  // delete vertices, so indices are translated through the ids.
  std::optional<FaceId> fm;
  for (const Dart& d : f1.boundary)
    if (!std::binary_search(q.edges.begin(), q.edges.end(), Edge(d.tail, d.head))) {
      fm = merged.face_of(Dart{*merged.index_of(g.id(d.tail)), *merged.index_of(g.id(d.head))});
      break;
    }
  if (!fm) return false;
  for (const Face& a : merged.faces())
    if (a.id != *fm && !subgraph_is_connected(face_intersection(a, merged.face(*fm)))) return false;
  return true;
}

// Criterion 8.
void face_merge(Outcome& out) {
  std::size_t total_steps = 0;
  // With a triangular outer boundary, two bounded faces always leave an
  // inverted subgraph, so no merge sequence can stay convex embeddable down
  // to one face. Such instances are replaced by ones with longer boundaries.
  std::vector<std::pair<std::string, PlaneGraph>> family;
  for (auto& [name, g] : corpus::convex_embeddable_family())
    if (g.outer_cycle().size() > 3) family.emplace_back(name, g);
  family.emplace_back("grid2x4", corpus::grid(2, 4));
  family.emplace_back("double_prism8", corpus::double_prism(8));
  for (const auto& [name, g] : family) {
    if (!is_convex_embeddable(g).convex_embeddable) out.fail(name + " is not convex embeddable");
    const std::vector<std::string> outer_ids = [&] {
      std::vector<std::string> ids;
      for (VertexIndex v : g.outer_cycle()) ids.push_back(g.id(v));
      return ids;
    }();
    std::size_t steps = 0, budget = 20000;
    std::function<bool(const PlaneGraph&)> descend = [&](const PlaneGraph& h) -> bool {
      seen(h);
      std::vector<std::string> ids;
      for (VertexIndex v : h.outer_cycle()) ids.push_back(h.id(v));
      if (ids != outer_ids) return false;
      if (!is_convex_embeddable(h).convex_embeddable) return false;
      if (bounded_faces(h) <= 1) return true;
      for (const Face& f1 : h.faces()) {
        if (f1.is_outer) continue;
        for (const Face& f2 : h.faces()) {
          if (f2.is_outer || f2.id <= f1.id) continue;
          const Subgraph q = face_intersection(f1, f2);
          if (q.edges.empty() || !subgraph_is_connected(q)) continue;
          if (budget == 0) return false;
          --budget;
          const PlaneGraph m = merge_faces(h, f1.id, f2.id);
          if (!admissible(h, m, f1, f2)) continue;
          ++steps;
          if (descend(m)) return true;
        }
      }
      return false;
    };
    if (!descend(g)) out.fail(name + ": no admissible merge sequence down to one bounded face");
    total_steps += steps;
  }
  out.detail << family.size() << " instances, " << total_steps << " merges";
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {1, "nodal criterion agrees with witness search", 60.0, nodal_equivalence},
      {2, "convex combination maps of triangulations are embeddings", 30.0, triangulations_embed},
      {3, "inner square of the collapse instance maps to a segment", 10.0, collapse},
      {4, "convex embeddable graphs embed with covering number one", 60.0, convex_embeddable_embed},
      {5, "theta graph never embeds and has one inverted subgraph", 10.0, contrapositive},
      {6, "perturbed maps converge and embed the triangulation", 30.0, limit},
      {7, "euler, triangulation and chord invariants", 60.0, structure},
      {8, "face merging preserves convex embeddability", 60.0, face_merge},
  };
  std::vector<std::pair<Outcome, double>> results(std::size(criteria));
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Outcome& out = results[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    results[i].second = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (results[i].second > criteria[i].limit_seconds) out.fail("over the time limit");
  }
  // Euler is part of criterion 7 but covers the graphs of every criterion.
  Outcome& seven = results[6].first;
  if (euler_failures > 0) seven.fail(std::to_string(euler_failures) + " graphs fail euler");
  seven.detail << "; euler holds on " << euler_checks - euler_failures << " of " << euler_checks << " graphs";

  bool all = true;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const Outcome& out = results[i].first;
    all = all && out.pass;
    std::printf("criterion %d: %s - %s (%s) [%.2fs]\n", criteria[i].number, out.pass ? "PASS" : "FAIL",
                criteria[i].title, out.detail.str().c_str(), results[i].second);
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
