#include "planembed/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "planembed/error.hpp"

namespace planembed {

namespace {

/// Plain union-find over [0, n).
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string edge_name(const std::vector<std::string>& ids, VertexIndex u, VertexIndex v) {
  return "{" + ids[static_cast<std::size_t>(u)] + ", " + ids[static_cast<std::size_t>(v)] + "}";
}

}  // namespace

// ---------------------------------------------------------------- Face

std::vector<VertexIndex> Face::cycle() const {
  std::vector<VertexIndex> out;
  out.reserve(boundary.size());
  for (const Dart& d : boundary) out.push_back(d.tail);
  return out;
}

std::vector<VertexIndex> Face::vertex_set() const {
  std::vector<VertexIndex> out = cycle();
  sort_unique(out);
  return out;
}

std::vector<Edge> Face::edge_set() const {
  std::vector<Edge> out;
  out.reserve(boundary.size());
  for (const Dart& d : boundary) out.emplace_back(d.tail, d.head);
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------- Subgraph

Subgraph Subgraph::make(std::vector<VertexIndex> vertices, std::vector<Edge> edges) {
  sort_unique(vertices);
  sort_unique(edges);
  return Subgraph{std::move(vertices), std::move(edges)};
}

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
  Subgraph out;
  std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                 std::back_inserter(out.vertices));
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                 std::back_inserter(out.edges));
  return out;
}

Subgraph subgraph_intersection(const Subgraph& a, const Subgraph& b) {
  Subgraph out;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                        b.vertices.end(), std::back_inserter(out.vertices));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(out.edges));
  return out;
}

// ---------------------------------------------------------------- PlaneGraph

PlaneGraph PlaneGraph::make(std::vector<std::string> ids,
                            std::vector<std::vector<VertexIndex>> rotation) {
  if (ids.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (!(ids[i - 1] < ids[i])) {
      if (ids[i - 1] == ids[i]) throw Error(ErrorCode::DuplicateVertex, "vertex " + ids[i]);
      throw Error(ErrorCode::InvalidArgument, "vertex ids must be sorted");
    }
  }
  if (rotation.size() != ids.size())
    throw Error(ErrorCode::InvalidArgument, "rotation count differs from vertex count");

  const auto n = static_cast<VertexIndex>(ids.size());
  for (VertexIndex u = 0; u < n; ++u) {
    const auto& rot = rotation[static_cast<std::size_t>(u)];
    std::vector<VertexIndex> seen;
    for (VertexIndex v : rot) {
      if (v < 0 || v >= n)
        throw Error(ErrorCode::UnknownVertex, "rotation of " + ids[static_cast<std::size_t>(u)] +
                                                  " names an unknown vertex");
      if (v == u)
        throw Error(ErrorCode::SelfLoop, "at vertex " + ids[static_cast<std::size_t>(u)]);
      seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) throw Error(ErrorCode::DuplicateEdge, "edge " + edge_name(ids, u, *dup));
  }

  PlaneGraph g;
  g.ids_ = std::move(ids);
  g.rotation_ = std::move(rotation);

  // Darts are numbered by (tail, position in rotation of tail).
  g.dart_offset_.assign(g.ids_.size() + 1, 0);
  for (std::size_t u = 0; u < g.ids_.size(); ++u)
    g.dart_offset_[u + 1] = g.dart_offset_[u] + g.rotation_[u].size();
  g.dart_head_.reserve(g.dart_offset_.back());
  for (const auto& rot : g.rotation_)
    g.dart_head_.insert(g.dart_head_.end(), rot.begin(), rot.end());

  g.twin_.assign(g.dart_head_.size(), 0);
  for (VertexIndex u = 0; u < n; ++u) {
    const auto& rot = g.rotation_[static_cast<std::size_t>(u)];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const VertexIndex v = rot[i];
      auto back = g.dart_index(v, u);
      if (!back)
        throw Error(ErrorCode::AsymmetricRotation,
                    g.id(v) + " does not list " + g.id(u) + " although " + g.id(u) + " lists " +
                        g.id(v));
      g.twin_[g.dart_offset_[static_cast<std::size_t>(u)] + i] = *back;
      if (u < v) g.edges_.emplace_back(u, v);
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  DisjointSets components(g.ids_.size());
  for (const Edge& e : g.edges_)
    components.unite(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b));
  std::vector<std::size_t> root(g.ids_.size());
  for (std::size_t v = 0; v < g.ids_.size(); ++v) root[v] = components.find(v);
  {
    std::vector<std::size_t> roots = root;
    sort_unique(roots);
    g.component_count_ = roots.size();
  }

  g.trace();

  // Every component with an edge must satisfy v - e + f = 2 on its own;
  // anything else is a rotation system of higher genus.
  std::map<std::size_t, long> euler;
  for (std::size_t v = 0; v < g.ids_.size(); ++v)
    if (!g.rotation_[v].empty()) euler[root[v]] += 1;
  for (const Edge& e : g.edges_) euler[root[static_cast<std::size_t>(e.a)]] -= 1;
  for (const Face& f : g.faces_)
    if (!f.boundary.empty()) euler[root[static_cast<std::size_t>(f.boundary.front().tail)]] += 1;
  for (const auto& [r, chi] : euler) {
    if (chi != 2)
      throw Error(ErrorCode::NonPlanarRotation,
                  "component of " + g.ids_[r] + " has Euler characteristic " + std::to_string(chi));
  }

  g.external_.assign(g.ids_.size(), 0);
  return g;
}

void PlaneGraph::trace() {
  const std::size_t darts = dart_head_.size();
  dart_face_.assign(darts, -1);
  faces_.clear();
  for (std::size_t start = 0; start < darts; ++start) {
    if (dart_face_[start] != -1) continue;
    Face face;
    face.id = static_cast<FaceId>(faces_.size());
    std::size_t d = start;
    do {
      dart_face_[d] = face.id;
      const std::size_t back = twin_[d];
      const VertexIndex head = dart_head_[d];
      const VertexIndex tail = dart_head_[back];
      face.boundary.push_back(Dart{tail, head});
      // Predecessor of `tail` in the rotation of `head`.
      const std::size_t lo = dart_offset_[static_cast<std::size_t>(head)];
      const std::size_t deg = dart_offset_[static_cast<std::size_t>(head) + 1] - lo;
      const std::size_t pos = back - lo;
      d = lo + (pos + deg - 1) % deg;
    } while (d != start);
    faces_.push_back(std::move(face));
  }
  if (faces_.empty()) faces_.push_back(Face{0, {}, false});
}

void PlaneGraph::set_outer(FaceId f) {
  for (Face& face : faces_) face.is_outer = false;
  outer_face_ = f;
  faces_[static_cast<std::size_t>(f)].is_outer = true;
  external_.assign(ids_.size(), 0);
  for (const Dart& d : faces_[static_cast<std::size_t>(f)].boundary)
    external_[static_cast<std::size_t>(d.tail)] = 1;
}

PlaneGraph PlaneGraph::from_indices(std::vector<std::string> ids,
                                    std::vector<std::vector<VertexIndex>> rotation,
                                    std::optional<Dart> outer_dart) {
  PlaneGraph g = make(std::move(ids), std::move(rotation));
  if (g.edges_.empty()) {
    g.set_outer(0);
    return g;
  }
  if (!outer_dart) throw Error(ErrorCode::OuterFaceNotFound, "no outer dart given");
  auto f = g.face_of(*outer_dart);
  if (!f) throw Error(ErrorCode::OuterFaceNotFound, "outer dart is not an edge of the graph");
  g.set_outer(*f);
  return g;
}

PlaneGraph PlaneGraph::build(const std::vector<std::string>& vertices,
                             const std::map<std::string, std::vector<std::string>>& rotation,
                             const OuterSpec& outer) {
  std::vector<std::string> ids = vertices;
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (ids[i - 1] == ids[i]) throw Error(ErrorCode::DuplicateVertex, "vertex " + ids[i]);

  auto lookup = [&](const std::string& name) -> VertexIndex {
    auto it = std::lower_bound(ids.begin(), ids.end(), name);
    if (it == ids.end() || *it != name) throw Error(ErrorCode::UnknownVertex, "vertex " + name);
    return static_cast<VertexIndex>(it - ids.begin());
  };

  std::vector<std::vector<VertexIndex>> rot(ids.size());
  for (const auto& [name, list] : rotation) {
    auto& target = rot[static_cast<std::size_t>(lookup(name))];
    for (const std::string& nb : list) target.push_back(lookup(nb));
  }

  PlaneGraph g = make(ids, std::move(rot));

  if (const FaceId* fid = std::get_if<FaceId>(&outer)) {
    if (*fid < 0 || static_cast<std::size_t>(*fid) >= g.faces_.size())
      throw Error(ErrorCode::OuterFaceNotFound, "face id " + std::to_string(*fid));
    g.set_outer(*fid);
    return g;
  }

  const auto& names = std::get<std::vector<std::string>>(outer);
  if (g.edges_.empty()) {
    if (names.size() > 1)
      throw Error(ErrorCode::OuterFaceNotFound, "graph has no edges; outer cycle must be empty");
    for (const auto& nm : names) lookup(nm);
    g.set_outer(0);
    return g;
  }
  std::vector<VertexIndex> wanted;
  for (const auto& nm : names) wanted.push_back(lookup(nm));

  for (const Face& f : g.faces_) {
    if (f.boundary.size() != wanted.size()) continue;
    std::vector<VertexIndex> ccw = f.cycle();
    std::reverse(ccw.begin(), ccw.end());
    const std::size_t k = ccw.size();
    for (std::size_t shift = 0; shift < k; ++shift) {
      bool match = true;
      for (std::size_t i = 0; i < k && match; ++i) match = ccw[(shift + i) % k] == wanted[i];
      if (match) {
        g.set_outer(f.id);
        return g;
      }
    }
  }
  std::string listed;
  for (const auto& nm : names) listed += (listed.empty() ? "" : ",") + nm;
  throw Error(ErrorCode::OuterFaceNotFound,
              "no face is bounded counterclockwise by [" + listed + "]");
}

std::optional<VertexIndex> PlaneGraph::index_of(const std::string& name) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), name);
  if (it == ids_.end() || *it != name) return std::nullopt;
  return static_cast<VertexIndex>(it - ids_.begin());
}

std::vector<VertexIndex> PlaneGraph::neighbours(VertexIndex v) const {
  std::vector<VertexIndex> out(rotation(v).begin(), rotation(v).end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> PlaneGraph::dart_index(VertexIndex tail, VertexIndex head) const {
  if (tail < 0 || static_cast<std::size_t>(tail) >= rotation_.size()) return std::nullopt;
  const auto& rot = rotation_[static_cast<std::size_t>(tail)];
  auto it = std::find(rot.begin(), rot.end(), head);
  if (it == rot.end()) return std::nullopt;
  return dart_offset_[static_cast<std::size_t>(tail)] + static_cast<std::size_t>(it - rot.begin());
}

bool PlaneGraph::has_edge(VertexIndex u, VertexIndex v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

std::optional<FaceId> PlaneGraph::face_of(Dart d) const {
  auto idx = dart_index(d.tail, d.head);
  if (!idx) return std::nullopt;
  return dart_face_[*idx];
}

std::vector<VertexIndex> PlaneGraph::outer_cycle() const {
  std::vector<VertexIndex> ccw = outer_face().cycle();
  if (ccw.empty()) return ccw;
  std::reverse(ccw.begin(), ccw.end());
  auto first = std::min_element(ccw.begin(), ccw.end());
  std::rotate(ccw.begin(), first, ccw.end());
  return ccw;
}

std::size_t PlaneGraph::isolated_vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(rotation_.begin(), rotation_.end(), [](const auto& r) { return r.empty(); }));
}

// ---------------------------------------------------------------- free functions

std::vector<Face> trace_faces(const PlaneGraph& g) {
  return PlaneGraph::from_indices(g.ids(), g.rotations(),
                                  g.edge_count() ? std::optional<Dart>(g.outer_face().boundary.front())
                                                 : std::nullopt)
      .faces();
}

EulerReport euler_check(const PlaneGraph& g) {
  EulerReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.components = g.component_count();
  std::size_t walks = 0;
  for (const Face& f : g.faces())
    if (!f.boundary.empty()) ++walks;
  r.faces = walks + g.isolated_vertex_count() - (r.components - 1);
  r.holds = static_cast<long>(r.vertices) - static_cast<long>(r.edges) +
                static_cast<long>(r.faces) ==
            static_cast<long>(r.components) + 1;
  return r;
}

namespace {

/// Number of vertices reachable from the first vertex not in `removed`,
/// and the number of vertices not removed.
std::pair<std::size_t, std::size_t> reach_without(const PlaneGraph& g,
                                                  const std::vector<char>& removed) {
  const std::size_t n = g.vertex_count();
  std::size_t alive = 0;
  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start == n) start = v;
    }
  if (alive == 0) return {0, 0};
  std::vector<char> seen(n, 0);
  std::vector<VertexIndex> stack{static_cast<VertexIndex>(start)};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexIndex u = stack.back();
    stack.pop_back();
    for (VertexIndex w : g.rotation(u)) {
      const auto wi = static_cast<std::size_t>(w);
      if (removed[wi] || seen[wi]) continue;
      seen[wi] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return {count, alive};
}

}  // namespace

bool is_connected(const PlaneGraph& g) { return g.component_count() == 1; }

bool is_biconnected(const PlaneGraph& g) {
  if (!is_connected(g)) return false;
  const std::size_t n = g.vertex_count();
  if (n <= 2) return true;

  // Iterative Hopcroft-Tarjan articulation point search.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<VertexIndex> parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  int timer = 0;
  std::size_t root_children = 0;
  std::vector<VertexIndex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    const auto ui = static_cast<std::size_t>(u);
    auto rot = g.rotation(u);
    if (next[ui] < rot.size()) {
      const VertexIndex w = rot[next[ui]++];
      const auto wi = static_cast<std::size_t>(w);
      if (disc[wi] == -1) {
        parent[wi] = u;
        disc[wi] = low[wi] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[ui]) {
        low[ui] = std::min(low[ui], disc[wi]);
      }
      continue;
    }
    stack.pop_back();
    const VertexIndex p = parent[ui];
    if (p >= 0) {
      const auto pi = static_cast<std::size_t>(p);
      low[pi] = std::min(low[pi], low[ui]);
      if (p != 0 && low[ui] >= disc[pi]) return false;
    }
  }
  return root_children <= 1;
}

bool is_triconnected(const PlaneGraph& g) {
  if (!is_biconnected(g)) return false;
  const std::size_t n = g.vertex_count();
  if (n < 4) return g.edge_count() == n * (n - 1) / 2;
  std::vector<char> removed(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    removed[u] = 1;
    for (std::size_t v = u + 1; v < n; ++v) {
      removed[v] = 1;
      auto [reached, alive] = reach_without(g, removed);
      removed[v] = 0;
      if (reached != alive) return false;
    }
    removed[u] = 0;
  }
  return true;
}

bool face_boundary_is_simple_cycle(const Face& f) {
  if (f.boundary.size() < 3) return false;
  return f.vertex_set().size() == f.boundary.size();
}

Subgraph face_boundary(const Face& f) { return Subgraph{f.vertex_set(), f.edge_set()}; }

Subgraph face_intersection(const Face& f1, const Face& f2) {
  return subgraph_intersection(face_boundary(f1), face_boundary(f2));
}

namespace {

std::vector<VertexIndex> all_vertices(const Subgraph& s) {
  std::vector<VertexIndex> vs = s.vertices;
  for (const Edge& e : s.edges) {
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  sort_unique(vs);
  return vs;
}

std::size_t local_index(const std::vector<VertexIndex>& vs, VertexIndex v) {
  return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
}

}  // namespace

bool subgraph_is_connected(const Subgraph& s) {
  const auto vs = all_vertices(s);
  if (vs.size() <= 1) return true;
  DisjointSets sets(vs.size());
  std::size_t parts = vs.size();
  for (const Edge& e : s.edges)
    if (sets.unite(local_index(vs, e.a), local_index(vs, e.b))) --parts;
  return parts == 1;
}

bool subgraph_is_simple_path(const Subgraph& s) {
  const auto vs = all_vertices(s);
  if (vs.empty()) return false;
  if (s.edges.size() + 1 != vs.size()) return false;
  std::vector<int> deg(vs.size(), 0);
  for (const Edge& e : s.edges) {
    if (++deg[local_index(vs, e.a)] > 2) return false;
    if (++deg[local_index(vs, e.b)] > 2) return false;
  }
  return subgraph_is_connected(s);
}

PlaneGraph merge_faces(const PlaneGraph& g, FaceId f1, FaceId f2) {
  const auto nf = static_cast<FaceId>(g.faces().size());
  if (f1 < 0 || f2 < 0 || f1 >= nf || f2 >= nf || f1 == f2)
    throw Error(ErrorCode::InvalidArgument, "merge needs two distinct face ids");
  const Face& a = g.face(f1);
  const Face& b = g.face(f2);
  if (a.is_outer || b.is_outer)
    throw Error(ErrorCode::InvalidArgument, "only bounded faces can be merged");
  if (!face_boundary_is_simple_cycle(a) || !face_boundary_is_simple_cycle(b))
    throw Error(ErrorCode::FacesNotSimple, "merged faces must be bounded by simple cycles");

  const Subgraph shared = face_intersection(a, b);
  if (shared.edges.empty())
    throw Error(ErrorCode::FacesNotAdjacent,
                "faces " + std::to_string(f1) + " and " + std::to_string(f2) + " share no edge");
  if (!subgraph_is_connected(shared))
    throw Error(ErrorCode::IntersectionDisconnected,
                "faces " + std::to_string(f1) + " and " + std::to_string(f2) +
                    " share a disconnected boundary");

  // Inner vertices of the shared path have degree two in it; they are
  // deleted when the path holds all of their edges.
  std::map<VertexIndex, int> path_degree;
  for (const Edge& e : shared.edges) {
    ++path_degree[e.a];
    ++path_degree[e.b];
  }
  std::vector<char> drop(g.vertex_count(), 0);
  for (const auto& [v, d] : path_degree)
    if (d == 2 && g.degree(v) == 2) drop[static_cast<std::size_t>(v)] = 1;

  std::vector<VertexIndex> remap(g.vertex_count(), -1);
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (drop[v]) continue;
    remap[v] = static_cast<VertexIndex>(ids.size());
    ids.push_back(g.ids()[v]);
  }
  std::vector<std::vector<VertexIndex>> rot(ids.size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (drop[v]) continue;
    for (VertexIndex w : g.rotation(static_cast<VertexIndex>(v))) {
      if (drop[static_cast<std::size_t>(w)]) continue;
      if (std::binary_search(shared.edges.begin(), shared.edges.end(),
                             Edge(static_cast<VertexIndex>(v), w)))
        continue;
      rot[static_cast<std::size_t>(remap[v])].push_back(remap[static_cast<std::size_t>(w)]);
    }
  }
  const Dart keep = g.outer_face().boundary.front();
  return PlaneGraph::from_indices(
      std::move(ids), std::move(rot),
      Dart{remap[static_cast<std::size_t>(keep.tail)], remap[static_cast<std::size_t>(keep.head)]});
}

bool face_order_less(const PlaneGraph& g, const Face& a, const Face& b) {
  auto names = [&](const Face& f) {
    std::vector<std::string> out;
    for (VertexIndex v : f.vertex_set()) out.push_back(g.id(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto na = names(a);
  const auto nb = names(b);
  if (na != nb) return na < nb;
  return a.id < b.id;
}

}  // namespace planembed
