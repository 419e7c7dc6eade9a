#include "sdim/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include "sdim/dimension.hpp"
#include "sdim/distances.hpp"

namespace sdim {

Embedding Embedding::blank(const Graph& g, int k, int side, VertexList anchors) {
  Embedding e;
  e.k = k;
  e.side = side;
  e.labels = g.labels();
  e.anchors = std::move(anchors);
  e.coords.assign(static_cast<size_t>(g.order()) * k, 0);
  return e;
}

void Embedding::set(Vertex v, std::initializer_list<int> p) {
  if (static_cast<int>(p.size()) != k) throw InputError("point has wrong dimension");
  std::copy(p.begin(), p.end(), point(v).begin());
}

int Embedding::max_coordinate() const {
  return coords.empty() ? 0 : *std::max_element(coords.begin(), coords.end());
}

Verdict Verdict::fail(std::string clause, std::string detail, std::optional<Vertex> a,
                      std::optional<Vertex> b) {
  Verdict v;
  v.ok = false;
  v.clause = std::move(clause);
  v.detail = std::move(detail);
  v.first = a;
  v.second = b;
  return v;
}

int chebyshev(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw InputError("chebyshev: tuple lengths differ");
  int best = 0;
  for (size_t i = 0; i < x.size(); ++i) best = std::max(best, std::abs(x[i] - y[i]));
  return best;
}

std::variant<Embedding, UnresolvedPair> distance_vector_embedding(const Graph& h,
                                                                 const VertexList& w) {
  require_connected(h);
  if (w.empty()) throw InputError("anchor list is empty");
  for (Vertex a : w)
    if (a < 0 || a >= h.order()) throw InputError("anchor index out of range");
  auto d = all_pairs_distances(h);
  const int k = static_cast<int>(w.size());
  Embedding e = Embedding::blank(h, k, d.diameter() + 1, w);
  for (Vertex x = 0; x < h.order(); ++x)
    for (int i = 0; i < k; ++i) e.point(x)[i] = d(x, w[i]);
  std::map<std::vector<int>, Vertex> seen;
  for (Vertex x = 0; x < h.order(); ++x) {
    std::vector<int> p(e.point(x).begin(), e.point(x).end());
    auto [it, inserted] = seen.emplace(std::move(p), x);
    if (!inserted) return UnresolvedPair{it->second, x};
  }
  return e;
}

Graph induced_supergraph(const Embedding& e) {
  GraphBuilder b;
  for (const auto& l : e.labels) b.add_vertex(l);
  const int n = e.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (chebyshev(e.point(u), e.point(v)) <= 1) b.add_edge(u, v);
  return b.build();
}

Verdict check_shape(const Embedding& e) {
  if (e.k < 0 || e.side < 1) return Verdict::fail("shape", "k must be >= 0 and side >= 1");
  if (static_cast<int>(e.anchors.size()) != e.k)
    return Verdict::fail("shape", "anchor count differs from k");
  if (e.coords.size() != static_cast<size_t>(e.order()) * e.k)
    return Verdict::fail("shape", "placement size mismatch");
  for (size_t i = 0; i < e.anchors.size(); ++i) {
    Vertex a = e.anchors[i];
    if (a < 0 || a >= e.order()) return Verdict::fail("shape", "anchor out of range");
    for (size_t j = 0; j < i; ++j)
      if (e.anchors[j] == a) return Verdict::fail("shape", "repeated anchor " + e.labels[a], a);
  }
  for (Vertex v = 0; v < e.order(); ++v)
    for (int c : e.point(v))
      if (c < 0 || c >= e.side)
        return Verdict::fail("shape", "coordinate of " + e.labels[v] + " out of range", v);
  return Verdict::pass();
}

Verdict is_w_resolved(const Embedding& e, const Graph& g) {
  if (e.labels != g.labels())
    return Verdict::fail("shape", "embedding vertex set differs from the graph");
  if (auto s = check_shape(e); !s) return s;
  for (auto [u, v] : g.edges())
    if (chebyshev(e.point(u), e.point(v)) > 1)
      return Verdict::fail("W-resolved(a)",
                           "edge " + g.label(u) + "-" + g.label(v) + " maps to non-adjacent cells",
                           u, v);
  std::map<std::vector<int>, Vertex> seen;
  for (Vertex v = 0; v < e.order(); ++v) {
    auto [it, inserted] = seen.emplace(std::vector<int>(e.point(v).begin(), e.point(v).end()), v);
    if (!inserted)
      return Verdict::fail("W-resolved(b)",
                           g.label(it->second) + " and " + g.label(v) + " share a cell",
                           it->second, v);
  }
  Graph h = induced_supergraph(e);
  for (int i = 0; i < e.k; ++i) {
    Vertex w = e.anchors[i];
    auto dist = bfs_distances(h, w);
    for (Vertex x = 0; x < e.order(); ++x)
      if (dist[x] != e.point(x)[i])
        return Verdict::fail("W-resolved(c)",
                             "coordinate " + std::to_string(i + 1) + " of " + g.label(x) + " is " +
                                 std::to_string(e.point(x)[i]) + " but its distance to " +
                                 g.label(w) + " is " + std::to_string(dist[x]),
                             x, w);
  }
  return Verdict::pass();
}

namespace {

Verdict isometry_failure(const Embedding& e, Vertex u, Vertex v, int dh) {
  int c = chebyshev(e.point(u), e.point(v));
  std::string detail = dh == DistanceMatrix::kUnreachable
                           ? e.labels[u] + " and " + e.labels[v] + " are disconnected"
                           : "distance " + std::to_string(dh) + " between " + e.labels[u] +
                                 " and " + e.labels[v] + " exceeds Chebyshev distance " +
                                 std::to_string(c);
  return Verdict::fail("isometric", detail, u, v);
}

}  // namespace

Verdict is_isometric_in_product(const Embedding& e) {
  if (auto s = check_shape(e); !s) return s;
  Graph h = induced_supergraph(e);
  auto d = all_pairs_distances(h);
  const int n = e.order();
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic) reduction(min : first) if (n >= 64)
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (d(u, v) != chebyshev(e.point(u), e.point(v))) {
        first = std::min<std::int64_t>(first, static_cast<std::int64_t>(u) * n + v);
        break;
      }
  if (first == std::numeric_limits<std::int64_t>::max()) return Verdict::pass();
  Vertex u = static_cast<Vertex>(first / n), v = static_cast<Vertex>(first % n);
  return isometry_failure(e, u, v, d(u, v));
}

namespace serial {

Verdict is_isometric_in_product(const Embedding& e) {
  if (auto s = check_shape(e); !s) return s;
  Graph h = induced_supergraph(e);
  auto d = sdim::serial::all_pairs_distances(h);
  for (Vertex u = 0; u < e.order(); ++u)
    for (Vertex v = u + 1; v < e.order(); ++v)
      if (d(u, v) != chebyshev(e.point(u), e.point(v))) return isometry_failure(e, u, v, d(u, v));
  return Verdict::pass();
}

}  // namespace serial

bool anchor_distances_collapse(const Embedding& e) {
  if (!check_shape(e)) return false;
  Graph h = induced_supergraph(e);
  for (int i = 0; i < e.k; ++i) {
    Vertex w = e.anchors[i];
    auto dist = bfs_distances(h, w);
    for (Vertex x = 0; x < e.order(); ++x)
      if (dist[x] != chebyshev(e.point(x), e.point(w))) return false;
  }
  return true;
}

bool FeasibleRegion::contains(int x, int y) const {
  return x >= 0 && y >= 0 && x <= D && y <= D && x + y >= a && y >= x - a && x >= y - a;
}

std::vector<std::pair<int, int>> FeasibleRegion::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y <= D; ++y)
    for (int x = 0; x <= D; ++x)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

FeasibleRegion feasible_region(int D, int a) {
  if (D < 0 || a < 0) throw InputError("feasible region needs D >= 0 and a >= 0");
  if (a > D) throw InputError("anchor distance exceeds the diameter");
  return {D, a};
}

Dim2Report dim2_diagnostics(const Graph& h, const VertexList& w) {
  if (w.size() != 2 || w[0] == w[1]) throw InputError("need two distinct anchors");
  require_connected(h);
  auto d = all_pairs_distances(h);
  if (!is_resolving_set(d, normalize_set(h, w)))
    throw InputError("anchors do not resolve the graph");

  Dim2Report r;
  r.anchor_distance = d(w[0], w[1]);
  for (int j = 0; j < 2; ++j) {
    r.anchor_degree[j] = h.degree(w[j]);
    if (r.anchor_degree[j] > 3) {
      r.anchor_degrees_ok = false;
      r.failures.push_back("anchor " + h.label(w[j]) + " has degree " +
                           std::to_string(r.anchor_degree[j]));
    }
  }

  // Count w1-w2 geodesics through each vertex (capped) to test uniqueness.
  const int n = h.order();
  std::vector<std::int64_t> paths(n, 0);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return d(w[0], a) < d(w[0], b); });
  paths[w[0]] = 1;
  for (Vertex v : order)
    for (Vertex u : h.neighbors(v))
      if (d(w[0], u) + 1 == d(w[0], v)) paths[v] = std::min<std::int64_t>(2, paths[v] + paths[u]);
  r.unique_geodesic = paths[w[1]] == 1;
  if (!r.unique_geodesic) r.failures.push_back("w1-w2 geodesic is not unique");
  for (Vertex v = 0; v < n; ++v)
    if (d(w[0], v) + d(v, w[1]) == r.anchor_distance) {
      r.geodesic_max_degree = std::max(r.geodesic_max_degree, h.degree(v));
      if (h.degree(v) > 5) {
        r.geodesic_degrees_ok = false;
        r.failures.push_back("geodesic vertex " + h.label(v) + " has degree " +
                             std::to_string(h.degree(v)));
      }
    }

  for (int j = 0; j < 2; ++j) {
    const int* dj = d.row(w[j]);
    for (int i = 1; i <= d.eccentricity(w[j]); ++i) {
      std::vector<Vertex> level;
      for (Vertex v = 0; v < n; ++v)
        if (dj[v] == i) level.push_back(v);
      if (static_cast<int>(level.size()) > 2 * i + 1) {
        r.level_sizes_ok = false;
        r.failures.push_back("level " + std::to_string(i) + " of " + h.label(w[j]) + " has " +
                             std::to_string(level.size()) + " vertices");
      }
      int edges = 0;
      bool degree_ok = true;
      for (Vertex v : level) {
        int inside = 0;
        for (Vertex u : h.neighbors(v))
          if (dj[u] == i) ++inside;
        edges += inside;
        degree_ok = degree_ok && inside <= 2;
      }
      edges /= 2;
      Graph sub;
      {
        GraphBuilder b;
        for (Vertex v : level) b.add_vertex(h.label(v));
        for (Vertex v : level)
          for (Vertex u : h.neighbors(v))
            if (dj[u] == i) b.add_edge(h.label(v), h.label(u));
        sub = b.build();
      }
      auto comp = components(sub);
      int comps = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
      bool forest = edges == static_cast<int>(level.size()) - comps;
      if (!degree_ok || !forest) {
        r.levels_are_linear_forests = false;
        r.failures.push_back("level " + std::to_string(i) + " of " + h.label(w[j]) +
                             " is not a union of paths");
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      int fwd = 0, back = 0;
      for (Vertex u : h.neighbors(v)) {
        if (dj[u] == dj[v] + 1) ++fwd;
        if (dj[u] + 1 == dj[v]) ++back;
      }
      r.max_forward_neighbors = std::max(r.max_forward_neighbors, fwd);
      r.max_backward_neighbors = std::max(r.max_backward_neighbors, back);
      if (fwd > 3 || back > 3) {
        r.level_adjacency_ok = false;
        r.failures.push_back("vertex " + h.label(v) + " has " + std::to_string(fwd) + "/" +
                             std::to_string(back) + " neighbours in adjacent levels of " +
                             h.label(w[j]));
      }
    }
  }
  return r;
}

std::string render_grid(const Embedding& e) {
  if (e.k != 2) throw InputError("grid rendering requires k=2");
  if (auto s = check_shape(e); !s) throw InputError("invalid embedding: " + s.detail);
  size_t width = 1;
  for (const auto& l : e.labels) width = std::max(width, l.size());
  std::vector<std::string> cell(static_cast<size_t>(e.side) * e.side, ".");
  for (Vertex v = 0; v < e.order(); ++v) {
    auto p = e.point(v);
    cell[static_cast<size_t>(p[1]) * e.side + p[0]] = e.labels[v];
  }
  std::string out;
  for (int y = e.side - 1; y >= 0; --y) {
    std::string row;
    for (int x = 0; x < e.side; ++x) {
      const auto& c = cell[static_cast<size_t>(y) * e.side + x];
      if (x > 0) row += ' ';
      row += c;
      if (x + 1 < e.side) row.append(width - c.size(), ' ');
    }
    out += row + "\n";
  }
  return out;
}

}  // namespace sdim
