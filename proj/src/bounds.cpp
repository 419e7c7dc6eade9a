#include <algorithm>
#include <set>

#include "sdim/constructions.hpp"

namespace sdim {

int ceil_log2(int x) {
  if (x < 1) throw InputError("ceil_log2 needs a positive argument");
  int l = 0;
  while ((1LL << l) < x) ++l;
  return l;
}

ProperColoring make_coloring(const Graph& g, std::vector<VertexList> classes) {
  std::vector<int> colour(g.order(), -1);
  for (size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InputError("colour classes must be non-empty");
    std::sort(classes[c].begin(), classes[c].end());
    for (Vertex v : classes[c]) {
      if (v < 0 || v >= g.order()) throw InputError("colour class vertex out of range");
      if (colour[v] != -1) throw InputError("vertex " + g.label(v) + " has two colours");
      colour[v] = static_cast<int>(c);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (colour[v] == -1) throw InputError("vertex " + g.label(v) + " is uncoloured");
  for (auto [u, v] : g.edges())
    if (colour[u] == colour[v])
      throw InputError("improper colouring: " + g.label(u) + " and " + g.label(v) +
                       " are adjacent and share a colour");
  std::stable_sort(classes.begin(), classes.end(),
                   [](const VertexList& a, const VertexList& b) { return a.size() < b.size(); });
  return {std::move(classes)};
}

ProperColoring greedy_coloring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<VertexList> classes;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::set<int> used;
    for (Vertex u : g.neighbors(v))
      if (colour[u] >= 0) used.insert(colour[u]);
    int c = 0;
    while (used.count(c)) ++c;
    colour[v] = c;
    if (c == static_cast<int>(classes.size())) classes.emplace_back();
    classes[c].push_back(v);
  }
  return make_coloring(g, std::move(classes));
}

BoundSupergraph chromatic_bound_supergraph(const Graph& g, const ProperColoring& coloring) {
  ProperColoring checked = make_coloring(g, coloring.classes);
  std::vector<int> colour(g.order());
  for (size_t c = 0; c < checked.classes.size(); ++c)
    for (Vertex v : checked.classes[c]) colour[v] = static_cast<int>(c);

  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (colour[u] != colour[v]) edges.emplace_back(u, v);

  int singletons = 0, logs = 0;
  for (const auto& cls : checked.classes) {
    const int size = static_cast<int>(cls.size());
    if (size == 1) {
      ++singletons;
      continue;
    }
    const int l = ceil_log2(size);
    logs += l;
    // The first l vertices form W_i; the others get distinct proper
    // subsets of W_i in counting order and become a clique.
    VertexList rest(cls.begin() + l, cls.end());
    for (size_t j = 0; j < rest.size(); ++j) {
      for (int b = 0; b < l; ++b)
        if ((j >> b) & 1u) edges.emplace_back(std::min(rest[j], cls[b]), std::max(rest[j], cls[b]));
      for (size_t i = 0; i < j; ++i) edges.emplace_back(rest[i], rest[j]);
    }
  }
  const int bound = singletons >= 1 ? singletons - 1 + logs : logs;
  return {g.with_edges(edges), bound};
}

BoundSupergraph tree_bound_supergraph(const Graph& t) {
  if (!is_tree(t)) throw InputError("graph is not a tree");
  const int n = t.order();
  if (n < 2) throw InputError("tree bound needs at least two vertices");
  const int L = ceil_log2(n);
  auto leaf = leaves(t);
  const int l = static_cast<int>(leaf.size());
  if (l <= L) return {t, l - 1};

  VertexList w(leaf.begin(), leaf.begin() + L);
  std::vector<int> bit(n, -1);
  for (int i = 0; i < L; ++i) bit[w[i]] = i;
  const unsigned full = (1u << L) - 1;

  // Existing leaf-neighbourhoods stay and are reserved.
  std::vector<char> reserved(1u << L, 0);
  VertexList free_vertices;
  bool full_taken = false;
  for (Vertex v = 0; v < n; ++v) {
    if (bit[v] >= 0) continue;
    unsigned mask = 0;
    for (Vertex u : t.neighbors(v))
      if (bit[u] >= 0) mask |= 1u << bit[u];
    if (mask == 0) {
      free_vertices.push_back(v);
    } else {
      reserved[mask] = 1;
      full_taken = full_taken || mask == full;
    }
  }
  std::vector<Edge> edges;
  auto assign = [&](Vertex v, unsigned mask) {
    for (int i = 0; i < L; ++i)
      if ((mask >> i) & 1u) edges.emplace_back(std::min(v, w[i]), std::max(v, w[i]));
  };
  size_t next_free = 0;
  if (!full_taken) {
    if (free_vertices.empty()) throw std::logic_error("no vertex available for the full anchor set");
    assign(free_vertices[next_free++], full);
  }
  reserved[full] = 1;
  unsigned mask = 0;
  for (; next_free < free_vertices.size(); ++next_free) {
    while (reserved[mask]) ++mask;
    assign(free_vertices[next_free], mask);
    reserved[mask] = 1;
  }
  VertexList rest;
  for (Vertex v = 0; v < n; ++v)
    if (bit[v] < 0) rest.push_back(v);
  for (size_t i = 0; i < rest.size(); ++i)
    for (size_t j = i + 1; j < rest.size(); ++j) edges.emplace_back(rest[i], rest[j]);
  return {t.with_edges(edges), L};
}

}  // namespace sdim
