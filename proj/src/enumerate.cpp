#include "sdim/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sdim {

namespace {

// Equitable color refinement starting from degrees.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex u : g.neighbors(v)) sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    // Refinement only splits classes, so an unchanged count means stable.
    size_t classes_before = std::set<int>(color.begin(), color.end()).size();
    color = next;
    if (sorted.size() == classes_before) break;
  }
  return color;
}

std::uint64_t code_for(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  return code;
}

void search_orders(const Graph& g, std::vector<std::vector<Vertex>>& cells, size_t c,
                   std::vector<Vertex>& order, std::uint64_t& best) {
  if (c == cells.size()) {
    best = std::min(best, code_for(g, order));
    return;
  }
  auto& cell = cells[c];
  std::sort(cell.begin(), cell.end());
  do {
    size_t base = order.size();
    order.insert(order.end(), cell.begin(), cell.end());
    search_orders(g, cells, c + 1, order, best);
    order.resize(base);
  } while (std::next_permutation(cell.begin(), cell.end()));
}

Graph graph_from_code(int n, std::uint64_t code) {
  GraphBuilder b(n);
  int bit = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      --bit;
      if ((code >> bit) & 1u) b.add_edge(i, j);
    }
  return b.build();
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InputError("canonical_code supports at most 11 vertices");
  auto color = refine_colors(g);
  std::map<int, std::vector<Vertex>> by_color;
  for (Vertex v = 0; v < n; ++v) by_color[color[v]].push_back(v);
  std::vector<std::vector<Vertex>> cells;
  for (auto& [c, vs] : by_color) cells.push_back(vs);
  std::vector<Vertex> order;
  std::uint64_t best = ~std::uint64_t{0};
  search_orders(g, cells, 0, order, best);
  return best;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 8) throw InputError("all_graphs supports 1 <= n <= 8");
  std::set<std::uint64_t> level{0};  // K1
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph base = graph_from_code(m - 1, code);
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        GraphBuilder b(m);
        for (auto [u, v] : base.edges()) b.add_edge(u, v);
        for (int u = 0; u < m - 1; ++u)
          if ((mask >> u) & 1u) b.add_edge(u, m - 1);
        next.insert(canonical_code(b.build()));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> all_labeled_connected_graphs(int n) {
  if (n < 1 || n > 6) throw InputError("labeled enumeration supports 1 <= n <= 6");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    GraphBuilder b(n);
    for (size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1u) b.add_edge(pairs[e].first, pairs[e].second);
    Graph g = b.build();
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace sdim
