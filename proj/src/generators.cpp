#include "sdim/generators.hpp"

#include <queue>
#include <random>
#include <string>

namespace sdim {

namespace {

void require_positive(int n, const char* family) {
  if (n < 1)
    throw InputError(std::string(family) + ": n must be at least 1");
}

}  // namespace

Graph path_graph(int n) {
  require_positive(n, "path");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  require_positive(n, "cycle");
  if (n < 3) throw InputError("cycle: n must be at least 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph complete_graph(int n) {
  require_positive(n, "complete");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

Graph star_graph(int leaves) {
  require_positive(leaves, "star");
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw InputError("multipartite: no parts given");
  int n = 0;
  std::vector<int> part;
  for (size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] < 1) throw InputError("multipartite: part sizes must be positive");
    n += sizes[p];
    part.insert(part.end(), sizes[p], static_cast<int>(p));
  }
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[i] != part[j]) b.add_edge(i, j);
  return b.build();
}

Graph random_tree(int n, std::uint64_t seed) {
  require_positive(n, "random_tree");
  GraphBuilder b(n);
  if (n == 2) b.add_edge(0, 1);
  if (n <= 2) return b.build();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    b.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  int u = leaves.top();
  leaves.pop();
  b.add_edge(u, leaves.top());
  return b.build();
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  Graph tree = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> extra;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!tree.adjacent(i, j) && coin(rng)) extra.emplace_back(i, j);
  return tree.with_edges(extra);
}

}  // namespace sdim
