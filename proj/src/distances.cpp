#include "sdim/distances.hpp"

#include <algorithm>

namespace sdim {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> dist)
    : n_(n), dist_(std::move(dist)), ecc_(n, 0) {
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      int d = (*this)(u, v);
      if (d == kUnreachable) {
        connected_ = false;
        continue;
      }
      ecc_[u] = std::max(ecc_[u], d);
    }
    diameter_ = std::max(diameter_, ecc_[u]);
  }
}

namespace {

void bfs_into(const Graph& g, Vertex s, int* out, std::vector<Vertex>& queue) {
  const int n = g.order();
  std::fill(out, out + n, DistanceMatrix::kUnreachable);
  queue.clear();
  queue.push_back(s);
  out[s] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u))
      if (out[v] == DistanceMatrix::kUnreachable) {
        out[v] = out[u] + 1;
        queue.push_back(v);
      }
  }
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> out(g.order());
  std::vector<Vertex> queue;
  bfs_into(g, source, out.data(), queue);
  return out;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<size_t>(n) * n);
#pragma omp parallel if (n >= 64)
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(static)
    for (int s = 0; s < n; ++s)
      bfs_into(g, s, dist.data() + static_cast<size_t>(s) * n, queue);
  }
  return DistanceMatrix(n, std::move(dist));
}

namespace serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<size_t>(n) * n);
  std::vector<Vertex> queue;
  for (int s = 0; s < n; ++s)
    bfs_into(g, s, dist.data() + static_cast<size_t>(s) * n, queue);
  return DistanceMatrix(n, std::move(dist));
}

}  // namespace serial

}  // namespace sdim
