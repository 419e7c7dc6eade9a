#pragma once

#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> dist);

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<size_t>(u) * n_ + v];
  }
  const int* row(Vertex u) const { return dist_.data() + static_cast<size_t>(u) * n_; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }
  bool connected() const { return connected_; }
  int diameter() const { return diameter_; }
  int eccentricity(Vertex v) const { return ecc_[v]; }
  const std::vector<int>& eccentricities() const { return ecc_; }

 private:
  int n_ = 0;
  std::vector<int> dist_;
  std::vector<int> ecc_;
  int diameter_ = 0;
  bool connected_ = true;
};

// One BFS per source, sources split across OpenMP threads.
DistanceMatrix all_pairs_distances(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

namespace serial {
DistanceMatrix all_pairs_distances(const Graph& g);
}

}  // namespace sdim
