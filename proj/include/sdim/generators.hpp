#pragma once

#include <cstdint>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

// Standard families, labels "0".."n-1". n = 0 throws InputError.
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center "0"
Graph complete_multipartite(const std::vector<int>& sizes);
// Uniform labeled tree via Pruefer decoding.
Graph random_tree(int n, std::uint64_t seed);
// Random spanning tree plus each remaining pair with probability p.
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace sdim
