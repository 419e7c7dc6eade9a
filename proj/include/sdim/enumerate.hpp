#pragma once

#include <cstdint>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

// One representative per isomorphism class of graphs on n vertices
// (n <= 8), labels "0".."n-1". Order is deterministic.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

// Every labeled connected graph on n vertices (n <= 6).
std::vector<Graph> all_labeled_connected_graphs(int n);

// Canonical code of a graph on at most 11 vertices: equal codes iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

}  // namespace sdim
