#pragma once

#include <cstdint>

#include "sdim/graph.hpp"

namespace sdim {

struct CoverResult {
  int size = 0;
  VertexList cover;  // sorted; lexicographically smallest minimum cover
  std::uint64_t nodes_explored = 0;
};

// Exact minimum vertex cover by branch and bound.
CoverResult min_vertex_cover(const Graph& g);
bool is_vertex_cover(const Graph& g, const VertexList& s);

}  // namespace sdim
