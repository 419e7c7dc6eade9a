#pragma once

#include <string>

#include "sdim/distances.hpp"
#include "sdim/graph.hpp"

namespace sdim {

enum class DimensionMode { metric, strong };
enum class DimensionMethod { reduction, brute_force };

std::string to_string(DimensionMode m);
std::string to_string(DimensionMethod m);

struct StrongResolvingGraph {
  Graph base;
  Graph sr;  // same labels as base; edges are the mutually maximally distant pairs
};

struct DimensionResult {
  int value = 0;
  VertexList witness;
  DimensionMethod method = DimensionMethod::reduction;
};

// Precondition helpers throw InputError / DisconnectedError.
bool is_mmd(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);
StrongResolvingGraph strong_resolving_graph(const Graph& g);
bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v);

bool is_strong_resolving_set(const Graph& g, const VertexList& w);
bool is_resolving_set(const Graph& g, const VertexList& w);
// Same checks against a precomputed matrix of a connected graph.
bool is_strong_resolving_set(const DistanceMatrix& d, const VertexList& w);
bool is_resolving_set(const DistanceMatrix& d, const VertexList& w);

// Minimum vertex cover of the strong resolving graph.
DimensionResult strong_dimension(const Graph& g);

// Enumerates subsets by size then lexicographically; n <= 64.
// Subsets of each size are split across OpenMP threads.
DimensionResult brute_force_dimension(const Graph& g, DimensionMode mode);

namespace serial {
DimensionResult brute_force_dimension(const Graph& g, DimensionMode mode);
}

}  // namespace sdim
