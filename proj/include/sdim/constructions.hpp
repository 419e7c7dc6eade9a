#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdim/embedding.hpp"
#include "sdim/graph.hpp"

namespace sdim {

struct EmbeddedGraph {
  Graph graph;
  Embedding embedding;
};

// Two-star realizations: strong resolving graph K_{1,m} + K_{1,n} with
// the extra vertex/edges of types 2-4.
struct StarPairSpec {
  int type = 1;
  int m = 1;
  int n = 1;
};

void validate(const StarPairSpec& spec);  // throws InputError
Graph type_graph(const StarPairSpec& spec);

struct TypeCheck {
  bool ok = false;
  std::string detail;
  explicit operator bool() const { return ok; }
};
TypeCheck verify_type_sr(const Graph& g, const StarPairSpec& spec);

// Segment lengths of a four-leaf tree: the spine v (k1 vertices), the two
// pendant paths u, x at its last vertex and y, z at its first.
struct FourLeafTreeParams {
  int k1 = 1, k2 = 1, k3 = 1, k4 = 1, k5 = 1;
  bool normalized() const { return k2 >= k3 && k4 >= k5; }
  auto operator<=>(const FourLeafTreeParams&) const = default;
};

// Adds a pendant path t of length k6 at spine vertex v_{k7}.
struct FiveLeafTreeParams {
  int k1 = 1, k2 = 1, k3 = 1, k4 = 1, k5 = 1, k6 = 1, k7 = 1;
  FourLeafTreeParams base() const { return {k1, k2, k3, k4, k5}; }
  bool normalized() const { return k2 >= k3 && k4 >= k5 && k7 <= k1; }
  auto operator<=>(const FiveLeafTreeParams&) const = default;
};

struct NotApplicable {};
using TreeParams = std::variant<FourLeafTreeParams, FiveLeafTreeParams, NotApplicable>;

void validate(const FourLeafTreeParams& p);
void validate(const FiveLeafTreeParams& p);
Graph four_leaf_tree(const FourLeafTreeParams& p);
Graph five_leaf_tree(const FiveLeafTreeParams& p);
// Lexicographically largest normalized parameters describing t.
TreeParams canonical_tree_params(const Graph& t);
EmbeddedGraph tree_dim3_embedding(const FourLeafTreeParams& p);
EmbeddedGraph tree_dim4_embedding(const FiveLeafTreeParams& p);

// C_n with labels "0".."n-1" on the two diagonals between the anchors.
EmbeddedGraph cycle_embedding(int n);
// Path v1..vn with two leaves u_i, w_i at every v_i.
EmbeddedGraph l3n_family(int n);
// The 23-vertex gadget (n = 1) and chains of n gadgets.
Graph gn_family(int n);
// Anchor positions of the 23-vertex gadget under its two anchors.
Embedding gadget_grid_embedding();

struct ProperColoring {
  std::vector<VertexList> classes;  // sorted by size ascending
};

ProperColoring make_coloring(const Graph& g, std::vector<VertexList> classes);
// Greedy colouring in vertex order.
ProperColoring greedy_coloring(const Graph& g);

struct BoundSupergraph {
  Graph h;
  int bound = 0;
};

BoundSupergraph chromatic_bound_supergraph(const Graph& g, const ProperColoring& coloring);
BoundSupergraph tree_bound_supergraph(const Graph& t);

int ceil_log2(int x);

}  // namespace sdim
