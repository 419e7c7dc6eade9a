#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sdim/graph.hpp"

namespace sdim {

// Injective placement of a labeled vertex set into {0..side-1}^k.
// labels[v] names vertex v; it matches the graph the embedding came from.
struct Embedding {
  int k = 0;
  int side = 0;
  std::vector<std::string> labels;
  VertexList anchors;
  std::vector<int> coords;  // vertex-major, k entries per vertex

  static Embedding blank(const Graph& g, int k, int side, VertexList anchors);
  int order() const { return static_cast<int>(labels.size()); }
  std::span<const int> point(Vertex v) const {
    return {coords.data() + static_cast<size_t>(v) * k, static_cast<size_t>(k)};
  }
  std::span<int> point(Vertex v) {
    return {coords.data() + static_cast<size_t>(v) * k, static_cast<size_t>(k)};
  }
  void set(Vertex v, std::initializer_list<int> p);
  int max_coordinate() const;
};

struct Verdict {
  bool ok = true;
  std::string clause;  // empty when ok
  std::string detail;
  std::optional<Vertex> first;
  std::optional<Vertex> second;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string clause, std::string detail,
                      std::optional<Vertex> a = std::nullopt,
                      std::optional<Vertex> b = std::nullopt);
};

struct UnresolvedPair {
  Vertex u;
  Vertex v;
};

int chebyshev(std::span<const int> x, std::span<const int> y);

// Places x at its vector of distances to the anchors. Side is diam(h)+1.
std::variant<Embedding, UnresolvedPair> distance_vector_embedding(const Graph& h,
                                                                 const VertexList& w);

// Graph on the embedding's labels joining points at Chebyshev distance 1.
Graph induced_supergraph(const Embedding& e);

// Range, dimension and anchor checks shared by the certifiers.
Verdict check_shape(const Embedding& e);
// Clauses: (a) host edges map to adjacent cells, (b) injective,
// (c) coordinate i equals the distance to anchor i in the induced graph.
Verdict is_w_resolved(const Embedding& e, const Graph& g);
// Induced-graph distances equal Chebyshev distances for every pair.
Verdict is_isometric_in_product(const Embedding& e);
bool anchor_distances_collapse(const Embedding& e);

namespace serial {
Verdict is_isometric_in_product(const Embedding& e);
}

struct FeasibleRegion {
  int D;
  int a;
  bool contains(int x, int y) const;
  std::vector<std::pair<int, int>> cells() const;
};

FeasibleRegion feasible_region(int D, int a);

struct Dim2Report {
  int anchor_distance = 0;
  int anchor_degree[2] = {0, 0};
  bool anchor_degrees_ok = true;      // both at most 3
  bool unique_geodesic = true;
  int geodesic_max_degree = 0;
  bool geodesic_degrees_ok = true;    // at most 5
  bool levels_are_linear_forests = true;
  bool level_sizes_ok = true;         // |N_i(w_j)| <= 2i+1
  int max_forward_neighbors = 0;
  int max_backward_neighbors = 0;
  bool level_adjacency_ok = true;     // at most 3 each way
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

// Structural checks for a two-vertex resolving set. Throws InputError
// when w does not resolve h.
Dim2Report dim2_diagnostics(const Graph& h, const VertexList& w);

// Rows by y descending, one column per x; '.' marks an empty cell.
std::string render_grid(const Embedding& e);

}  // namespace sdim
