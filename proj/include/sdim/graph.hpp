#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sdim {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Thrown for malformed input: bad edge-list text, unknown labels, bad params.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by operations that need a connected graph.
class DisconnectedError : public InputError {
 public:
  DisconnectedError(std::string a, std::string b);
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

// Simple undirected graph with string labels and dense 0-based indices.
// Immutable once built; use GraphBuilder to make one.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(labels_.size()); }
  int size() const { return edge_count_; }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex index_of(std::string_view label) const;  // throws InputError

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<size_t>(u) * labels_.size() + v] != 0;
  }

  // Edges as (u, v) with u < v, sorted by index.
  std::vector<Edge> edges() const;

  // Graph on the same labels whose edges are the union of both edge sets.
  Graph with_edges(const std::vector<Edge>& extra) const;
  // Same structure with labels rewritten.
  Graph relabeled(std::vector<std::string> labels) const;
  // Vertex v of the result is vertex perm[v] of this graph.
  Graph permuted(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph& other) const;

 private:
  friend class GraphBuilder;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  int edge_count_ = 0;
};

class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(int n);  // vertices labeled "0".."n-1"

  // Returns the existing index when the label is already present.
  Vertex add_vertex(const std::string& label);
  void add_edge(Vertex u, Vertex v);
  void add_edge(const std::string& a, const std::string& b);
  int order() const { return static_cast<int>(labels_.size()); }

  Graph build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

Graph parse_edge_list(std::string_view text);
// Edges sorted by (min label, max label); isolated vertices are not written.
std::string serialize_edge_list(const Graph& g);
std::vector<Vertex> isolated_vertices(const Graph& g);

// Component id per vertex, numbered by smallest member.
std::vector<int> components(const Graph& g);
bool is_connected(const Graph& g);
// Throws DisconnectedError naming one vertex from each of two components.
void require_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<Vertex> leaves(const Graph& g);

// Sorted, duplicate-free vertex list; throws InputError on out-of-range.
VertexList normalize_set(const Graph& g, VertexList s);
VertexList indices_of(const Graph& g, const std::vector<std::string>& labels);
std::vector<std::string> labels_of(const Graph& g, const VertexList& vs);

}  // namespace sdim
