#include "sdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace sdim {

DisconnectedError::DisconnectedError(std::string a, std::string b)
    : InputError("graph is disconnected: '" + a + "' and '" + b +
                 "' lie in different components"),
      first_(std::move(a)),
      second_(std::move(b)) {}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
  GraphBuilder b;
  for (const auto& l : labels_) b.add_vertex(l);
  for (auto [u, v] : edges()) b.add_edge(u, v);
  for (auto [u, v] : extra) b.add_edge(u, v);
  return b.build();
}

Graph Graph::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size())
    throw InputError("relabel: label count mismatch");
  GraphBuilder b;
  for (const auto& l : labels) {
    if (b.add_vertex(l) != b.order() - 1)
      throw InputError("relabel: duplicate label '" + l + "'");
  }
  for (auto [u, v] : edges()) b.add_edge(u, v);
  return b.build();
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n)
    throw InputError("permutation size mismatch");
  std::vector<Vertex> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || inv[perm[i]] != -1)
      throw InputError("not a permutation");
    inv[perm[i]] = i;
  }
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(labels_[perm[i]]);
  for (auto [u, v] : edges()) b.add_edge(inv[u], inv[v]);
  return b.build();
}

bool Graph::operator==(const Graph& other) const {
  return labels_ == other.labels_ && adj_ == other.adj_;
}

GraphBuilder::GraphBuilder(int n) {
  for (int i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

Vertex GraphBuilder::add_vertex(const std::string& label) {
  auto [it, inserted] =
      index_.emplace(label, static_cast<Vertex>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop at vertex '" + labels_[u] + "'");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

void GraphBuilder::add_edge(const std::string& a, const std::string& b) {
  const Vertex u = add_vertex(a);
  add_edge(u, add_vertex(b));
}

Graph GraphBuilder::build() const {
  Graph g;
  const size_t n = labels_.size();
  g.labels_ = labels_;
  g.index_ = index_;
  g.adj_.assign(n, {});
  g.matrix_.assign(n * n, 0);
  for (auto [u, v] : edges_) {
    char& cell = g.matrix_[u * n + v];
    if (cell) continue;
    cell = 1;
    g.matrix_[v * n + u] = 1;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  return g;
}

Graph parse_edge_list(std::string_view text) {
  GraphBuilder b;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw InputError("expected 2 labels at line " + std::to_string(lineno) +
                       ", found " + std::to_string(tok.size()));
    if (tok[0] == tok[1])
      throw InputError("self-loop at line " + std::to_string(lineno));
    b.add_edge(tok[0], tok[1]);
  }
  return b.build();
}

std::string serialize_edge_list(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto [u, v] : g.edges()) {
    const auto& a = g.label(u);
    const auto& b = g.label(v);
    rows.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [a, b] : rows) out += a + " " + b + "\n";
  return out;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<int> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u))
        if (comp[v] == -1) {
          comp[v] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw InputError("graph has no vertices");
  auto comp = components(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (comp[v] != 0) throw DisconnectedError(g.label(0), g.label(v));
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::vector<Vertex> leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

VertexList normalize_set(const Graph& g, VertexList s) {
  for (Vertex v : s)
    if (v < 0 || v >= g.order()) throw InputError("vertex index out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexList indices_of(const Graph& g, const std::vector<std::string>& labels) {
  VertexList out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(g.index_of(l));
  return out;
}

std::vector<std::string> labels_of(const Graph& g, const VertexList& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

}  // namespace sdim
