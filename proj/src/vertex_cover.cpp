#include "sdim/vertex_cover.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace sdim {

namespace {

using Word = std::uint64_t;
using Bits = std::vector<Word>;

bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set(Bits& b, int i) { b[i >> 6] |= Word{1} << (i & 63); }
void reset(Bits& b, int i) { b[i >> 6] &= ~(Word{1} << (i & 63)); }

int count_and(const Bits& a, const Bits& b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

class CoverSolver {
 public:
  explicit CoverSolver(const Graph& g)
      : n_(g.order()), words_((g.order() + 63) / 64), adj_(n_, Bits(words_, 0)) {
    for (auto [u, v] : g.edges()) {
      set(adj_[u], v);
      set(adj_[v], u);
    }
  }

  // Minimum cover size of the subgraph induced by alive, plus taken.
  int minimum(const Bits& alive, int taken, std::uint64_t& nodes) {
    best_ = taken + n_ + 1;
    target_ = -1;
    found_ = false;
    nodes_ = 0;
    search(alive, taken);
    nodes = nodes_;
    return best_;
  }

  // Whether a cover of size <= target exists.
  bool reachable(const Bits& alive, int taken, int target) {
    best_ = target + 1;
    target_ = target;
    found_ = false;
    nodes_ = 0;
    search(alive, taken);
    return found_;
  }

  Bits all() const {
    Bits b(words_, 0);
    for (int v = 0; v < n_; ++v) set(b, v);
    return b;
  }

  const Bits& adj(int v) const { return adj_[v]; }
  int words() const { return words_; }

 private:
  int degree(const Bits& alive, int v) const { return count_and(adj_[v], alive); }

  int first_neighbor(const Bits& alive, int v) const {
    for (int w = 0; w < words_; ++w)
      if (Word m = adj_[v][w] & alive[w]) return w * 64 + std::countr_zero(m);
    return -1;
  }

  // Size of a greedy maximal matching; a lower bound on any cover.
  int matching_bound(const Bits& alive) const {
    Bits free = alive;
    int size = 0;
    for (int v = 0; v < n_; ++v) {
      if (!test(free, v)) continue;
      int u = first_neighbor(free, v);
      if (u < 0) continue;
      reset(free, v);
      reset(free, u);
      ++size;
    }
    return size;
  }

  void search(Bits alive, int taken) {
    ++nodes_;
    if (found_) return;
    // Degree-0 and degree-1 reductions.
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        if (!test(alive, v)) continue;
        int d = degree(alive, v);
        if (d == 0) {
          reset(alive, v);
          changed = true;
        } else if (d == 1) {
          int u = first_neighbor(alive, v);
          reset(alive, v);
          reset(alive, u);
          ++taken;
          changed = true;
        }
      }
    }
    if (taken >= best_) return;
    int pick = -1, pick_degree = 0;
    for (int v = 0; v < n_; ++v) {
      if (!test(alive, v)) continue;
      int d = degree(alive, v);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick < 0) {
      best_ = taken;
      if (target_ >= 0 && taken <= target_) found_ = true;
      return;
    }
    if (taken + matching_bound(alive) >= best_) return;

    Bits without = alive;
    reset(without, pick);
    search(without, taken + 1);
    if (found_) return;
    Bits rest = alive;
    reset(rest, pick);
    for (int w = 0; w < words_; ++w) rest[w] &= ~adj_[pick][w];
    search(rest, taken + pick_degree);
  }

  int n_;
  int words_;
  std::vector<Bits> adj_;
  int best_ = 0;
  int target_ = -1;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CoverResult min_vertex_cover(const Graph& g) {
  const int n = g.order();
  CoverResult result;
  if (g.size() == 0) return result;
  CoverSolver solver(g);
  result.size = solver.minimum(solver.all(), 0, result.nodes_explored);

  // Fix vertices in index order, keeping each one whenever a minimum
  // cover containing the decisions so far still exists.
  std::vector<char> in(n, 0), out(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    bool forced = false;
    for (Vertex u : g.neighbors(v)) forced = forced || out[u];
    if (forced) {
      in[v] = 1;
      continue;
    }
    in[v] = 1;
    Bits alive = solver.all();
    int taken = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (in[u]) {
        reset(alive, u);
        ++taken;
      } else if (out[u]) {
        reset(alive, u);
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      if (!out[u]) continue;
      for (Vertex w : g.neighbors(u))
        if (!in[w] && test(alive, w)) {
          reset(alive, w);
          ++taken;
        }
    }
    if (!solver.reachable(alive, taken, result.size)) {
      in[v] = 0;
      out[v] = 1;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) result.cover.push_back(v);
  return result;
}

bool is_vertex_cover(const Graph& g, const VertexList& s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) in.at(v) = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

}  // namespace sdim
