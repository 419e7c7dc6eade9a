#include <algorithm>
#include <numeric>

#include "sdim/distances.hpp"
#include "sdim/threshold.hpp"

namespace sdim {

std::string to_string(SearchMode m) {
  return m == SearchMode::resolved ? "resolved" : "strongly_resolved";
}

std::string to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::yes: return "yes";
    case SearchVerdict::no: return "no";
    case SearchVerdict::budget_exhausted: return "budget_exhausted";
  }
  return "";
}

namespace {

constexpr long long kMaxCells = 1LL << 24;

// Cells of {0..S-1}^k numbered in mixed radix, coordinate 0 least significant.
struct Grid {
  int k = 0;
  int side = 0;
  int cells = 0;
  std::vector<unsigned char> coord;
  std::vector<std::vector<int>> offsets;     // all non-zero moves in {-1,0,1}^k
  std::vector<std::vector<int>> descending;  // per coordinate: moves with that entry -1

  Grid(int k_, int side_) : k(k_), side(side_) {
    cells = 1;
    for (int i = 0; i < k; ++i) cells *= side;
    coord.resize(static_cast<size_t>(cells) * k);
    for (int c = 0; c < cells; ++c) {
      int r = c;
      for (int i = 0; i < k; ++i) {
        coord[static_cast<size_t>(c) * k + i] = static_cast<unsigned char>(r % side);
        r /= side;
      }
    }
    int moves = 1;
    for (int i = 0; i < k; ++i) moves *= 3;
    descending.resize(k);
    for (int m = 0; m < moves; ++m) {
      std::vector<int> o(k);
      int r = m;
      bool zero = true;
      for (int i = 0; i < k; ++i) {
        o[i] = r % 3 - 1;
        r /= 3;
        zero = zero && o[i] == 0;
      }
      if (zero) continue;
      int idx = static_cast<int>(offsets.size());
      offsets.push_back(o);
      for (int i = 0; i < k; ++i)
        if (o[i] == -1) descending[i].push_back(idx);
    }
  }

  int at(int c, int i) const { return coord[static_cast<size_t>(c) * k + i]; }

  int cheb(int a, int b) const {
    int best = 0;
    const unsigned char* pa = &coord[static_cast<size_t>(a) * k];
    const unsigned char* pb = &coord[static_cast<size_t>(b) * k];
    for (int i = 0; i < k; ++i) best = std::max(best, std::abs(pa[i] - pb[i]));
    return best;
  }

  // Cell reached from c by move o, or -1 when it leaves the grid.
  int step(int c, const std::vector<int>& o) const {
    int out = 0, mul = 1;
    for (int i = 0; i < k; ++i) {
      int x = at(c, i) + o[i];
      if (x < 0 || x >= side) return -1;
      out += x * mul;
      mul *= side;
    }
    return out;
  }

  int encode(const std::vector<int>& p) const {
    int out = 0, mul = 1;
    for (int i = 0; i < k; ++i) {
      out += p[i] * mul;
      mul *= side;
    }
    return out;
  }
};

struct Budget {};

class PlacementSearch {
 public:
  PlacementSearch(const Graph& g, const DistanceMatrix& d, const VertexList& w, int side,
                  SearchMode mode, bool dim2, std::uint64_t budget)
      : g_(g), d_(d), w_(w), n_(g.order()), k_(static_cast<int>(w.size())), grid_(k_, side),
        mode_(mode), dim2_(dim2), budget_(budget) {}

  SearchOutcome run() {
    SearchOutcome out;
    if (dim2_)
      for (Vertex a : w_)
        if (g_.degree(a) > 3) return out;  // an anchor has at most three neighbours
    if (!init()) return out;
    try {
      if (dfs()) {
        out.verdict = SearchVerdict::yes;
        out.embedding = found_;
      }
    } catch (const Budget&) {
      out.verdict = SearchVerdict::budget_exhausted;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  struct TrailEntry {
    int v;
    int old_size;
    bool retire;
  };

  bool init() {
    anchor_index_.assign(n_, -1);
    for (int i = 0; i < k_; ++i) anchor_index_[w_[i]] = i;
    pos_.assign(n_, -1);
    occ_.assign(grid_.cells, -1);
    cover_.assign(grid_.cells, 0);
    dom_.assign(n_, {});
    size_.assign(n_, 0);
    auto bfs = bfs_distances(g_, w_[0]);
    rank_.resize(n_);
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return bfs[a] < bfs[b]; });
    for (int i = 0; i < n_; ++i) rank_[order[i]] = i;

    for (Vertex x = 0; x < n_; ++x) {
      std::vector<int> lo(k_), hi(k_);
      for (int i = 0; i < k_; ++i) {
        if (anchor_index_[x] == i) {
          lo[i] = hi[i] = 0;
        } else {
          lo[i] = 1;
          hi[i] = std::min(d_(x, w_[i]), grid_.side - 1);
        }
        if (hi[i] < lo[i]) return false;
      }
      std::vector<int> p = lo;
      for (;;) {
        dom_[x].push_back(grid_.encode(p));
        int i = 0;
        while (i < k_ && p[i] == hi[i]) {
          p[i] = lo[i];
          ++i;
        }
        if (i == k_) break;
        ++p[i];
      }
      size_[x] = static_cast<int>(dom_[x].size());
      for (int c : dom_[x])
        if (cover_[c]++ == 0) ++available_;
    }
    unplaced_ = n_;
    return true;
  }

  void remove_at(int v, int j) {
    int& sz = size_[v];
    std::swap(dom_[v][j], dom_[v][sz - 1]);
    int c = dom_[v][--sz];
    if (--cover_[c] == 0) --available_;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      TrailEntry t = trail_.back();
      trail_.pop_back();
      if (t.retire) {
        for (int j = 0; j < t.old_size; ++j)
          if (cover_[dom_[t.v][j]]++ == 0) ++available_;
      } else {
        for (int j = size_[t.v]; j < t.old_size; ++j)
          if (cover_[dom_[t.v][j]]++ == 0) ++available_;
        size_[t.v] = t.old_size;
      }
    }
  }

  bool usable(int c) const { return occ_[c] >= 0 || cover_[c] > 0; }

  // Removes from x's domain the cells that conflict with y placed at c.
  bool filter(Vertex x, Vertex y, int c) {
    const int r = d_(x, y);
    const int yi = anchor_index_[y];
    const int xi = anchor_index_[x];
    const int want = xi >= 0 ? grid_.at(c, xi) : -1;
    const int old = size_[x];
    bool touched = false;
    for (int j = size_[x] - 1; j >= 0; --j) {
      int e = dom_[x][j];
      bool bad = e == c;
      if (!bad) {
        int ch = grid_.cheb(e, c);
        bad = ch > r || (yi >= 0 && ch != grid_.at(e, yi)) || (xi >= 0 && ch != want);
      }
      if (bad) {
        if (!touched) {
          trail_.push_back({x, old, false});
          touched = true;
        }
        remove_at(x, j);
      }
    }
    return size_[x] > 0;
  }

  // Every placed vertex keeps a possible neighbour one step closer to
  // each anchor.
  bool supports_ok() const {
    for (Vertex x : placed_) {
      int c = pos_[x];
      for (int i = 0; i < k_; ++i) {
        if (grid_.at(c, i) == 0) continue;
        bool ok = false;
        for (int m : grid_.descending[i]) {
          int e = grid_.step(c, grid_.offsets[m]);
          if (e >= 0 && usable(e)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
    return true;
  }

  // Every placed pair at Chebyshev distance >= 2 keeps a possible first
  // step of a geodesic.
  bool geodesics_ok() const {
    for (Vertex u : placed_) {
      int cu = pos_[u];
      for (Vertex v : placed_) {
        if (u == v) continue;
        int cv = pos_[v];
        int dist = grid_.cheb(cu, cv);
        if (dist < 2) continue;
        bool ok = false;
        for (const auto& o : grid_.offsets) {
          int e = grid_.step(cu, o);
          if (e >= 0 && usable(e) && grid_.cheb(e, cv) == dist - 1) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
    return true;
  }

  // Unplaced G-neighbours of a placed vertex need distinct free cells next to it.
  bool degree_capacity_ok() const {
    for (Vertex x : placed_) {
      int need = 0;
      for (Vertex y : g_.neighbors(x))
        if (pos_[y] < 0) ++need;
      if (need == 0) continue;
      int room = 0;
      for (const auto& o : grid_.offsets) {
        int e = grid_.step(pos_[x], o);
        if (e >= 0 && occ_[e] < 0 && cover_[e] > 0) ++room;
      }
      if (room < need) return false;
    }
    return true;
  }

  bool dim2_ok() const {
    const Vertex w1 = w_[0], w2 = w_[1];
    if (pos_[w1] >= 0 && pos_[w2] >= 0) {
      // The whole anchor-to-anchor diagonal must be occupied.
      const int a = grid_.at(pos_[w1], 1);
      for (int t = 1; t < a; ++t)
        if (!usable(grid_.encode({t, a - t}))) return false;
    }
    // Vertices confined to one level cannot outnumber its free cells.
    for (int j = 0; j < 2; ++j) {
      std::vector<int> confined(grid_.side, 0);
      for (Vertex x = 0; x < n_; ++x) {
        if (pos_[x] >= 0) continue;
        int lo = grid_.side, hi = -1;
        for (int t = 0; t < size_[x]; ++t) {
          int v = grid_.at(dom_[x][t], j);
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        if (lo == hi) ++confined[lo];
      }
      for (int t = 0; t < grid_.side; ++t) {
        if (confined[t] == 0) continue;
        int free = 0;
        for (int s = 0; s < grid_.side; ++s) {
          int c = j == 0 ? grid_.encode({t, s}) : grid_.encode({s, t});
          if (occ_[c] < 0 && cover_[c] > 0) ++free;
        }
        if (confined[t] > free) return false;
      }
    }
    return true;
  }

  bool consistent() const {
    if (unplaced_ > available_) return false;
    if (!supports_ok()) return false;
    if (mode_ == SearchMode::strongly_resolved && !geodesics_ok()) return false;
    if (dim2_ && (!degree_capacity_ok() || !dim2_ok())) return false;
    return true;
  }

  Vertex choose() const {
    for (Vertex a : w_)
      if (pos_[a] < 0) return a;
    Vertex best = -1;
    for (Vertex x = 0; x < n_; ++x) {
      if (pos_[x] >= 0) continue;
      if (best < 0 || size_[x] < size_[best] ||
          (size_[x] == size_[best] && rank_[x] < rank_[best]))
        best = x;
    }
    return best;
  }

  bool certify_leaf() {
    Embedding e;
    e.k = k_;
    e.side = grid_.side;
    e.labels = g_.labels();
    e.anchors = w_;
    e.coords.resize(static_cast<size_t>(n_) * k_);
    for (Vertex x = 0; x < n_; ++x)
      for (int i = 0; i < k_; ++i) e.point(x)[i] = grid_.at(pos_[x], i);
    if (!is_w_resolved(e, g_)) return false;
    if (mode_ == SearchMode::strongly_resolved && !serial::is_isometric_in_product(e))
      return false;
    found_ = std::move(e);
    return true;
  }

  bool dfs() {
    if (unplaced_ == 0) return certify_leaf();
    Vertex y = choose();
    std::vector<int> cand(dom_[y].begin(), dom_[y].begin() + size_[y]);
    std::vector<std::pair<int, int>> keyed;
    keyed.reserve(cand.size());
    for (int c : cand) {
      int sum = 0;
      for (int i = 0; i < k_; ++i) sum += grid_.at(c, i);
      keyed.emplace_back(-sum, c);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto [key, c] : keyed) {
      if (++nodes_ > budget_) throw Budget{};
      size_t mark = trail_.size();
      trail_.push_back({y, size_[y], true});
      for (int j = 0; j < size_[y]; ++j)
        if (--cover_[dom_[y][j]] == 0) --available_;
      pos_[y] = c;
      occ_[c] = y;
      placed_.push_back(y);
      --unplaced_;
      bool ok = true;
      for (Vertex x = 0; x < n_ && ok; ++x)
        if (pos_[x] < 0) ok = filter(x, y, c);
      if (ok && consistent() && dfs()) return true;
      ++unplaced_;
      placed_.pop_back();
      occ_[c] = -1;
      pos_[y] = -1;
      undo_to(mark);
    }
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& d_;
  VertexList w_;
  int n_;
  int k_;
  Grid grid_;
  SearchMode mode_;
  bool dim2_;
  std::uint64_t budget_;

  std::vector<int> anchor_index_;
  std::vector<int> rank_;
  std::vector<int> pos_;
  std::vector<int> occ_;
  std::vector<int> cover_;
  std::vector<std::vector<int>> dom_;
  std::vector<int> size_;
  std::vector<TrailEntry> trail_;
  std::vector<Vertex> placed_;
  int unplaced_ = 0;
  int available_ = 0;
  std::uint64_t nodes_ = 0;
  Embedding found_;
};

SearchOutcome run_search(const Graph& g, const VertexList& w, SearchMode mode, int max_side,
                         std::uint64_t budget, bool dim2) {
  require_connected(g);
  if (budget == 0) throw InputError("node budget must be positive");
  for (Vertex a : w)
    if (a < 0 || a >= g.order()) throw InputError("anchor index out of range");
  if (normalize_set(g, w).size() != w.size()) throw InputError("anchors must be distinct");
  const int n = g.order();
  const int k = static_cast<int>(w.size());
  SearchOutcome out;
  if (k == 0) {
    if (n == 1) {
      out.verdict = SearchVerdict::yes;
      out.embedding = Embedding::blank(g, 0, 1, {});
    }
    return out;
  }
  auto d = all_pairs_distances(g);
  int side = d.diameter() + 1;
  if (max_side > 0) side = std::min(side, max_side);
  if (side > 255) throw InputError("diameter too large for placement search");
  long long cells = 1;
  for (int i = 0; i < k; ++i) {
    cells *= side;
    if (cells > kMaxCells) {
      out.verdict = SearchVerdict::budget_exhausted;
      return out;
    }
  }
  PlacementSearch search(g, d, w, side, mode, dim2, budget);
  return search.run();
}

}  // namespace

SearchOutcome exists_supergraph_resolved_by(const Graph& g, const VertexList& w,
                                            const PlacementSearchConfig& cfg) {
  return run_search(g, w, cfg.mode, cfg.max_side, cfg.node_budget, false);
}

SearchOutcome dim2_pruned_search(const Graph& g, const VertexList& w, SearchMode mode,
                                 std::uint64_t node_budget) {
  if (w.size() != 2) throw InputError("two-anchor search needs exactly two anchors");
  return run_search(g, w, mode, 0, node_budget, true);
}

}  // namespace sdim
