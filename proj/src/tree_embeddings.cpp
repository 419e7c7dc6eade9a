#include <algorithm>
#include <string>

#include "sdim/constructions.hpp"
#include "sdim/distances.hpp"

namespace sdim {

namespace {

std::string nm(char c, int i) { return std::string(1, c) + std::to_string(i); }

void add_path(GraphBuilder& b, char c, int len) {
  for (int i = 1; i <= len; ++i) b.add_vertex(nm(c, i));
  for (int i = 1; i < len; ++i) b.add_edge(nm(c, i), nm(c, i + 1));
}

void build_four_leaf(GraphBuilder& b, const FourLeafTreeParams& p) {
  add_path(b, 'v', p.k1);
  add_path(b, 'u', p.k2);
  add_path(b, 'x', p.k3);
  add_path(b, 'y', p.k4);
  add_path(b, 'z', p.k5);
  b.add_edge("v1", "y1");
  b.add_edge("v1", "z1");
  b.add_edge(nm('v', p.k1), "u1");
  b.add_edge(nm('v', p.k1), "x1");
}

// Places the four-leaf tree on the two diagonals x+y = k and x+y = k+1.
void place_four_leaf(const Graph& g, Embedding& e, const FourLeafTreeParams& p) {
  const int k = (p.k1 + 2) / 2 + p.k2 + p.k4 - 1;
  std::vector<std::string> first, second;
  for (int i = p.k4; i >= 1; --i) first.push_back(nm('y', i));
  for (int i = 1; i <= p.k1; i += 2) first.push_back(nm('v', i));
  if (p.k1 % 2 == 0) first.push_back(nm('v', p.k1));
  for (int i = 1; i <= p.k2; ++i) first.push_back(nm('u', i));
  for (int i = p.k5; i >= 1; --i) second.push_back(nm('z', i));
  const int last_even = p.k1 % 2 == 1 ? p.k1 - 1 : p.k1 - 2;
  for (int i = 2; i <= last_even; i += 2) second.push_back(nm('v', i));
  for (int i = 1; i <= p.k3; ++i) second.push_back(nm('x', i));
  for (size_t j = 0; j < first.size(); ++j) {
    int x = static_cast<int>(j);
    e.set(g.index_of(first[j]), {x, k - x});
  }
  const int x0 = p.k4 - p.k5 + 1;
  for (size_t j = 0; j < second.size(); ++j) {
    int x = x0 + static_cast<int>(j);
    e.set(g.index_of(second[j]), {x, k + 1 - x});
  }
}

void fit_side(const Graph& g, Embedding& e) {
  e.side = std::max(all_pairs_distances(g).diameter() + 1, e.max_coordinate() + 1);
}

}  // namespace

void validate(const FourLeafTreeParams& p) {
  if (std::min({p.k1, p.k2, p.k3, p.k4, p.k5}) < 1)
    throw InputError("tree segment lengths must be at least 1");
}

void validate(const FiveLeafTreeParams& p) {
  validate(p.base());
  if (p.k6 < 1 || p.k7 < 1) throw InputError("tree segment lengths must be at least 1");
  if (p.k7 > p.k1) throw InputError("attachment index k7 must not exceed k1");
}

Graph four_leaf_tree(const FourLeafTreeParams& p) {
  validate(p);
  GraphBuilder b;
  build_four_leaf(b, p);
  return b.build();
}

Graph five_leaf_tree(const FiveLeafTreeParams& p) {
  validate(p);
  GraphBuilder b;
  build_four_leaf(b, p.base());
  add_path(b, 't', p.k6);
  b.add_edge(nm('v', p.k7), "t1");
  return b.build();
}

EmbeddedGraph tree_dim3_embedding(const FourLeafTreeParams& p) {
  validate(p);
  if (!p.normalized()) throw InputError("parameters must satisfy k2 >= k3 and k4 >= k5");
  Graph g = four_leaf_tree(p);
  Embedding e = Embedding::blank(g, 2, 1, {g.index_of(nm('y', p.k4)), g.index_of(nm('u', p.k2))});
  place_four_leaf(g, e, p);
  fit_side(g, e);
  return {std::move(g), std::move(e)};
}

EmbeddedGraph tree_dim4_embedding(const FiveLeafTreeParams& p) {
  validate(p);
  if (!p.normalized()) throw InputError("parameters must satisfy k2 >= k3 and k4 >= k5");
  Graph g = five_leaf_tree(p);
  Embedding e = Embedding::blank(g, 2, 1, {g.index_of(nm('y', p.k4)), g.index_of(nm('u', p.k2))});
  place_four_leaf(g, e, p.base());
  auto base = e.point(g.index_of(nm('v', p.k7)));
  const int bx = base[0], by = base[1];
  for (int j = 1; j <= p.k6; ++j) e.set(g.index_of(nm('t', j)), {bx + j, by + j});
  fit_side(g, e);
  return {std::move(g), std::move(e)};
}

namespace {

// Length of the pendant path entering at `start` from `from`, or -1 if the
// branch is not a path.
int leg_length(const Graph& t, Vertex from, Vertex start) {
  int len = 1;
  Vertex prev = from, cur = start;
  while (t.degree(cur) == 2) {
    Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
    prev = cur;
    cur = next;
    ++len;
  }
  return t.degree(cur) == 1 ? len : -1;
}

std::vector<Vertex> tree_path(const Graph& t, Vertex a, Vertex b) {
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<Vertex> queue{a};
  parent[a] = a;
  for (size_t h = 0; h < queue.size(); ++h)
    for (Vertex v : t.neighbors(queue[h]))
      if (parent[v] < 0) {
        parent[v] = queue[h];
        queue.push_back(v);
      }
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

TreeParams canonical_tree_params(const Graph& t) {
  if (!is_tree(t)) throw InputError("graph is not a tree");
  const int leaf_count = static_cast<int>(leaves(t).size());
  if (leaf_count != 4 && leaf_count != 5) return NotApplicable{};

  std::optional<FourLeafTreeParams> best4;
  std::optional<FiveLeafTreeParams> best5;
  for (Vertex p = 0; p < t.order(); ++p) {
    if (t.degree(p) < 3) continue;
    for (Vertex q = 0; q < t.order(); ++q) {
      if (t.degree(q) < 3) continue;
      auto path = tree_path(t, p, q);
      const int k1 = static_cast<int>(path.size());
      std::vector<char> on_path(t.order(), 0);
      for (Vertex v : path) on_path[v] = 1;
      // Legs hanging at each spine position.
      std::vector<std::vector<int>> legs(k1);
      bool ok = true;
      for (int i = 0; i < k1 && ok; ++i)
        for (Vertex nb : t.neighbors(path[i])) {
          if (on_path[nb]) continue;
          int len = leg_length(t, path[i], nb);
          if (len < 0) {
            ok = false;
            break;
          }
          legs[i].push_back(len);
        }
      if (!ok) continue;
      int total = 0;
      for (auto& l : legs) total += static_cast<int>(l.size());
      if (total != leaf_count) continue;

      // Choose which leg (if any) is the extra t-path, then assign the rest.
      struct Choice {
        int pos;   // spine index of the t-path, -1 for none
        int slot;  // index within legs[pos]
      };
      std::vector<Choice> choices;
      if (leaf_count == 4) {
        choices.push_back({-1, -1});
      } else {
        for (int i = 0; i < k1; ++i)
          for (int s = 0; s < static_cast<int>(legs[i].size()); ++s) choices.push_back({i, s});
      }
      for (auto ch : choices) {
        auto rest = legs;
        int k6 = 0;
        if (ch.pos >= 0) {
          k6 = rest[ch.pos][ch.slot];
          rest[ch.pos].erase(rest[ch.pos].begin() + ch.slot);
        }
        std::vector<int> at_first, at_last;
        bool shape = true;
        if (k1 == 1) {
          at_first = rest[0];
          if (at_first.size() != 4) shape = false;
        } else {
          at_first = rest[0];
          at_last = rest[k1 - 1];
          for (int i = 1; i + 1 < k1; ++i) shape = shape && rest[i].empty();
          shape = shape && at_first.size() == 2 && at_last.size() == 2;
        }
        if (!shape) continue;
        std::vector<int> all = at_first;
        all.insert(all.end(), at_last.begin(), at_last.end());
        // all = {y,z | u,x} candidates; try every split consistent with the spine.
        std::vector<int> idx{0, 1, 2, 3};
        do {
          if (k1 > 1 && (idx[0] > 1 || idx[1] > 1)) continue;  // y,z from the first vertex
          FourLeafTreeParams f{k1, all[idx[2]], all[idx[3]], all[idx[0]], all[idx[1]]};
          if (!f.normalized()) continue;
          if (leaf_count == 4) {
            if (!best4 || f > *best4) best4 = f;
          } else {
            FiveLeafTreeParams v{f.k1, f.k2, f.k3, f.k4, f.k5, k6, ch.pos + 1};
            if (!best5 || v > *best5) best5 = v;
          }
        } while (std::next_permutation(idx.begin(), idx.end()));
      }
    }
  }
  if (best4) return *best4;
  if (best5) return *best5;
  return NotApplicable{};
}

}  // namespace sdim
