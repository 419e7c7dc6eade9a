#include <array>
#include <string>

#include "sdim/constructions.hpp"

namespace sdim {

namespace {

struct GadgetVertex {
  const char* name;
  int x;  // distance to w1
  int y;  // distance to w2
};

constexpr std::array<GadgetVertex, 23> kGadget{{
    {"w1", 0, 5}, {"a1", 1, 4}, {"a2", 1, 5}, {"a3", 1, 6}, {"b1", 2, 3}, {"b2", 2, 4},
    {"b3", 2, 5}, {"b4", 2, 6}, {"c1", 3, 2}, {"c2", 3, 3}, {"c3", 3, 4}, {"c4", 3, 5},
    {"c5", 3, 6}, {"d1", 4, 1}, {"d2", 4, 2}, {"d3", 4, 3}, {"e1", 5, 1}, {"e2", 5, 2},
    {"e3", 5, 3}, {"w2", 5, 0}, {"f1", 6, 1}, {"f2", 6, 2}, {"f3", 6, 3},
}};

constexpr std::array<std::array<const char*, 2>, 60> kGadgetEdges{{
    {"w1", "a1"}, {"a1", "b1"}, {"b1", "c1"}, {"c1", "d1"}, {"a2", "b2"}, {"b2", "c2"},
    {"c2", "d2"}, {"d2", "e1"}, {"b3", "c3"}, {"c3", "d3"}, {"d3", "e2"}, {"e2", "f1"},
    {"a3", "b3"}, {"b4", "c4"}, {"e3", "f2"}, {"d1", "w2"}, {"a3", "b4"}, {"b4", "c5"},
    {"w1", "a2"}, {"a2", "b3"}, {"b3", "c4"}, {"a1", "b2"}, {"b2", "c3"}, {"b1", "c2"},
    {"c2", "d3"}, {"d3", "e3"}, {"e3", "f3"}, {"c1", "d2"}, {"d2", "e2"}, {"e2", "f2"},
    {"d1", "e1"}, {"e1", "f1"}, {"a3", "a2"}, {"a2", "a1"}, {"b4", "b3"}, {"b3", "b2"},
    {"b2", "b1"}, {"c5", "c4"}, {"c4", "c3"}, {"c3", "c2"}, {"c2", "c1"}, {"d3", "d2"},
    {"d2", "d1"}, {"e3", "e2"}, {"e2", "e1"}, {"e1", "w2"}, {"f3", "f2"}, {"f2", "f1"},
    {"w1", "a3"}, {"a2", "b4"}, {"a1", "b3"}, {"b3", "c5"}, {"b2", "c4"}, {"b1", "c3"},
    {"c1", "d3"}, {"d2", "e3"}, {"d1", "e2"}, {"e2", "f3"}, {"e1", "f2"}, {"w2", "f1"},
}};

}  // namespace

Graph gn_family(int n) {
  if (n < 1) throw InputError("gadget chain needs n >= 1");
  GraphBuilder b;
  auto name = [n](const std::string& base, int copy) {
    return n == 1 ? base : base + "_" + std::to_string(copy);
  };
  // Later copies reuse the earlier copy's labels for identified vertices.
  auto resolve = [&](const std::string& base, int copy) {
    if (copy > 1 && base == "w1") return name("w2", copy - 1);
    if (copy > 1 && base == "a3") return name("f1", copy - 1);
    return name(base, copy);
  };
  for (int c = 1; c <= n; ++c) {
    for (const auto& v : kGadget) b.add_vertex(resolve(v.name, c));
    for (const auto& [u, v] : kGadgetEdges) b.add_edge(resolve(u, c), resolve(v, c));
    if (c > 1) {
      b.add_edge(name("f2", c - 1), name("b4", c));
      b.add_edge(name("e1", c - 1), name("a2", c));
    }
  }
  return b.build();
}

Embedding gadget_grid_embedding() {
  Graph g = gn_family(1);
  Embedding e = Embedding::blank(g, 2, 7, {g.index_of("w1"), g.index_of("w2")});
  for (const auto& v : kGadget) e.set(g.index_of(v.name), {v.x, v.y});
  return e;
}

EmbeddedGraph cycle_embedding(int n) {
  if (n < 4) throw InputError("cycle embedding needs n >= 4");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  Graph g = b.build();
  const bool odd = n % 2 == 1;
  const int m = odd ? (n - 1) / 2 : (n - 2) / 2;
  const int side = odd ? m + 1 : m + 2;
  Embedding e = Embedding::blank(g, 2, side, {0, m});
  // Vertices 0..m on the anchor diagonal, the rest back along the next one.
  for (int i = 0; i <= m; ++i) e.set(i, {i, m - i});
  for (int j = 1; j <= m; ++j) e.set(m + j, {m + 1 - j, j});
  if (!odd) e.set(n - 1, {1, m + 1});
  return {std::move(g), std::move(e)};
}

EmbeddedGraph l3n_family(int n) {
  if (n < 2) throw InputError("L3n needs n >= 2");
  GraphBuilder b;
  for (int i = 1; i <= n; ++i) {
    auto s = std::to_string(i);
    b.add_vertex("v" + s);
  }
  for (int i = 1; i <= n; ++i) {
    auto s = std::to_string(i);
    b.add_edge("u" + s, "v" + s);
    b.add_edge("w" + s, "v" + s);
    if (i < n) b.add_edge("v" + s, "v" + std::to_string(i + 1));
  }
  Graph g = b.build();
  Embedding e = Embedding::blank(g, 2, n + 1, {g.index_of("u1"), g.index_of("w1")});
  for (int i = 1; i <= n; ++i) {
    auto s = std::to_string(i);
    e.set(g.index_of("v" + s), {i, i});
    e.set(g.index_of("u" + s), {i - 1, i});
    e.set(g.index_of("w" + s), {i, i - 1});
  }
  return {std::move(g), std::move(e)};
}

}  // namespace sdim
