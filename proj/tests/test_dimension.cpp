#include <doctest.h>

#include "oracles.hpp"
#include "sdim/dimension.hpp"
#include "sdim/generators.hpp"

using namespace sdim;

TEST_CASE("mutually maximally distant pairs") {
  Graph k4 = complete_graph(4);
  auto dk = all_pairs_distances(k4);
  CHECK(is_mmd(k4, dk, 0, 3));
  Graph p3 = path_graph(3);
  auto dp = all_pairs_distances(p3);
  CHECK(is_mmd(p3, dp, 0, 2));
  CHECK_FALSE(is_mmd(p3, dp, 0, 1));
  Graph c4 = cycle_graph(4);
  CHECK(is_mmd(c4, all_pairs_distances(c4), 0, 2));
}

TEST_CASE("strong resolving graphs of cliques, paths and trees") {
  for (int n = 2; n <= 6; ++n) CHECK(strong_resolving_graph(complete_graph(n)).sr.size() == n * (n - 1) / 2);
  for (int n = 2; n <= 8; ++n) {
    auto sr = strong_resolving_graph(path_graph(n)).sr;
    CHECK(sr.size() == 1);
    CHECK(sr.adjacent(0, n - 1));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph t = random_tree(15, seed);
    auto sr = strong_resolving_graph(t).sr;
    auto leaf = leaves(t);
    const int l = static_cast<int>(leaf.size());
    CHECK(sr.size() == l * (l - 1) / 2);
    for (Vertex a : leaf)
      for (Vertex b : leaf)
        if (a != b) CHECK(sr.adjacent(a, b));
  }
}

TEST_CASE("strong resolution of a single pair") {
  Graph p4 = path_graph(4);
  auto d = all_pairs_distances(p4);
  CHECK(strongly_resolves(d, 0, 1, 3));
  Graph c4 = cycle_graph(4);
  auto dc = all_pairs_distances(c4);
  CHECK_FALSE(strongly_resolves(dc, 0, 1, 3));
  CHECK(strongly_resolves(dc, 1, 1, 3));
}

TEST_CASE("resolving set checks") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(is_strong_resolving_set(path_graph(n), {0}));
    CHECK(is_resolving_set(path_graph(n), {0}));
  }
  CHECK_FALSE(is_strong_resolving_set(complete_graph(3), {0}));
  CHECK_FALSE(is_resolving_set(cycle_graph(4), {0}));
  Graph g = random_connected(9, 0.3, 2);
  VertexList all(g.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_strong_resolving_set(g, all));
}

TEST_CASE("strong resolving sets are resolving sets") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected(7, 0.3, trial);
    auto d = all_pairs_distances(g);
    for (std::uint32_t m = 0; m < (1u << 7); ++m) {
      VertexList w;
      for (int v = 0; v < 7; ++v)
        if ((m >> v) & 1u) w.push_back(v);
      if (is_strong_resolving_set(d, w)) REQUIRE(is_resolving_set(d, w));
    }
  }
}

TEST_CASE("strong dimension of standard families") {
  for (int n = 2; n <= 8; ++n) CHECK(strong_dimension(complete_graph(n)).value == n - 1);
  for (int n = 2; n <= 10; ++n) CHECK(strong_dimension(path_graph(n)).value == 1);
  for (int n = 4; n <= 10; ++n) {
    const int want = oracle::brute_dimension(cycle_graph(n), true);
    CHECK(want == (n + 1) / 2);
    CHECK(strong_dimension(cycle_graph(n)).value == want);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph t = random_tree(4 + seed % 20, seed);
    CHECK(strong_dimension(t).value == static_cast<int>(leaves(t).size()) - 1);
  }
}

TEST_CASE("brute force agrees with the reduction and with the oracle") {
  CHECK(brute_force_dimension(path_graph(7), DimensionMode::strong).value == 1);
  for (int n = 2; n <= 6; ++n) CHECK(brute_force_dimension(complete_graph(n), DimensionMode::metric).value == n - 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + seed % 7;
    Graph g = random_connected(n, 0.3, seed);
    auto red = strong_dimension(g);
    auto bf = brute_force_dimension(g, DimensionMode::strong);
    auto ser = serial::brute_force_dimension(g, DimensionMode::strong);
    REQUIRE(red.value == bf.value);
    REQUIRE(bf.value == ser.value);
    REQUIRE(bf.witness == ser.witness);
    REQUIRE(bf.value == oracle::brute_dimension(g, true));
    CHECK(is_strong_resolving_set(g, red.witness));
    auto met = brute_force_dimension(g, DimensionMode::metric);
    REQUIRE(met.value == oracle::brute_dimension(g, false));
    CHECK(met.value <= bf.value);
  }
}

TEST_CASE("disconnected input is rejected") {
  Graph g = parse_edge_list("a b\nc d\n");
  CHECK_THROWS_AS(strong_dimension(g), DisconnectedError);
  CHECK_THROWS_AS(brute_force_dimension(g, DimensionMode::metric), DisconnectedError);
}
