#include <doctest.h>

#include "oracles.hpp"
#include "sdim/constructions.hpp"
#include "sdim/dimension.hpp"
#include "sdim/enumerate.hpp"
#include "sdim/generators.hpp"
#include "sdim/threshold.hpp"

using namespace sdim;

namespace {

PlacementSearchConfig config(SearchMode mode) {
  PlacementSearchConfig c;
  c.mode = mode;
  return c;
}

// Every yes answer must come with an embedding that certifies and whose
// induced graph is a supergraph resolved (strongly) by the anchors.
void check_witness(const Graph& g, const VertexList& w, const SearchOutcome& out, SearchMode mode) {
  REQUIRE(out.embedding);
  const Embedding& e = *out.embedding;
  REQUIRE(is_w_resolved(e, g));
  Graph h = induced_supergraph(e);
  for (auto [u, v] : g.edges()) REQUIRE(h.adjacent(u, v));
  auto d = oracle::floyd(h);
  if (mode == SearchMode::strongly_resolved) {
    REQUIRE(is_isometric_in_product(e));
    REQUIRE(oracle::strongly_resolves_all(d, w));
  } else {
    REQUIRE(oracle::resolves(d, w));
  }
}

}  // namespace

TEST_CASE("cycles embed with two anchors") {
  for (int n = 4; n <= 12; ++n) {
    auto [g, fixed] = cycle_embedding(n);
    auto out = exists_supergraph_resolved_by(g, fixed.anchors, config(SearchMode::strongly_resolved));
    REQUIRE(out.verdict == SearchVerdict::yes);
    check_witness(g, fixed.anchors, out, SearchMode::strongly_resolved);
    auto pruned = dim2_pruned_search(g, fixed.anchors, SearchMode::strongly_resolved);
    CHECK(pruned.verdict == SearchVerdict::yes);
  }
  Graph c5 = cycle_graph(5);
  CHECK(dim2_pruned_search(c5, {0, 2}, SearchMode::strongly_resolved).verdict == SearchVerdict::yes);
}

TEST_CASE("gadget: resolved by its anchors, never strongly") {
  Graph g = gn_family(1);
  VertexList w = indices_of(g, {"w1", "w2"});
  auto yes = exists_supergraph_resolved_by(g, w, config(SearchMode::resolved));
  REQUIRE(yes.verdict == SearchVerdict::yes);
  check_witness(g, w, yes, SearchMode::resolved);

  auto plain = exists_supergraph_resolved_by(g, w, config(SearchMode::strongly_resolved));
  auto pruned = dim2_pruned_search(g, w, SearchMode::strongly_resolved);
  CHECK(plain.verdict == SearchVerdict::no);
  CHECK(pruned.verdict == SearchVerdict::no);
  CHECK(pruned.nodes <= plain.nodes);
}

TEST_CASE("a high-degree anchor is refuted at once") {
  Graph s = star_graph(5);
  auto out = dim2_pruned_search(s, {0, 1}, SearchMode::resolved);
  CHECK(out.verdict == SearchVerdict::no);
  CHECK(out.nodes <= 1);
}

TEST_CASE("search agrees with supergraph enumeration on small graphs") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : all_labeled_connected_graphs(n))
      for (int k = 1; k <= 2 && k <= n; ++k)
        for (const auto& w : anchor_sets(g, k))
          for (SearchMode mode : {SearchMode::resolved, SearchMode::strongly_resolved}) {
            const bool strong = mode == SearchMode::strongly_resolved;
            const bool want = oracle::supergraph_exists(g, w, strong);
            auto out = exists_supergraph_resolved_by(g, w, config(mode));
            REQUIRE(out.verdict != SearchVerdict::budget_exhausted);
            REQUIRE((out.verdict == SearchVerdict::yes) == want);
            if (want) check_witness(g, w, out, mode);
            if (k == 2) REQUIRE((dim2_pruned_search(g, w, mode).verdict == SearchVerdict::yes) == want);
          }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  Graph g = gn_family(1);
  PlacementSearchConfig c = config(SearchMode::strongly_resolved);
  c.node_budget = 1;
  auto out = exists_supergraph_resolved_by(g, indices_of(g, {"w1", "a3", "b4"}), c);
  CHECK(out.verdict == SearchVerdict::budget_exhausted);
  CHECK_FALSE(out.embedding);
}

TEST_CASE("argument validation") {
  Graph p = path_graph(3);
  CHECK_THROWS_AS(exists_supergraph_resolved_by(p, {0, 0}, config(SearchMode::resolved)), InputError);
  CHECK_THROWS_AS(exists_supergraph_resolved_by(p, {5}, config(SearchMode::resolved)), InputError);
  CHECK_THROWS_AS(dim2_pruned_search(p, {0}, SearchMode::resolved), InputError);
  PlacementSearchConfig zero = config(SearchMode::resolved);
  zero.node_budget = 0;
  CHECK_THROWS_AS(exists_supergraph_resolved_by(p, {0}, zero), InputError);
  CHECK(exists_supergraph_resolved_by(path_graph(1), {}, config(SearchMode::resolved)).verdict ==
        SearchVerdict::yes);
  CHECK(exists_supergraph_resolved_by(p, {}, config(SearchMode::resolved)).verdict == SearchVerdict::no);
}

TEST_CASE("tree embeddings are found by search too") {
  auto [g, fixed] = tree_dim3_embedding({3, 4, 4, 4, 3});
  auto out = dim2_pruned_search(g, fixed.anchors, SearchMode::strongly_resolved);
  REQUIRE(out.verdict == SearchVerdict::yes);
  check_witness(g, fixed.anchors, out, SearchMode::strongly_resolved);
}
