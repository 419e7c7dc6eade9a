#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdim/embedding.hpp"
#include "sdim/graph.hpp"

namespace sdim {

enum class SearchMode { resolved, strongly_resolved };
enum class SearchVerdict { yes, no, budget_exhausted };

std::string to_string(SearchMode m);
std::string to_string(SearchVerdict v);

struct PlacementSearchConfig {
  SearchMode mode = SearchMode::strongly_resolved;
  int max_side = 0;  // 0 means diam(G)+1; larger values are clamped to it
  std::uint64_t node_budget = 20'000'000;  // per anchor set
  bool symmetry_pruning = true;
  int jobs = 0;  // threads for anchor-set fan-out; 0 = OpenMP default
};

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::no;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

// Searches placements of g into {0..side-1}^k whose induced graph is
// resolved (or strongly resolved) by w. "no" means the search was exhaustive.
SearchOutcome exists_supergraph_resolved_by(const Graph& g, const VertexList& w,
                                            const PlacementSearchConfig& cfg);

// Two-anchor search with extra propagation: anchor degree cap, the forced
// anchor-to-anchor diagonal, per-level capacity and cell-degree capacity.
SearchOutcome dim2_pruned_search(const Graph& g, const VertexList& w, SearchMode mode,
                                 std::uint64_t node_budget = 20'000'000);

enum class ThresholdStatus { exact, lower_bound_only, bounds };
std::string to_string(ThresholdStatus s);

struct ThresholdStats {
  std::uint64_t nodes = 0;
  std::uint64_t anchor_sets_tried = 0;
  std::uint64_t anchor_sets_skipped = 0;  // by automorphism pruning
  std::uint64_t anchor_sets_exhausted = 0;
  int automorphisms = 1;
  double wall_ms = 0;
  std::string upper_bound_source;  // "search", "strong_dimension", ...
};

struct ThresholdResult {
  ThresholdStatus status = ThresholdStatus::exact;
  int lo = 0;
  int hi = 0;  // valid unless status is lower_bound_only
  std::optional<VertexList> witness_w;
  std::optional<Embedding> embedding;
  ThresholdStats stats;
};

enum class ThresholdKind { metric, strong };

struct ThresholdOptions {
  PlacementSearchConfig search;
  int max_k = 0;  // 0: no limit
  // Use strong dimension and the constructive bounds for hi.
  bool use_construction_bounds = true;
  // Use the two-anchor pruned search for k = 2.
  bool dim2_pruning = true;
};

ThresholdResult threshold_dimension(const Graph& g, ThresholdKind kind,
                                    const ThresholdOptions& opt = {});

// Anchor sets of size k in search order: eccentricity sum descending,
// then lexicographic.
std::vector<VertexList> anchor_sets(const Graph& g, int k);

// Automorphisms by refinement and backtracking; empty when more than
// limit exist.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit);

struct GapRow {
  int n = 0;
  int order = 0;
  int diameter = 0;
  ThresholdResult tau;
  ThresholdResult tau_s;
};

GapRow tau_gap_experiment(int n, const ThresholdOptions& opt);

}  // namespace sdim
