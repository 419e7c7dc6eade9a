#include "sdim/threshold.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>

#include "sdim/constructions.hpp"
#include "sdim/dimension.hpp"
#include "sdim/distances.hpp"

namespace sdim {

std::string to_string(ThresholdStatus s) {
  switch (s) {
    case ThresholdStatus::exact: return "exact";
    case ThresholdStatus::lower_bound_only: return "lower_bound_only";
    case ThresholdStatus::bounds: return "bounds";
  }
  return "";
}

std::vector<VertexList> anchor_sets(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n) return {};
  long double count = 1;
  for (int i = 0; i < k; ++i) count = count * (n - i) / (i + 1);
  if (count > 2e7L) throw InputError("too many anchor sets to enumerate");
  auto d = all_pairs_distances(g);
  std::vector<std::pair<long, VertexList>> keyed;
  VertexList comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  for (;;) {
    long ecc = 0;
    for (Vertex v : comb) ecc += d.eccentricity(v);
    keyed.emplace_back(-ecc, comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<VertexList> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

namespace {

struct Candidate {
  int size = INT_MAX;
  VertexList w;
  std::optional<Embedding> embedding;
  std::string source;
};

// Certified witness for a known strong resolving set of a supergraph.
std::optional<Embedding> witness_from(const Graph& g, const Graph& h, const VertexList& w,
                                      ThresholdKind kind) {
  if (w.empty()) return std::nullopt;
  auto e = distance_vector_embedding(h, w);
  if (!std::holds_alternative<Embedding>(e)) return std::nullopt;
  Embedding emb = std::get<Embedding>(std::move(e));
  if (!is_w_resolved(emb, g)) return std::nullopt;
  if (kind == ThresholdKind::strong && !is_isometric_in_product(emb)) return std::nullopt;
  return emb;
}

void consider(Candidate& best, const Graph& g, const Graph& h, ThresholdKind kind,
              const std::string& source) {
  auto sd = strong_dimension(h);
  if (sd.value >= best.size) return;
  best.size = sd.value;
  best.w = sd.witness;
  best.embedding = witness_from(g, h, sd.witness, kind);
  best.source = source;
}

bool lex_less_image(const VertexList& w, const std::vector<Vertex>& sigma) {
  VertexList img;
  img.reserve(w.size());
  for (Vertex v : w) img.push_back(sigma[v]);
  std::sort(img.begin(), img.end());
  return img < w;
}

}  // namespace

ThresholdResult threshold_dimension(const Graph& g, ThresholdKind kind,
                                    const ThresholdOptions& opt) {
  require_connected(g);
  auto t0 = std::chrono::steady_clock::now();
  ThresholdResult res;
  const int n = g.order();
  if (n == 1) {
    res.status = ThresholdStatus::exact;
    res.witness_w = VertexList{};
    res.embedding = Embedding::blank(g, 0, 1, {});
    res.stats.upper_bound_source = "trivial";
    return res;
  }

  Candidate bound;
  if (opt.use_construction_bounds) {
    consider(bound, g, g, kind, "strong_dimension");
    if (is_tree(g)) consider(bound, g, tree_bound_supergraph(g).h, kind, "tree_bound");
    consider(bound, g, chromatic_bound_supergraph(g, greedy_coloring(g)).h, kind,
             "chromatic_bound");
  }

  const SearchMode mode =
      kind == ThresholdKind::strong ? SearchMode::strongly_resolved : SearchMode::resolved;
  PlacementSearchConfig cfg = opt.search;
  cfg.mode = mode;
  const int jobs = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();

  std::vector<std::vector<Vertex>> auts;
  if (cfg.symmetry_pruning) auts = automorphisms(g, 20000);
  res.stats.automorphisms = auts.empty() ? 1 : static_cast<int>(auts.size());

  int lo = 1;
  std::optional<int> found_k;
  for (int k = 1; k <= n; ++k) {
    if (opt.max_k > 0 && k > opt.max_k) break;
    // A certified construction witness of this size settles the question.
    if (bound.size <= k && bound.embedding) break;
    std::vector<VertexList> sets;
    for (auto& w : anchor_sets(g, k)) {
      bool skip = false;
      for (const auto& sigma : auts)
        if (lex_less_image(w, sigma)) {
          skip = true;
          break;
        }
      if (skip)
        ++res.stats.anchor_sets_skipped;
      else
        sets.push_back(std::move(w));
    }
    bool exhaustive = true;
    for (size_t start = 0; start < sets.size() && !found_k; start += jobs) {
      const size_t len = std::min(sets.size() - start, static_cast<size_t>(jobs));
      std::vector<SearchOutcome> out(len);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
      for (long i = 0; i < static_cast<long>(len); ++i) {
        const auto& w = sets[start + i];
        out[i] = (k == 2 && opt.dim2_pruning)
                     ? dim2_pruned_search(g, w, mode, cfg.node_budget)
                     : exists_supergraph_resolved_by(g, w, cfg);
      }
      for (size_t i = 0; i < len; ++i) {
        ++res.stats.anchor_sets_tried;
        res.stats.nodes += out[i].nodes;
        if (out[i].verdict == SearchVerdict::budget_exhausted) {
          ++res.stats.anchor_sets_exhausted;
          exhaustive = false;
        } else if (out[i].verdict == SearchVerdict::yes) {
          found_k = k;
          res.witness_w = sets[start + i];
          res.embedding = std::move(out[i].embedding);
          res.stats.upper_bound_source = "search";
          break;
        }
      }
    }
    if (found_k) break;
    // Supersets of a resolving set resolve, so refuting k refutes all smaller sizes.
    if (exhaustive) lo = k + 1;
  }

  if (found_k) {
    res.hi = *found_k;
  } else if (bound.size != INT_MAX) {
    res.hi = bound.size;
    res.witness_w = bound.w;
    res.embedding = bound.embedding;
    res.stats.upper_bound_source = bound.source;
  }
  res.lo = lo;
  const bool have_hi = found_k || bound.size != INT_MAX;
  if (have_hi && res.lo > res.hi) throw std::logic_error("refuted size exceeds a certified witness");
  if (!have_hi)
    res.status = ThresholdStatus::lower_bound_only;
  else if (res.lo == res.hi && res.embedding)
    res.status = ThresholdStatus::exact;
  else
    res.status = ThresholdStatus::bounds;
  res.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

GapRow tau_gap_experiment(int n, const ThresholdOptions& opt) {
  GapRow row;
  row.n = n;
  Graph g = gn_family(n);
  row.order = g.order();
  row.diameter = all_pairs_distances(g).diameter();
  row.tau = threshold_dimension(g, ThresholdKind::metric, opt);
  row.tau_s = threshold_dimension(g, ThresholdKind::strong, opt);
  return row;
}

}  // namespace sdim
