#include "sdim/dimension.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "sdim/vertex_cover.hpp"

namespace sdim {

std::string to_string(DimensionMode m) {
  return m == DimensionMode::metric ? "metric" : "strong";
}

std::string to_string(DimensionMethod m) {
  return m == DimensionMethod::reduction ? "reduction" : "brute_force";
}

namespace {

void check_pair(Vertex u, Vertex v, int n) {
  if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("vertex index out of range");
  if (u == v) throw InputError("pair must consist of two distinct vertices");
}

DistanceMatrix connected_distances(const Graph& g) {
  require_connected(g);
  return all_pairs_distances(g);
}

bool resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
  return d(u, w) != d(v, w);
}

bool strongly(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
  return d(u, w) == d(u, v) + d(v, w) || d(v, w) == d(v, u) + d(u, w);
}

using Mask = std::uint64_t;

// For each unordered pair, the set of vertices resolving it.
std::vector<Mask> pair_masks(const DistanceMatrix& d, DimensionMode mode) {
  const int n = d.order();
  std::vector<Mask> masks;
  masks.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      Mask m = 0;
      for (Vertex w = 0; w < n; ++w) {
        bool ok = mode == DimensionMode::strong ? strongly(d, w, u, v) : resolves(d, w, u, v);
        if (ok) m |= Mask{1} << w;
      }
      masks.push_back(m);
    }
  return masks;
}

bool covers_all(const std::vector<Mask>& masks, Mask set) {
  for (Mask m : masks)
    if ((m & set) == 0) return false;
  return true;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

// k-combination of {0..n-1} with lexicographic rank r.
std::vector<int> unrank(int n, int k, std::uint64_t r) {
  std::vector<int> comb(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    for (;;) {
      std::uint64_t c = binomial(n - 1 - x, k - 1 - i);
      if (c > r) break;
      r -= c;
      ++x;
    }
    comb[i] = x++;
  }
  return comb;
}

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

Mask to_mask(const std::vector<int>& comb) {
  Mask m = 0;
  for (int v : comb) m |= Mask{1} << v;
  return m;
}

void check_brute_force_size(const Graph& g) {
  if (g.order() > 64) throw InputError("brute-force dimension supports at most 64 vertices");
}

}  // namespace

bool is_mmd(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  check_pair(u, v, g.order());
  if (!d.connected()) require_connected(g);
  const int duv = d(u, v);
  for (Vertex x : g.neighbors(v))
    if (d(u, x) > duv) return false;
  for (Vertex y : g.neighbors(u))
    if (d(v, y) > duv) return false;
  return true;
}

StrongResolvingGraph strong_resolving_graph(const Graph& g) {
  auto d = connected_distances(g);
  GraphBuilder b;
  for (const auto& l : g.labels()) b.add_vertex(l);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (is_mmd(g, d, u, v)) b.add_edge(u, v);
  return {g, b.build()};
}

bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
  check_pair(u, v, d.order());
  if (w < 0 || w >= d.order()) throw InputError("vertex index out of range");
  return strongly(d, w, u, v);
}

bool is_strong_resolving_set(const DistanceMatrix& d, const VertexList& w) {
  const int n = d.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool ok = false;
      for (Vertex x : w)
        if (strongly(d, x, u, v)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

bool is_resolving_set(const DistanceMatrix& d, const VertexList& w) {
  const int n = d.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool ok = false;
      for (Vertex x : w)
        if (resolves(d, x, u, v)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

bool is_strong_resolving_set(const Graph& g, const VertexList& w) {
  auto d = connected_distances(g);
  return is_strong_resolving_set(d, normalize_set(g, w));
}

bool is_resolving_set(const Graph& g, const VertexList& w) {
  auto d = connected_distances(g);
  return is_resolving_set(d, normalize_set(g, w));
}

DimensionResult strong_dimension(const Graph& g) {
  auto srg = strong_resolving_graph(g);
  auto cover = min_vertex_cover(srg.sr);
  DimensionResult r{cover.size, cover.cover, DimensionMethod::reduction};
  if (!is_strong_resolving_set(all_pairs_distances(g), r.witness))
    throw std::logic_error("vertex cover of the strong resolving graph failed to resolve");
  return r;
}

DimensionResult brute_force_dimension(const Graph& g, DimensionMode mode) {
  check_brute_force_size(g);
  auto d = connected_distances(g);
  const int n = g.order();
  auto masks = pair_masks(d, mode);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  constexpr std::uint64_t kBlock = 1 << 14;
  constexpr std::uint64_t kChunk = 256;
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t total = binomial(n, k);
    for (std::uint64_t start = 0; start < total; start += kBlock) {
      const std::uint64_t end = std::min(total, start + kBlock);
      const std::int64_t chunks = static_cast<std::int64_t>((end - start + kChunk - 1) / kChunk);
      std::uint64_t found = kNone;
#pragma omp parallel for schedule(dynamic) reduction(min : found)
      for (std::int64_t c = 0; c < chunks; ++c) {
        std::uint64_t r0 = start + static_cast<std::uint64_t>(c) * kChunk;
        std::uint64_t r1 = std::min(end, r0 + kChunk);
        auto comb = unrank(n, k, r0);
        for (std::uint64_t r = r0; r < r1 && r < found; ++r) {
          if (covers_all(masks, to_mask(comb))) {
            found = r;
            break;
          }
          next_combination(comb, n);
        }
      }
      if (found != kNone) {
        auto comb = unrank(n, k, found);
        return {k, VertexList(comb.begin(), comb.end()), DimensionMethod::brute_force};
      }
    }
  }
  throw std::logic_error("no resolving set found");
}

namespace serial {

DimensionResult brute_force_dimension(const Graph& g, DimensionMode mode) {
  check_brute_force_size(g);
  auto d = connected_distances(g);
  const int n = g.order();
  auto masks = pair_masks(d, mode);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      if (covers_all(masks, to_mask(comb)))
        return {k, VertexList(comb.begin(), comb.end()), DimensionMethod::brute_force};
    } while (next_combination(comb, n));
  }
  throw std::logic_error("no resolving set found");
}

}  // namespace serial

}  // namespace sdim
