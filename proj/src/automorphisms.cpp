#include <algorithm>
#include <map>

#include "sdim/distances.hpp"
#include "sdim/threshold.hpp"

namespace sdim {

namespace {

struct AutSearch {
  const Graph& g;
  const DistanceMatrix& d;
  std::vector<int> cls;
  std::size_t limit;
  std::vector<Vertex> image;
  std::vector<char> used;
  std::vector<std::vector<Vertex>> found;
  bool overflow = false;

  void run(Vertex v) {
    if (overflow) return;
    const int n = g.order();
    if (v == n) {
      if (found.size() >= limit) {
        overflow = true;
        return;
      }
      found.push_back(image);
      return;
    }
    for (Vertex c = 0; c < n && !overflow; ++c) {
      if (used[c] || cls[c] != cls[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = d(u, v) == d(image[u], c);
      if (!ok) continue;
      image[v] = c;
      used[c] = 1;
      run(v + 1);
      used[c] = 0;
    }
  }
};

}  // namespace

std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit) {
  const int n = g.order();
  auto d = all_pairs_distances(g);
  // Vertices can only map to vertices with the same sorted distance profile.
  std::map<std::vector<int>, int> ids;
  std::vector<int> cls(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> profile(d.row(v), d.row(v) + n);
    std::sort(profile.begin(), profile.end());
    cls[v] = ids.emplace(profile, static_cast<int>(ids.size())).first->second;
  }
  AutSearch s{g, d, cls, limit, std::vector<Vertex>(n, -1), std::vector<char>(n, 0), {}, false};
  s.run(0);
  if (s.overflow) return {};
  return s.found;
}

}  // namespace sdim
