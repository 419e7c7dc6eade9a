#include <algorithm>
#include <set>
#include <string>

#include "sdim/constructions.hpp"
#include "sdim/dimension.hpp"

namespace sdim {

namespace {

using Point = std::pair<int, int>;

std::string cell_label(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string leaf_label(int x, int y) { return "leaf@" + cell_label(x, y); }

// Lattice points on or inside a convex polygon given counter-clockwise or
// clockwise; repeated corners are ignored.
std::vector<Point> lattice_region(std::vector<Point> poly) {
  poly.erase(std::unique(poly.begin(), poly.end()), poly.end());
  while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
  int xmax = 0, ymax = 0;
  for (auto [x, y] : poly) {
    xmax = std::max(xmax, x);
    ymax = std::max(ymax, y);
  }
  // Orientation from the signed area.
  long area = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    auto [x1, y1] = poly[i];
    auto [x2, y2] = poly[(i + 1) % poly.size()];
    area += static_cast<long>(x1) * y2 - static_cast<long>(x2) * y1;
  }
  const int sign = area >= 0 ? 1 : -1;
  std::vector<Point> out;
  for (int x = 0; x <= xmax; ++x)
    for (int y = 0; y <= ymax; ++y) {
      bool inside = true;
      for (size_t i = 0; i < poly.size() && inside; ++i) {
        auto [x1, y1] = poly[i];
        auto [x2, y2] = poly[(i + 1) % poly.size()];
        long cross = static_cast<long>(x2 - x1) * (y - y1) - static_cast<long>(y2 - y1) * (x - x1);
        inside = sign * cross >= 0;
      }
      if (inside) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace

void validate(const StarPairSpec& s) {
  if (s.type < 1 || s.type > 4) throw InputError("type must be 1, 2, 3 or 4");
  if (s.m < 1 || s.m > s.n) throw InputError("star sizes must satisfy 1 <= m <= n");
}

Graph type_graph(const StarPairSpec& spec) {
  validate(spec);
  const int m = spec.m, n = spec.n;
  const bool same = (n - m) % 2 == 0;
  std::vector<Point> poly;
  if (same) {
    const int s = (n - m) / 2;
    poly = {{0, n}, {s + 1, n + s + 1}, {(n + m) / 2, n + s + 1}, {n + 1, n}, {n + 1, 1}, {n, 0}};
  } else {
    const int top = (3 * n - m + 1) / 2;
    poly = {{0, n}, {(n - m + 1) / 2, top}, {(n + m - 1) / 2, top}, {n, n}, {n, 0}};
  }
  auto pts = lattice_region(poly);
  std::vector<std::string> labels;
  for (auto [x, y] : pts) labels.push_back(cell_label(x, y));

  GraphBuilder b;
  for (const auto& l : labels) b.add_vertex(l);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (std::abs(pts[i].first - pts[j].first) <= 1 && std::abs(pts[i].second - pts[j].second) <= 1)
        b.add_edge(labels[i], labels[j]);

  if (spec.type >= 3) {
    Point corner;
    std::vector<Point> attach;
    if (same) {
      const int cx = (n + m + 2) / 2, cy = (3 * n - m + 2) / 2;
      corner = {cx, cy};
      attach = {{cx - 1, cy}, {cx, cy - 1}, {cx - 1, cy - 1}};
    } else {
      const int cx = (n + m + 1) / 2, cy = (3 * n - m + 1) / 2;
      corner = {cx, cy};
      attach = {{cx - 1, cy}, {cx, cy - 1}, {cx - 1, cy - 1}};
    }
    for (auto [x, y] : attach) {
      if (!std::binary_search(pts.begin(), pts.end(), Point{x, y}))
        throw std::logic_error("corner attachment point missing from region");
      b.add_edge(cell_label(corner.first, corner.second), cell_label(x, y));
    }
  }
  const bool left_leaf = spec.type == 2 || spec.type == 4;
  const bool right_leaf = spec.type == 4 || (spec.type == 2 && same);
  if (left_leaf) b.add_edge(leaf_label(0, n), cell_label(0, n));
  if (right_leaf) b.add_edge(leaf_label(n, 0), cell_label(n, 0));
  return b.build();
}

TypeCheck verify_type_sr(const Graph& g, const StarPairSpec& spec) {
  validate(spec);
  if (!is_connected(g)) return {false, "graph is disconnected"};
  auto srg = strong_resolving_graph(g);
  const Graph& r = srg.sr;
  std::vector<Vertex> active;
  for (Vertex v = 0; v < r.order(); ++v)
    if (r.degree(v) > 0) active.push_back(v);
  const bool centre_edge = spec.type == 2 || spec.type == 4;
  const bool extra = spec.type >= 3;
  const int want_vertices = spec.m + spec.n + 2 + (extra ? 1 : 0);
  const int want_edges = spec.m + spec.n + (centre_edge ? 1 : 0) + (extra ? 2 : 0);
  if (static_cast<int>(active.size()) != want_vertices || r.size() != want_edges)
    return {false, "strong resolving graph has " + std::to_string(active.size()) +
                       " non-isolated vertices and " + std::to_string(r.size()) +
                       " edges; expected " + std::to_string(want_vertices) + " and " +
                       std::to_string(want_edges)};

  auto try_centres = [&](Vertex c1, Vertex c2, Vertex v) {
    if (r.adjacent(c1, c2) != centre_edge) return false;
    if (v >= 0) {
      if (r.degree(v) != 2 || !r.adjacent(v, c1) || !r.adjacent(v, c2)) return false;
    }
    std::set<Vertex> l1, l2;
    for (Vertex x : r.neighbors(c1))
      if (x != c2 && x != v) l1.insert(x);
    for (Vertex x : r.neighbors(c2))
      if (x != c1 && x != v) l2.insert(x);
    if (static_cast<int>(l1.size()) != spec.m || static_cast<int>(l2.size()) != spec.n) return false;
    for (Vertex x : l1)
      if (l2.count(x) || r.degree(x) != 1) return false;
    for (Vertex x : l2)
      if (r.degree(x) != 1) return false;
    return true;
  };

  for (Vertex c1 : active)
    for (Vertex c2 : active) {
      if (c1 == c2) continue;
      if (!extra) {
        if (try_centres(c1, c2, -1)) return {true, ""};
        continue;
      }
      for (Vertex v : active)
        if (v != c1 && v != c2 && try_centres(c1, c2, v)) return {true, ""};
    }
  return {false, "no choice of centres matches the two-star pattern"};
}

}  // namespace sdim
