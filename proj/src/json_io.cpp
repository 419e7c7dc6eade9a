#include "sdim/json_io.hpp"

#include <set>

namespace sdim {

Json to_json(const Embedding& e) {
  Json j;
  j["k"] = e.k;
  j["side"] = e.side;
  Json anchors = Json::array();
  for (Vertex a : e.anchors) anchors.push_back(e.labels.at(a));
  j["anchors"] = anchors;
  Json placement = Json::object();
  for (Vertex v = 0; v < e.order(); ++v) {
    auto p = e.point(v);
    placement[e.labels[v]] = std::vector<int>(p.begin(), p.end());
  }
  j["placement"] = placement;
  return j;
}

Embedding embedding_from_json(const Json& j, const Graph& g) {
  try {
    Embedding e;
    e.k = j.at("k").get<int>();
    e.side = j.at("side").get<int>();
    if (e.k < 0 || e.side < 1) throw InputError("embedding needs k >= 0 and side >= 1");
    e.labels = g.labels();
    for (const auto& a : j.at("anchors")) e.anchors.push_back(g.index_of(a.get<std::string>()));
    const auto& placement = j.at("placement");
    if (!placement.is_object()) throw InputError("placement must be an object");
    e.coords.assign(static_cast<size_t>(g.order()) * e.k, 0);
    std::set<Vertex> seen;
    for (auto it = placement.begin(); it != placement.end(); ++it) {
      Vertex v = g.index_of(it.key());
      auto p = it.value().get<std::vector<int>>();
      if (static_cast<int>(p.size()) != e.k)
        throw InputError("point for " + it.key() + " has " + std::to_string(p.size()) +
                         " coordinates, expected " + std::to_string(e.k));
      std::copy(p.begin(), p.end(), e.point(v).begin());
      seen.insert(v);
    }
    if (static_cast<int>(seen.size()) != g.order())
      throw InputError("placement does not cover every vertex of the graph");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed embedding JSON: ") + ex.what());
  }
}

Json to_json(const Graph& g, const DimensionResult& r, DimensionMode mode) {
  Json j;
  j["mode"] = to_string(mode);
  j["value"] = r.value;
  j["witness"] = labels_of(g, r.witness);
  j["method"] = to_string(r.method);
  return j;
}

Json to_json(const Graph& g, const CoverResult& r) {
  Json j;
  j["size"] = r.size;
  j["cover"] = labels_of(g, r.cover);
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = v.ok;
  j["clause"] = v.ok ? Json(nullptr) : Json(v.clause);
  j["detail"] = v.ok ? Json(nullptr) : Json(v.detail);
  return j;
}

Json to_json(const Graph& g, const ThresholdResult& r, ThresholdKind kind, bool timing) {
  Json j;
  j["mode"] = kind == ThresholdKind::strong ? "strong" : "metric";
  j["status"] = to_string(r.status);
  if (r.status == ThresholdStatus::exact) {
    j["value"] = r.hi;
  } else {
    Json b;
    b["lo"] = r.lo;
    b["hi"] = r.status == ThresholdStatus::bounds ? Json(r.hi) : Json(nullptr);
    j["value"] = b;
  }
  j["witness_W"] = r.witness_w ? Json(labels_of(g, *r.witness_w)) : Json(nullptr);
  j["embedding"] = r.embedding ? to_json(*r.embedding) : Json(nullptr);
  Json s;
  s["nodes"] = r.stats.nodes;
  s["anchor_sets_tried"] = r.stats.anchor_sets_tried;
  s["anchor_sets_skipped"] = r.stats.anchor_sets_skipped;
  s["anchor_sets_exhausted"] = r.stats.anchor_sets_exhausted;
  s["automorphisms"] = r.stats.automorphisms;
  s["upper_bound_source"] = r.stats.upper_bound_source;
  if (timing) s["wall_ms"] = r.stats.wall_ms;
  j["stats"] = s;
  return j;
}

}  // namespace sdim
