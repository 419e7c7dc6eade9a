#pragma once

#include <json.hpp>

#include "sdim/dimension.hpp"
#include "sdim/embedding.hpp"
#include "sdim/threshold.hpp"
#include "sdim/vertex_cover.hpp"

namespace sdim {

using Json = nlohmann::ordered_json;

Json to_json(const Embedding& e);
// Placement keys must be exactly the labels of g.
Embedding embedding_from_json(const Json& j, const Graph& g);

Json to_json(const Graph& g, const DimensionResult& r, DimensionMode mode);
Json to_json(const Graph& g, const CoverResult& r);
Json to_json(const Verdict& v);
// Wall time is omitted unless asked for, so output stays reproducible.
Json to_json(const Graph& g, const ThresholdResult& r, ThresholdKind kind, bool timing = false);

}  // namespace sdim
