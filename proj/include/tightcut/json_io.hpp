#pragma once

#include <string>

#include <json.hpp>

#include "tightcut/graph.hpp"

namespace tightcut {

/// Multigraph JSON: {"n": int, "edges": [[u,v], ...], "labels": {"0": "x"}}
/// with 0-based vertex ids.  On output, surviving vertex ids are packed to
/// 0..n-1 in increasing order so a graph that went through deletions or
/// contractions still serializes densely.
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

}  // namespace tightcut
