#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tightcut/graph.hpp"

namespace tightcut {

/// A named graph with machine-checkable expected property values.  The
/// facts double as the transcription check for the hand-entered
/// adjacencies: check_known_facts recomputes every one of them.
struct KnownFact {
    std::string key;
    nlohmann::json expected;
};

struct CatalogEntry {
    std::string name;
    Multigraph graph;
    std::string provenance;
    std::vector<KnownFact> facts;
};

const std::vector<std::string>& catalog_names();
CatalogEntry catalog(const std::string& name);  // unknown name is a domain error

struct FactCheck {
    std::string key;
    nlohmann::json expected;
    nlohmann::json actual;
    bool ok = false;
};

std::vector<FactCheck> check_known_facts(const CatalogEntry& entry);

}  // namespace tightcut
