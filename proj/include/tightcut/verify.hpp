#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tightcut/bricks.hpp"
#include "tightcut/graph.hpp"
#include "tightcut/tightcut.hpp"

namespace tightcut {

struct FailureWitness {
    nlohmann::json graph;  // full edge list so a failing case replays standalone
    std::string detail;
    nlohmann::json context;
};

struct TheoremReport {
    std::string theorem;
    std::string corpus;
    long checked = 0;   // graphs the suite applied to
    long skipped = 0;   // corpus graphs outside the suite's scope
    long failed = 0;    // graphs with at least one failure
    std::vector<FailureWitness> witnesses;
    std::vector<nlohmann::json> graph_lines;  // one status line per graph

    bool ok() const { return failed == 0; }
};

struct VerifyOptions {
    int jobs = 0;  // 0: hardware concurrency
    std::uint64_t seed = 12345;
};

const std::vector<std::string>& theorem_ids();
std::string theorem_description(const std::string& id);

/// Run one verification suite over a corpus.  Every statement the suite
/// checks is a proved theorem, so the expected failure count is zero and
/// any witness is a bug report.  Deterministic for a fixed seed.
TheoremReport verify_theorem(const std::string& id, const std::vector<Multigraph>& corpus,
                             const VerifyOptions& opts = {});

/// Aggregated per-graph report: recognizers, decomposition, edge
/// classification and census where applicable.
nlohmann::json analyze(const Multigraph& g);

nlohmann::json report_to_json(const TheoremReport& report);
nlohmann::json tree_to_json(const DecompositionTree& tree);
nlohmann::json classification_to_json(const EdgeClassification& row);

/// Per-graph JSON line for the streaming report (sorted by canonical
/// form before emission, so output is order-independent).
std::vector<std::string> report_jsonl(const TheoremReport& report);

}  // namespace tightcut
