#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

/// All connected cubic simple graphs on n vertices, one per isomorphism
/// class, deterministically ordered.  n must be even with 4 <= n <= 14.
/// Built by edge-insertion augmentation through cubic multigraph levels
/// with canonical-form deduplication.
std::vector<Multigraph> generate_cubic(int n);

/// Memoized variant (per-process cache) for the corpus runners.
const std::vector<Multigraph>& generated_cubic(int n);

/// The underlying augmentation level: all connected loopless cubic
/// multigraphs on n vertices (the simple ones are generate_cubic's
/// output).  Exposed for the generator's own cross-checks.
std::vector<Multigraph> generate_cubic_multigraphs(int n);

/// Independent labelled enumerator (pairing-style backtracking over
/// vertex slots): counts labelled simple cubic graphs on {0..n-1}.
/// Cross-checks the generator through the orbit count
/// sum over classes of n!/|Aut|.  Practical for n <= 10.
std::uint64_t count_labeled_cubic(int n, bool connected_only);

struct CorpusSpec {
    std::vector<int> generated_ns;          // generate_cubic sizes
    std::optional<std::string> graph6_path; // additional graphs from file
    bool dedup_isomorphs = true;
};

std::vector<Multigraph> load_corpus(const CorpusSpec& spec);

/// Seeded sample of matching covered graphs with 4..max_n vertices
/// (Erdos-Renyi rejection sampling; deterministic for a fixed seed).
std::vector<Multigraph> random_matching_covered(int count, int max_n, std::uint64_t seed);

/// Seeded general random graphs (not filtered), for oracle gates.
std::vector<Multigraph> random_graphs(int count, int n, std::uint64_t seed);

}  // namespace tightcut
