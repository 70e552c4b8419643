#pragma once

// Test-only oracles, independent of the library's algorithm paths: brute
// force enumeration stands in for blossom search, tight cut search and
// the generators wherever the suites need a second opinion.

#include <cstdint>
#include <vector>

#include "tightcut/graph.hpp"

namespace oracles {

/// Maximum matching cardinality by branch-on-lowest-vertex recursion.
int exhaustive_max_matching(const tightcut::Multigraph& g);

/// All graphs on n vertices, one per isomorphism class, by vertex
/// augmentation with canonical deduplication.
std::vector<tightcut::Multigraph> all_graphs(int n);
std::vector<tightcut::Multigraph> all_connected_graphs(int n);

bool has_triangle(const tightcut::Multigraph& g);

/// Random vertex relabeling (seeded).
tightcut::Multigraph relabel(const tightcut::Multigraph& g, std::uint64_t seed);

}  // namespace oracles
