#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

/// Canonical certificate: equal strings iff the graphs are isomorphic as
/// multigraphs (parallel multiplicities respected, labels ignored).
/// Computed by colour refinement plus individualization backtracking;
/// adequate at the n <= 20 scale this toolkit targets.
using Certificate = std::string;

Certificate canonical_form(const Multigraph& g);
bool is_isomorphic(const Multigraph& a, const Multigraph& b);

/// Number of automorphisms (colour-refined backtracking count).
std::uint64_t automorphism_count(const Multigraph& g);

}  // namespace tightcut
