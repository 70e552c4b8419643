#pragma once

#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

/// Exact connectivities.  Both require a connected input graph.
/// Vertex connectivity ignores edge multiplicities; edge connectivity
/// counts them.
int vertex_connectivity(const Multigraph& g);
int edge_connectivity(const Multigraph& g);

/// All edge cuts of size <= k, one representative per complementary shore
/// pair, by exhaustive shore scan.  Bounded to |V| <= 16 hosts; larger
/// graphs should go through edge_connectivity (max-flow) instead.
std::vector<Cut> enumerate_small_edge_cuts(const Multigraph& g, int k);

/// 2-connectivity with the convention that K2 counts as 2-connected.
bool is_two_connected(const Multigraph& g);

}  // namespace tightcut
