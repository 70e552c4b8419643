#pragma once

#include <optional>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

/// A matching: pairwise vertex-disjoint edge ids.  Perfect iff it covers
/// every vertex of the host.
struct Matching {
    std::vector<EdgeId> edges;

    int size() const { return static_cast<int>(edges.size()); }
    bool is_perfect(const Multigraph& g) const { return 2 * size() == g.num_vertices(); }
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm).  `warm`
/// seeds the search with a previous matching; edges that no longer exist
/// are dropped.  Warm starts are an optimization only.
Matching max_matching(const Multigraph& g, const Matching* warm = nullptr);

bool has_perfect_matching(const Multigraph& g);

/// Convenience: is g minus the given vertices matchable?
bool matchable_without(const Multigraph& g, const std::vector<VertexId>& removed);

std::uint64_t count_perfect_matchings(const Multigraph& g);
std::vector<std::vector<EdgeId>> all_perfect_matchings(const Multigraph& g);

/// e lies in some perfect matching.
bool is_admissible(const Multigraph& g, EdgeId e);

/// Connected, >= 2 vertices, every edge admissible.
bool is_matching_covered(const Multigraph& g);

/// G - u - v matchable for every pair of distinct vertices.  Defined for
/// even order >= 4; anything else is a domain error.
bool is_bicritical(const Multigraph& g);

/// G - v matchable for every vertex (the empty graph counts as matchable).
bool is_factor_critical(const Multigraph& g);

/// Barrier: nonempty S with odd(G - S) = |S|.
bool is_barrier(const Multigraph& g, const std::vector<VertexId>& s);

/// Special barrier: additionally G - S has exactly one nontrivial
/// component and no even components.
bool is_special_barrier(const Multigraph& g, const std::vector<VertexId>& s);

/// Gallai-Edmonds split.  D: vertices missed by some maximum matching;
/// A: neighbours of D outside D; C: the rest.
struct GallaiEdmonds {
    std::vector<VertexId> d, a, c;
};
GallaiEdmonds gallai_edmonds(const Multigraph& g);

/// None iff g-u-w is matchable.  Otherwise a deterministic barrier
/// containing {u,w} that is maximal under inclusion, built from the
/// Gallai-Edmonds A-set and, when the split leaves an even part, extended
/// into it until every residual component is factor-critical.
std::optional<std::vector<VertexId>> maximal_barrier_containing(const Multigraph& g,
                                                                VertexId u, VertexId w);

/// Edge set meeting all three edges at v and every other vertex once.
/// Host must be cubic.
std::optional<std::vector<EdgeId>> v_matching(const Multigraph& g, VertexId v);

/// Every perfect matching containing e also contains f.  Requires e
/// admissible (dependence is used only for admissible edges).
bool depends(const Multigraph& g, EdgeId e, EdgeId f);
bool mutually_dependent(const Multigraph& g, EdgeId e, EdgeId f);

/// Hall-type witness that edge ab of a bipartite matchable graph is
/// inadmissible: partitions [A1,A2] of A and [B1,B2] of B with a in A2,
/// b in B1, |A1| = |B1| and no A1-B2 edges.  None iff ab is admissible.
struct BipartiteWitness {
    std::vector<VertexId> a1, a2, b1, b2;
};
std::optional<BipartiteWitness> bipartite_inadmissibility_witness(const Multigraph& h,
                                                                  EdgeId ab);

/// All barriers of g by exhaustive subset scan (|V| <= 16 guard).
std::vector<std::vector<VertexId>> enumerate_barriers(const Multigraph& g);

}  // namespace tightcut
