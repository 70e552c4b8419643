#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightcut/graph.hpp"
#include "tightcut/tightcut.hpp"

namespace tightcut {

/// Cubic, 3-edge-connected, and every 3-edge-cut is trivial.
bool is_essentially_4ec_cubic(const Multigraph& g);

/// g - e is matching covered.
bool is_removable(const Multigraph& g, EdgeId e);

/// All pairs {e,f} with g-e-f bipartite and matching covered.  Host must
/// be a brick.  Candidates are pre-filtered by mutual dependence.
std::vector<std::pair<EdgeId, EdgeId>> removable_doubletons(const Multigraph& g);

/// Brick with at least one removable doubleton.
bool is_near_bipartite(const Multigraph& g);

enum class EdgeVerdict {
    DoubletonMember,
    BInvariant,       // removable, b(G-e) = 1
    QuasiBInvariant,  // removable, b(G-e) = 2
    RemovableOther,   // removable, any other b (non-efec hosts)
    NonRemovable,
};
std::string to_string(EdgeVerdict v);

struct EdgeClassification {
    EdgeId edge = -1;
    std::pair<VertexId, VertexId> endpoints{-1, -1};
    EdgeVerdict verdict = EdgeVerdict::NonRemovable;
    std::optional<EdgeId> partner;  // doubleton witness
    std::optional<int> b_value;     // removable verdicts
    std::shared_ptr<const DecompositionTree> witness_tree;  // of g - e
    std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>>
        witness_bipartition;  // of g - e - partner
};

/// Classify one edge of a cubic brick.  Strict mode requires an
/// essentially 4-edge-connected host; relaxed mode admits any cubic brick
/// and may produce RemovableOther verdicts.
EdgeClassification classify_edge(const Multigraph& g, EdgeId e, bool relaxed = false);
std::vector<EdgeClassification> classify_all_edges(const Multigraph& g, bool relaxed = false);

/// Proper 3-edge-colouring existence by backtracking (cubic hosts).
bool is_3_edge_colorable(const Multigraph& g);
/// Essentially 4-edge-connected cubic brick with chromatic index 4.
bool is_snark(const Multigraph& g);

/// The structure of g - e for a removable edge e of an essentially
/// 4-edge-connected cubic brick: one or two special barriers, the
/// contracted bicritical graph H, and (when b(g-e) = 2) the components
/// L, L', the bricks J, J' and the eight boundary edges.
struct RemovableStructure {
    enum class Case { OneBarrier, TwoBarrier };
    Case tag = Case::OneBarrier;
    EdgeId removed_edge = -1;
    VertexId end_v = -1, end_u = -1;  // e = vu, v in I (and u in I' when two-barrier)

    std::vector<VertexId> barrier, isolated;              // B, I
    std::vector<VertexId> barrier_prime, isolated_prime;  // B', I' (two-barrier)
    Multigraph h;
    VertexId x = -1, x_prime = -1;
    bool h_is_brick = false;
    int b_from_structure = 0;  // independent route to b(g-e)

    struct Labeled {
        std::vector<VertexId> shore_l, shore_l_prime;  // V(L), V(L')
        EdgeId d = -1, f = -1, g = -1, h = -1;              // at x: d,f into L; g,h into L'
        EdgeId d_prime = -1, f_prime = -1, g_prime = -1, h_prime = -1;  // at x'
        Multigraph j, j_prime;
        EdgeId link_in_j = -1, link_in_j_prime = -1;  // the added edge xx'
    };
    std::optional<Labeled> fig;  // present iff two-barrier and H not a brick
};

/// Extract the structure.  `v_end` selects which end of e plays the role
/// of v (its two other neighbours span the barrier B); defaults to the
/// smaller endpoint id.  Postconditions are asserted and raise
/// TheoremViolation on failure.
RemovableStructure removable_structure(const Multigraph& g, EdgeId e, VertexId v_end = -1);

/// removable_structure specialised to a quasi-b-invariant edge: the
/// two-barrier case with the full labelled bundle, with the shore,
/// adjacency and 3-cut postconditions asserted on top.
RemovableStructure qbinv_structure(const Multigraph& g, EdgeId e, VertexId v_end = -1);

struct InflexibilityReport {
    bool inflexible = false;
    // after relabeling: {first.first, first.second} and {second.first,
    // second.second} are removable doubletons of j
    std::optional<std::pair<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>>> doubletons;
};

/// For a cubic brick j with designated edge xx' such that every
/// nontrivial 3-cut of j contains xx': does some edge at x depend on some
/// edge at x' (or vice versa)?  When it does, the dependent pairs are
/// removable doubletons of j.
InflexibilityReport is_inflexible(const Multigraph& j, EdgeId link);

struct TwoQbinvOutcome {
    enum class Kind { DoubletonAndCubeplex, QuasiAndPetersen, BInvariant };
    Kind kind;
    VertexId vertex = -1;
    EdgeId third_edge = -1;
    std::vector<EdgeId> quasi_edges;
};

/// Theorem outcome at a vertex with at least two quasi-b-invariant edges.
/// The isomorphism claims (Petersen / Cubeplex) are asserted.
TwoQbinvOutcome two_qbinv_vertex_outcome(const Multigraph& g, VertexId v);

struct BinvCensus {
    int binv_edges = 0;
    int doubletons = 0;
    int binv_classes = 0;  // b-invariant edges plus removable doubletons
    std::vector<std::pair<VertexId, bool>> vertex_has_class;
    bool all_vertices_covered = false;
    bool petersen_exception = false;
    std::vector<EdgeClassification> table;
};

BinvCensus binv_census(const Multigraph& g);

}  // namespace tightcut
