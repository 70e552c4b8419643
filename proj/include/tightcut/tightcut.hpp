#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tightcut/graph.hpp"
#include "tightcut/iso.hpp"

namespace tightcut {

enum class CutKind { BarrierCut, TwoSeparationCut, Other };

struct TightCutKind {
    CutKind kind = CutKind::Other;
    std::vector<VertexId> barrier;           // barrier cuts
    std::vector<VertexId> separation_pair;   // 2-separation cuts
    std::vector<VertexId> component;         // the odd component / glued component
};

/// |M n ∂(X)| = 1 for every perfect matching M.  Host must be matching
/// covered; the shore must be odd (an even shore is a domain error since
/// parity forces |M n ∂(X)| even).  Implemented by the disjoint-pair
/// criterion: the cut is tight iff no two vertex-disjoint cut edges lie
/// in a common perfect matching.
bool is_tight_cut(const Multigraph& g, const std::vector<VertexId>& shore);

/// ∂(V(K)) for every odd component K of g - barrier.  All outputs are
/// tight by construction.
std::vector<Cut> barrier_cuts(const Multigraph& g, const std::vector<VertexId>& barrier);

/// Tight cuts from a 2-vertex-cut {u,v} whose removal leaves only even
/// components: shores V(K) u {u} over nonempty proper unions K of those
/// components.
std::vector<Cut> two_separation_cuts(const Multigraph& g, VertexId u, VertexId v);

/// None iff g has no nontrivial tight cut (g is then a brick or a brace).
/// Deterministic search: lexicographic vertex-pair scan for barrier cuts
/// (via maximal barriers), then for 2-separation cuts, then a bipartite
/// surplus-1 shore scan that covers the cases the pair scan can miss on
/// bipartite hosts.
std::optional<std::pair<Cut, TightCutKind>> find_nontrivial_tight_cut(const Multigraph& g);

/// All nontrivial tight cuts the search surfaces, deduplicated by shore.
/// With `exhaustive_augment` the full odd-shore enumeration is unioned in
/// (only sensible on small hosts); used by the seeded-random policy.
std::vector<std::pair<Cut, TightCutKind>> nontrivial_tight_cut_candidates(
    const Multigraph& g, bool exhaustive_augment);

/// Every nontrivial tight cut, one representative per shore pair, by
/// exhaustive odd-shore scan.  Oracle-grade; bounded host size.
std::vector<Cut> enumerate_tight_cuts_exhaustive(const Multigraph& g, int bound = 14);

struct DecompositionPolicy {
    enum class Mode { Deterministic, SeededRandom };
    Mode mode = Mode::Deterministic;
    std::uint64_t seed = 0;

    static DecompositionPolicy deterministic() { return {}; }
    static DecompositionPolicy seeded(std::uint64_t s) {
        return {Mode::SeededRandom, s};
    }
    static DecompositionPolicy parse(const std::string& text);  // "det" | "seed:N"
};

enum class LeafVerdict { Brick, Brace };

struct DecompositionNode {
    Multigraph graph;
    std::optional<Cut> cut;             // internal nodes
    std::optional<TightCutKind> kind;
    std::vector<DecompositionNode> children;
    std::optional<LeafVerdict> verdict;  // leaves

    bool is_leaf() const { return verdict.has_value(); }
};

struct DecompositionTree {
    DecompositionNode root;
    int brick_count = 0;
    int brace_count = 0;

    std::vector<const DecompositionNode*> leaves() const;
    /// Canonical certificates of the simplified (multiplicity-collapsed)
    /// leaves, sorted: the Lovász-invariant fingerprint of the tree.
    std::vector<Certificate> simplified_leaf_certificates() const;
};

DecompositionTree tight_cut_decomposition(
    const Multigraph& g, const DecompositionPolicy& policy = DecompositionPolicy());

/// Number of bricks in any tight cut decomposition.
int b_count(const Multigraph& g);

/// Brick: 3-connected and bicritical (nonbipartite follows).
bool is_brick(const Multigraph& g);
/// Brace: bipartite matching covered with no nontrivial tight cut.
bool is_brace(const Multigraph& g);
bool is_near_brick(const Multigraph& g);  // b(G) = 1

struct UncrossResult {
    Cut i;  // ∂(X n Y)
    Cut u;  // ∂(~X n ~Y)
    int corner_xy, corner_xy_bar, corner_x_bar_y, corner_both_bar;
    bool size_identity;  // |C| + |D| = |I| + |U|
};

/// Uncross two crossing tight cuts (shores normalized so |X n Y| is odd).
/// Laminar inputs raise a domain error naming an empty corner.
UncrossResult uncross(const Multigraph& g, const Cut& c, const Cut& d);

}  // namespace tightcut
