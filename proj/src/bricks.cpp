#include "tightcut/bricks.hpp"

#include <algorithm>
#include <map>

#include "tightcut/catalog.hpp"
#include "tightcut/connectivity.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

bool is_essentially_4ec_cubic(const Multigraph& g) {
    if (!is_cubic(g) || !is_connected(g)) return false;
    if (g.num_vertices() <= 16) {
        for (const Cut& c : enumerate_small_edge_cuts(g, 3)) {
            if (c.size() < 3) return false;
            if (!c.trivial(g)) return false;
        }
        return true;
    }
    int lambda = edge_connectivity(g);
    if (lambda >= 4) return true;
    if (lambda < 3) return false;
    throw GraphError("3-cut triviality scan is bounded to 16 vertices");
}

bool is_removable(const Multigraph& g, EdgeId e) {
    return is_matching_covered(g.without_edge(e));
}

std::vector<std::pair<EdgeId, EdgeId>> removable_doubletons(const Multigraph& g) {
    if (!is_brick(g)) throw GraphError("removable doubletons are defined for bricks");
    std::vector<std::pair<EdgeId, EdgeId>> out;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (!mutually_dependent(g, es[i], es[j])) continue;
            Multigraph h = g.without_edge(es[i]).without_edge(es[j]);
            if (is_bipartite(h) && is_matching_covered(h)) out.emplace_back(es[i], es[j]);
        }
    }
    return out;
}

bool is_near_bipartite(const Multigraph& g) { return !removable_doubletons(g).empty(); }

std::string to_string(EdgeVerdict v) {
    switch (v) {
        case EdgeVerdict::DoubletonMember: return "doubleton-member";
        case EdgeVerdict::BInvariant: return "b-invariant";
        case EdgeVerdict::QuasiBInvariant: return "quasi-b-invariant";
        case EdgeVerdict::RemovableOther: return "removable-other";
        case EdgeVerdict::NonRemovable: return "non-removable";
    }
    return "?";
}

namespace {

void require_host(const Multigraph& g, bool relaxed) {
    if (!is_cubic(g) || !is_brick(g)) throw GraphError("host must be a cubic brick");
    if (!relaxed && !is_essentially_4ec_cubic(g))
        throw GraphError("host must be essentially 4-edge-connected (or use relaxed mode)");
}

EdgeClassification classify_with(const Multigraph& g, EdgeId e,
                                 const std::vector<std::pair<EdgeId, EdgeId>>& doubletons) {
    EdgeClassification out;
    out.edge = e;
    out.endpoints = g.ends(e);
    for (auto [a, b] : doubletons) {
        if (a != e && b != e) continue;
        out.verdict = EdgeVerdict::DoubletonMember;
        out.partner = (a == e) ? b : a;
        out.witness_bipartition = bipartition(g.without_edge(a).without_edge(b));
        return out;
    }
    Multigraph reduced = g.without_edge(e);
    if (!is_matching_covered(reduced)) {
        out.verdict = EdgeVerdict::NonRemovable;
        return out;
    }
    auto tree = std::make_shared<DecompositionTree>(tight_cut_decomposition(reduced));
    out.b_value = tree->brick_count;
    out.witness_tree = tree;
    switch (tree->brick_count) {
        case 1: out.verdict = EdgeVerdict::BInvariant; break;
        case 2: out.verdict = EdgeVerdict::QuasiBInvariant; break;
        default: out.verdict = EdgeVerdict::RemovableOther; break;
    }
    return out;
}

}  // namespace

EdgeClassification classify_edge(const Multigraph& g, EdgeId e, bool relaxed) {
    require_host(g, relaxed);
    g.ends(e);  // validate
    return classify_with(g, e, removable_doubletons(g));
}

std::vector<EdgeClassification> classify_all_edges(const Multigraph& g, bool relaxed) {
    require_host(g, relaxed);
    auto doubletons = removable_doubletons(g);
    std::vector<EdgeClassification> out;
    for (EdgeId e : g.edges()) out.push_back(classify_with(g, e, doubletons));
    return out;
}

bool is_3_edge_colorable(const Multigraph& g) {
    if (!is_cubic(g)) throw GraphError("edge colouring test expects a cubic host");
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    std::vector<int> pos(g.edge_bound(), -1);
    for (int i = 0; i < m; ++i) pos[es[i]] = i;
    std::vector<std::vector<int>> conflict(m);
    for (VertexId v : g.vertices()) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                conflict[pos[inc[i]]].push_back(pos[inc[j]]);
                conflict[pos[inc[j]]].push_back(pos[inc[i]]);
            }
    }
    std::vector<int> colour(m, -1);
    // symmetry-free start: the three edges at the first vertex take the
    // three colours in incidence order
    VertexId v0 = g.vertices().front();
    int fixed = 0;
    for (EdgeId e : g.incident(v0)) colour[pos[e]] = fixed++;
    // order remaining edges by BFS over the conflict graph for pruning
    std::vector<int> order;
    std::vector<char> queued(m, 0);
    for (EdgeId e : g.incident(v0)) queued[pos[e]] = 1;
    std::vector<int> frontier;
    for (EdgeId e : g.incident(v0)) frontier.push_back(pos[e]);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        for (int nb : conflict[frontier[head]]) {
            if (queued[nb]) continue;
            queued[nb] = 1;
            frontier.push_back(nb);
            order.push_back(nb);
        }
    }
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        int e = order[idx];
        bool used[3] = {false, false, false};
        for (int nb : conflict[e])
            if (colour[nb] != -1) used[colour[nb]] = true;
        for (int c = 0; c < 3; ++c) {
            if (used[c]) continue;
            colour[e] = c;
            if (self(self, idx + 1)) return true;
            colour[e] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

bool is_snark(const Multigraph& g) {
    if (!is_cubic(g)) throw GraphError("snark test expects a cubic host");
    return is_essentially_4ec_cubic(g) && is_brick(g) && !is_3_edge_colorable(g);
}

namespace {

std::vector<VertexId> isolated_vertices(const Multigraph& g, const std::vector<VertexId>& barrier) {
    std::vector<VertexId> out;
    for (const auto& comp : components(g.without_vertices(barrier)))
        if (comp.size() == 1) out.push_back(comp[0]);
    std::sort(out.begin(), out.end());
    return out;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw TheoremViolation(what);
}

// x's edges in h, split by which component of h-x-x' their far end lies
// in; each side must consist of two edges with distinct far ends.
std::pair<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> split_star(
    const Multigraph& h, VertexId x, const std::vector<char>& in_l) {
    std::vector<std::pair<VertexId, EdgeId>> to_l, to_lp;
    for (EdgeId e : h.incident(x)) {
        VertexId far = h.other_end(e, x);
        (in_l[far] ? to_l : to_lp).emplace_back(far, e);
    }
    check(to_l.size() == 2 && to_lp.size() == 2,
          "contraction vertex lacks two edges into each component");
    std::sort(to_l.begin(), to_l.end());
    std::sort(to_lp.begin(), to_lp.end());
    check(to_l[0].first != to_l[1].first && to_lp[0].first != to_lp[1].first,
          "contraction vertex has coincident neighbours in a component");
    return {{to_l[0].second, to_l[1].second}, {to_lp[0].second, to_lp[1].second}};
}

}  // namespace

RemovableStructure removable_structure(const Multigraph& g, EdgeId e, VertexId v_end) {
    if (!is_essentially_4ec_cubic(g) || !is_brick(g))
        throw GraphError("structure extraction expects an essentially 4-edge-connected cubic brick");
    auto [p, q] = g.ends(e);
    if (v_end == -1) v_end = std::min(p, q);
    if (v_end != p && v_end != q) throw GraphError("v_end must be an end of the removed edge");
    if (!is_removable(g, e)) throw GraphError("structure extraction expects a removable edge");

    RemovableStructure s;
    s.removed_edge = e;
    s.end_v = v_end;
    s.end_u = (v_end == p) ? q : p;
    Multigraph reduced = g.without_edge(e);

    auto nv = reduced.neighbors(s.end_v);
    check(nv.size() == 2, "deleting the edge must leave a degree-2 end");
    auto barrier = maximal_barrier_containing(reduced, nv[0], nv[1]);
    check(barrier.has_value(), "the neighbour pair of v must lie in a barrier of g-e");
    s.barrier = *barrier;
    check(is_special_barrier(reduced, s.barrier), "B is not a special barrier of g-e");
    s.isolated = isolated_vertices(reduced, s.barrier);
    check(std::binary_search(s.isolated.begin(), s.isolated.end(), s.end_v),
          "v is not isolated by its barrier");
    check(s.isolated.size() + 1 == s.barrier.size(), "|I| != |B| - 1");

    std::vector<VertexId> shore_x = s.barrier;
    shore_x.insert(shore_x.end(), s.isolated.begin(), s.isolated.end());

    if (std::binary_search(s.isolated.begin(), s.isolated.end(), s.end_u)) {
        // one-barrier case: e has both ends in I
        s.tag = RemovableStructure::Case::OneBarrier;
        s.h = contract_shore(reduced, shore_x, "x");
        s.x = *s.h.vertex_with_label("x");
        check(s.h.degree(s.x) == 5, "contraction vertex degree is not 5");
        for (VertexId w : s.h.vertices())
            check(w == s.x || s.h.degree(w) == 3, "a non-contraction vertex is not cubic");
        check(is_brick(s.h), "one-barrier H is not a brick");
        s.h_is_brick = true;
        s.b_from_structure = 1;
        return s;
    }

    s.tag = RemovableStructure::Case::TwoBarrier;
    auto nu = reduced.neighbors(s.end_u);
    check(nu.size() == 2, "deleting the edge must leave a degree-2 end");
    auto barrier2 = maximal_barrier_containing(reduced, nu[0], nu[1]);
    check(barrier2.has_value(), "the neighbour pair of u must lie in a barrier of g-e");
    s.barrier_prime = *barrier2;
    check(is_special_barrier(reduced, s.barrier_prime), "B' is not a special barrier of g-e");
    s.isolated_prime = isolated_vertices(reduced, s.barrier_prime);
    check(std::binary_search(s.isolated_prime.begin(), s.isolated_prime.end(), s.end_u),
          "u is not isolated by its barrier");
    check(s.isolated_prime.size() + 1 == s.barrier_prime.size(), "|I'| != |B'| - 1");

    std::vector<VertexId> shore_xp = s.barrier_prime;
    shore_xp.insert(shore_xp.end(), s.isolated_prime.begin(), s.isolated_prime.end());
    {
        std::vector<char> in_x(g.vertex_bound(), 0);
        for (VertexId w : shore_x) in_x[w] = 1;
        for (VertexId w : shore_xp) check(!in_x[w], "X and X' are not disjoint");
    }

    s.h = contract_shore(contract_shore(reduced, shore_x, "x"), shore_xp, "x'");
    s.x = *s.h.vertex_with_label("x");
    s.x_prime = *s.h.vertex_with_label("x'");
    check(s.h.degree(s.x) == 4 && s.h.degree(s.x_prime) == 4,
          "contraction vertices must have degree 4");
    for (VertexId w : s.h.vertices())
        check(w == s.x || w == s.x_prime || s.h.degree(w) == 3,
              "a non-contraction vertex is not cubic");
    check(is_bicritical(s.h), "two-barrier H is not bicritical");

    if (is_brick(s.h)) {
        s.h_is_brick = true;
        s.b_from_structure = 1;
        return s;
    }
    s.b_from_structure = 2;

    // {x,x'} must be the unique 2-vertex-cut and leave two even components
    auto hv = s.h.vertices();
    for (std::size_t i = 0; i < hv.size(); ++i)
        for (std::size_t j = i + 1; j < hv.size(); ++j) {
            bool disconnects = components(s.h.without_vertices({hv[i], hv[j]})).size() > 1;
            bool is_pair = (hv[i] == std::min(s.x, s.x_prime) && hv[j] == std::max(s.x, s.x_prime));
            check(disconnects == is_pair, "{x,x'} is not the unique 2-vertex-cut of H");
        }
    auto comps = components(s.h.without_vertices({s.x, s.x_prime}));
    check(comps.size() == 2, "H - x - x' must have exactly two components");
    check(comps[0].size() % 2 == 0 && comps[1].size() % 2 == 0,
          "H - x - x' components must be even");

    RemovableStructure::Labeled fig;
    fig.shore_l = comps[0];
    fig.shore_l_prime = comps[1];
    std::vector<char> in_l(s.h.vertex_bound(), 0);
    for (VertexId w : fig.shore_l) in_l[w] = 1;
    auto [dl, dlp] = split_star(s.h, s.x, in_l);
    auto [pl, plp] = split_star(s.h, s.x_prime, in_l);
    fig.d = dl.first;
    fig.f = dl.second;
    fig.g = dlp.first;
    fig.h = dlp.second;
    fig.d_prime = pl.first;
    fig.f_prime = pl.second;
    fig.g_prime = plp.first;
    fig.h_prime = plp.second;

    fig.j = s.h.without_vertices(fig.shore_l_prime);
    fig.link_in_j = fig.j.add_edge(s.x, s.x_prime);
    fig.j_prime = s.h.without_vertices(fig.shore_l);
    fig.link_in_j_prime = fig.j_prime.add_edge(s.x, s.x_prime);
    check(is_cubic(fig.j) && is_cubic(fig.j_prime), "J and J' must be cubic");
    s.fig = std::move(fig);
    return s;
}

RemovableStructure qbinv_structure(const Multigraph& g, EdgeId e, VertexId v_end) {
    RemovableStructure s = removable_structure(g, e, v_end);
    check(s.tag == RemovableStructure::Case::TwoBarrier && !s.h_is_brick && s.fig.has_value(),
          "edge is not quasi-b-invariant: structure has a single brick");
    const auto& fig = *s.fig;

    check(is_brick(fig.j) && is_brick(fig.j_prime), "J or J' is not a brick");
    for (const auto* j : {&fig.j, &fig.j_prime}) {
        EdgeId link = (j == &fig.j) ? fig.link_in_j : fig.link_in_j_prime;
        for (const Cut& c : enumerate_small_edge_cuts(*j, 3)) {
            check(c.size() == 3, "J has an edge cut smaller than 3");
            if (c.trivial(*j)) continue;
            check(std::binary_search(c.edges.begin(), c.edges.end(), link),
                  "a nontrivial 3-cut of J avoids the link edge");
        }
    }

    // the four shore-induced subgraphs of g are nonbipartite
    for (const auto& half : {std::make_pair(s.barrier, s.isolated),
                             std::make_pair(s.barrier_prime, s.isolated_prime)}) {
        for (const auto& side : {fig.shore_l, fig.shore_l_prime}) {
            std::vector<VertexId> shore = half.first;
            shore.insert(shore.end(), half.second.begin(), half.second.end());
            shore.insert(shore.end(), side.begin(), side.end());
            check(!is_bipartite(g.induced(shore)), "a structure shore induces a bipartite graph");
        }
    }

    // nonadjacent pairs
    for (auto [a, b] : {std::make_pair(fig.d, fig.f), std::make_pair(fig.g, fig.h),
                        std::make_pair(fig.d_prime, fig.f_prime),
                        std::make_pair(fig.g_prime, fig.h_prime)}) {
        auto [a1, a2] = g.ends(a);
        auto [b1, b2] = g.ends(b);
        check(a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2,
              "a boundary edge pair shares an end");
    }

    // L and L' are matchable and 2-connected
    for (const auto& side : {fig.shore_l, fig.shore_l_prime}) {
        Multigraph sub = g.induced(side);
        check(has_perfect_matching(sub), "L (or L') is not matchable");
        check(is_two_connected(sub), "L (or L') is not 2-connected");
    }
    return s;
}

InflexibilityReport is_inflexible(const Multigraph& j, EdgeId link) {
    if (!is_cubic(j) || !is_brick(j)) throw GraphError("inflexibility expects a cubic brick");
    auto [x, xp] = j.ends(link);
    for (const Cut& c : enumerate_small_edge_cuts(j, 3)) {
        if (c.trivial(j)) continue;
        if (!std::binary_search(c.edges.begin(), c.edges.end(), link))
            throw GraphError("inflexibility expects every nontrivial 3-cut to contain the edge");
    }
    std::vector<EdgeId> at_x, at_xp;
    for (EdgeId e : j.incident(x))
        if (e != link) at_x.push_back(e);
    for (EdgeId e : j.incident(xp))
        if (e != link) at_xp.push_back(e);

    InflexibilityReport rep;
    for (EdgeId a : at_x) {
        for (EdgeId b : at_xp) {
            if (!depends(j, a, b) && !depends(j, b, a)) continue;
            rep.inflexible = true;
            EdgeId a2 = (a == at_x[0]) ? at_x[1] : at_x[0];
            EdgeId b2 = (b == at_xp[0]) ? at_xp[1] : at_xp[0];
            for (auto [e1, e2] : {std::make_pair(a, b), std::make_pair(a2, b2)}) {
                Multigraph without = j.without_edge(e1).without_edge(e2);
                check(is_bipartite(without) && is_matching_covered(without),
                      "a dependent boundary pair is not a removable doubleton");
            }
            rep.doubletons = {{a, b}, {a2, b2}};
            return rep;
        }
    }
    return rep;
}

TwoQbinvOutcome two_qbinv_vertex_outcome(const Multigraph& g, VertexId v) {
    require_host(g, /*relaxed=*/false);
    const auto& star = g.incident(v);
    if (star.size() != 3) throw GraphError("vertex is not cubic");
    auto doubletons = removable_doubletons(g);
    std::map<EdgeId, EdgeVerdict> verdicts;
    for (EdgeId e : star) verdicts[e] = classify_with(g, e, doubletons).verdict;

    TwoQbinvOutcome out;
    out.vertex = v;
    for (EdgeId e : star)
        if (verdicts[e] == EdgeVerdict::QuasiBInvariant) out.quasi_edges.push_back(e);
    if (out.quasi_edges.size() < 2)
        throw GraphError("outcome needs at least two quasi-b-invariant edges at the vertex");

    if (out.quasi_edges.size() == 3) {
        out.third_edge = out.quasi_edges.back();
        out.kind = TwoQbinvOutcome::Kind::QuasiAndPetersen;
        check(is_isomorphic(g, catalog("petersen").graph),
              "three quasi edges at a vertex outside the Petersen graph");
        return out;
    }
    for (EdgeId e : star)
        if (verdicts[e] != EdgeVerdict::QuasiBInvariant) out.third_edge = e;
    switch (verdicts[out.third_edge]) {
        case EdgeVerdict::DoubletonMember:
            out.kind = TwoQbinvOutcome::Kind::DoubletonAndCubeplex;
            check(is_isomorphic(g, catalog("cubeplex").graph),
                  "doubleton third edge outside the Cubeplex");
            return out;
        case EdgeVerdict::BInvariant:
            out.kind = TwoQbinvOutcome::Kind::BInvariant;
            return out;
        default:
            throw TheoremViolation("third edge is neither b-invariant nor a doubleton member");
    }
}

BinvCensus binv_census(const Multigraph& g) {
    require_host(g, /*relaxed=*/false);
    BinvCensus census;
    census.table = classify_all_edges(g);
    std::vector<char> covered(g.vertex_bound(), 0);
    std::vector<char> in_doubleton(g.edge_bound(), 0);
    for (const auto& row : census.table) {
        if (row.verdict == EdgeVerdict::BInvariant) ++census.binv_edges;
        if (row.verdict == EdgeVerdict::DoubletonMember) in_doubleton[row.edge] = 1;
        if (row.verdict == EdgeVerdict::BInvariant ||
            row.verdict == EdgeVerdict::DoubletonMember) {
            covered[row.endpoints.first] = 1;
            covered[row.endpoints.second] = 1;
        }
    }
    int doubleton_edges = 0;
    for (EdgeId e : g.edges()) doubleton_edges += in_doubleton[e];
    census.doubletons = doubleton_edges / 2;
    census.binv_classes = census.binv_edges + census.doubletons;
    census.all_vertices_covered = true;
    for (VertexId v : g.vertices()) {
        census.vertex_has_class.emplace_back(v, covered[v] != 0);
        if (!covered[v]) census.all_vertices_covered = false;
    }
    census.petersen_exception = is_isomorphic(g, catalog("petersen").graph);
    return census;
}

}  // namespace tightcut
