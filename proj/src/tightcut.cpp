#include "tightcut/tightcut.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tightcut/connectivity.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool shore_valid(const Multigraph& g, const std::vector<VertexId>& shore) {
    if (shore.empty() || static_cast<int>(shore.size()) >= g.num_vertices()) return false;
    for (VertexId v : shore)
        if (!g.has_vertex(v)) return false;
    return true;
}

std::vector<VertexId> normalized_shore(const Multigraph& g, const std::vector<VertexId>& shore) {
    // representative side: the one containing the smallest vertex id
    auto s = sorted_unique(shore);
    VertexId vmin = g.vertices().front();
    if (std::find(s.begin(), s.end(), vmin) != s.end()) return s;
    Cut c;
    c.shore = s;
    return c.complement_shore(g);
}

}  // namespace

bool is_tight_cut(const Multigraph& g, const std::vector<VertexId>& shore) {
    if (!shore_valid(g, shore)) throw GraphError("tightness test needs a nonempty proper shore");
    if (shore.size() % 2 == 0)
        throw GraphError("tightness test needs an odd shore (even shores meet matchings evenly)");
    Cut c = cut_of(g, shore);
    // an odd shore forces |M n C| odd, so non-tight means some matching
    // meets C at least three times, i.e. contains two disjoint C-edges
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        auto [a, b] = g.ends(c.edges[i]);
        for (std::size_t j = i + 1; j < c.edges.size(); ++j) {
            auto [p, q] = g.ends(c.edges[j]);
            if (p == a || p == b || q == a || q == b) continue;
            if (matchable_without(g, {a, b, p, q})) return false;
        }
    }
    return true;
}

std::vector<Cut> barrier_cuts(const Multigraph& g, const std::vector<VertexId>& barrier) {
    if (!is_barrier(g, barrier)) throw GraphError("barrier_cuts: the given set is not a barrier");
    Multigraph rest = g.without_vertices(barrier);
    std::vector<Cut> out;
    for (const auto& comp : components(rest))
        if (comp.size() % 2) out.push_back(cut_of(g, comp));
    std::sort(out.begin(), out.end(),
              [](const Cut& a, const Cut& b) { return a.shore < b.shore; });
    return out;
}

std::vector<Cut> two_separation_cuts(const Multigraph& g, VertexId u, VertexId v) {
    if (u == v) throw GraphError("2-separation needs two distinct vertices");
    Multigraph rest = g.without_vertices({u, v});
    auto comps = components(rest);
    if (comps.size() < 2) throw GraphError("2-separation: {u,v} is not a 2-vertex-cut");
    for (const auto& comp : comps)
        if (comp.size() % 2)
            throw GraphError("2-separation: removal leaves an odd component (a barrier case)");
    std::vector<Cut> out;
    int c = static_cast<int>(comps.size());
    for (std::uint32_t mask = 1; mask < (1u << c) - 1; ++mask) {
        std::vector<VertexId> shore;
        for (int i = 0; i < c; ++i)
            if ((mask >> i) & 1) shore.insert(shore.end(), comps[i].begin(), comps[i].end());
        shore.push_back(u);
        out.push_back(cut_of(g, shore));
    }
    std::sort(out.begin(), out.end(),
              [](const Cut& a, const Cut& b) { return a.shore < b.shore; });
    return out;
}

namespace {

// Collects candidates in deterministic order; stops after the first hit
// when `first_only` is set.
struct CutSearch {
    const Multigraph& g;
    bool first_only;
    std::vector<std::pair<Cut, TightCutKind>> found;
    std::set<std::vector<VertexId>> seen;

    bool push(Cut cut, TightCutKind kind) {
        if (cut.trivial(g)) return false;
        auto key = normalized_shore(g, cut.shore);
        if (!seen.insert(key).second) return false;
        found.emplace_back(std::move(cut), std::move(kind));
        return true;
    }

    bool done() const { return first_only && !found.empty(); }

    void barrier_phase() {
        auto vs = g.vertices();
        for (std::size_t i = 0; i < vs.size() && !done(); ++i) {
            for (std::size_t j = i + 1; j < vs.size() && !done(); ++j) {
                auto barrier = maximal_barrier_containing(g, vs[i], vs[j]);
                if (!barrier) continue;
                Multigraph rest = g.without_vertices(*barrier);
                auto comps = components(rest);
                std::sort(comps.begin(), comps.end(),
                          [](const auto& a, const auto& b) {
                              return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
                          });
                for (const auto& comp : comps) {
                    if (comp.size() % 2 == 0 || comp.size() < 3) continue;
                    TightCutKind kind{CutKind::BarrierCut, *barrier, {}, comp};
                    push(cut_of(g, comp), std::move(kind));
                    if (done()) return;
                }
            }
        }
    }

    void separation_phase() {
        auto vs = g.vertices();
        for (std::size_t i = 0; i < vs.size() && !done(); ++i) {
            for (std::size_t j = i + 1; j < vs.size() && !done(); ++j) {
                Multigraph rest = g.without_vertices({vs[i], vs[j]});
                auto comps = components(rest);
                if (comps.size() < 2) continue;
                bool all_even = true;
                for (const auto& comp : comps)
                    if (comp.size() % 2) all_even = false;
                if (!all_even) continue;
                std::sort(comps.begin(), comps.end(),
                          [](const auto& a, const auto& b) {
                              return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
                          });
                if (first_only) {
                    std::vector<VertexId> shore = comps.front();
                    shore.push_back(vs[i]);
                    TightCutKind kind{CutKind::TwoSeparationCut, {}, {vs[i], vs[j]}, comps.front()};
                    push(cut_of(g, shore), std::move(kind));
                    if (done()) return;
                } else {
                    int c = static_cast<int>(comps.size());
                    for (std::uint32_t mask = 1; mask < (1u << c) - 1; ++mask) {
                        std::vector<VertexId> glued;
                        for (int t = 0; t < c; ++t)
                            if ((mask >> t) & 1)
                                glued.insert(glued.end(), comps[t].begin(), comps[t].end());
                        std::vector<VertexId> shore = glued;
                        shore.push_back(vs[i]);
                        TightCutKind kind{CutKind::TwoSeparationCut, {}, {vs[i], vs[j]}, glued};
                        push(cut_of(g, shore), std::move(kind));
                    }
                }
            }
        }
    }

    // Bipartite hosts: every tight cut has the form ∂(S u N(S)) for a set
    // S on one side with |N(S)| = |S| + 1, and the pair scan above can
    // miss them (maximal barriers may leave only trivial components), so
    // scan those shores directly.  N(S) is then a barrier with the
    // complement shore as its unique nontrivial odd component.
    void bipartite_phase() {
        auto bip = bipartition(g);
        if (!bip) return;
        const auto& side = bip->first;
        int a = static_cast<int>(side.size());
        if (a > 24) throw GraphError("bipartite tight cut scan is bounded to 24 side vertices");
        for (int popcount = 1; popcount <= a - 2 && !done(); ++popcount) {
            for (std::uint32_t mask = 1; mask < (1u << a) && !done(); ++mask) {
                if (__builtin_popcount(mask) != popcount) continue;
                std::vector<VertexId> s;
                for (int i = 0; i < a; ++i)
                    if ((mask >> i) & 1) s.push_back(side[i]);
                std::vector<VertexId> nbhd;
                for (VertexId x : s) {
                    auto nx = g.neighbors(x);
                    nbhd.insert(nbhd.end(), nx.begin(), nx.end());
                }
                nbhd = sorted_unique(nbhd);
                if (nbhd.size() != s.size() + 1) continue;
                std::vector<VertexId> shore = s;
                shore.insert(shore.end(), nbhd.begin(), nbhd.end());
                Cut cut = cut_of(g, shore);
                TightCutKind kind{CutKind::BarrierCut, nbhd, {}, cut.complement_shore(g)};
                push(std::move(cut), std::move(kind));
            }
        }
    }
};

}  // namespace

std::optional<std::pair<Cut, TightCutKind>> find_nontrivial_tight_cut(const Multigraph& g) {
    if (!is_matching_covered(g))
        throw GraphError("tight cut search needs a matching covered host");
    CutSearch s{g, true};
    s.barrier_phase();
    if (!s.done()) s.separation_phase();
    if (!s.done()) s.bipartite_phase();
    if (s.found.empty()) return std::nullopt;
    return s.found.front();
}

std::vector<std::pair<Cut, TightCutKind>> nontrivial_tight_cut_candidates(
    const Multigraph& g, bool exhaustive_augment) {
    if (!is_matching_covered(g))
        throw GraphError("tight cut search needs a matching covered host");
    CutSearch s{g, false};
    s.barrier_phase();
    s.separation_phase();
    s.bipartite_phase();
    if (exhaustive_augment && g.num_vertices() <= 10) {
        for (Cut& c : enumerate_tight_cuts_exhaustive(g, 10))
            s.push(std::move(c), TightCutKind{CutKind::Other, {}, {}, {}});
    }
    return std::move(s.found);
}

std::vector<Cut> enumerate_tight_cuts_exhaustive(const Multigraph& g, int bound) {
    if (!is_matching_covered(g))
        throw GraphError("tight cut enumeration needs a matching covered host");
    int n = g.num_vertices();
    if (n > bound)
        throw GraphError("exhaustive tight cut enumeration bound exceeded (" +
                         std::to_string(n) + " > " + std::to_string(bound) + ")");
    auto vs = g.vertices();
    std::vector<Cut> out;
    // shores containing vs[0]: one representative per complement pair;
    // both sides of a tight cut induce connected subgraphs, so prefilter
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
        int size = __builtin_popcount(mask);
        if (size % 2 == 0 || size < 3 || n - size < 3) continue;
        std::vector<VertexId> shore, rest;
        for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? shore : rest).push_back(vs[i]);
        if (!is_connected(g.induced(shore)) || !is_connected(g.induced(rest))) continue;
        if (is_tight_cut(g, shore)) out.push_back(cut_of(g, shore));
    }
    std::sort(out.begin(), out.end(),
              [](const Cut& a, const Cut& b) { return a.shore < b.shore; });
    return out;
}

DecompositionPolicy DecompositionPolicy::parse(const std::string& text) {
    if (text == "det" || text == "deterministic") return deterministic();
    if (text.rfind("seed:", 0) == 0) return seeded(std::stoull(text.substr(5)));
    throw GraphError("unknown decomposition policy: " + text + " (want det or seed:N)");
}

namespace {

DecompositionNode decompose_node(const Multigraph& g, const DecompositionPolicy& policy,
                                 std::mt19937_64* rng, int* label_counter) {
    DecompositionNode node;
    node.graph = g;
    std::optional<std::pair<Cut, TightCutKind>> choice;
    if (policy.mode == DecompositionPolicy::Mode::Deterministic) {
        choice = find_nontrivial_tight_cut(g);
    } else {
        auto candidates = nontrivial_tight_cut_candidates(g, true);
        if (!candidates.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            choice = candidates[pick(*rng)];
        }
    }
    if (!choice) {
        node.verdict = is_bipartite(g) ? LeafVerdict::Brace : LeafVerdict::Brick;
        return node;
    }
    node.cut = choice->first;
    node.kind = choice->second;
    const auto& shore = choice->first.shore;
    auto rest = choice->first.complement_shore(g);
    std::string lx = "c" + std::to_string((*label_counter)++);
    std::string ly = "c" + std::to_string((*label_counter)++);
    Multigraph child_a = contract_shore(g, rest, lx);   // keeps the shore side
    Multigraph child_b = contract_shore(g, shore, ly);  // keeps the complement side
    for (const Multigraph* child : {&child_a, &child_b}) {
        if (child->num_vertices() >= g.num_vertices())
            throw TheoremViolation("contraction failed to shrink the graph");
        if (!is_matching_covered(*child))
            throw TheoremViolation("a tight cut contraction is not matching covered");
    }
    node.children.push_back(decompose_node(child_a, policy, rng, label_counter));
    node.children.push_back(decompose_node(child_b, policy, rng, label_counter));
    return node;
}

void collect_leaves(const DecompositionNode& node,
                    std::vector<const DecompositionNode*>& out) {
    if (node.is_leaf()) {
        out.push_back(&node);
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, out);
}

}  // namespace

std::vector<const DecompositionNode*> DecompositionTree::leaves() const {
    std::vector<const DecompositionNode*> out;
    collect_leaves(root, out);
    return out;
}

std::vector<Certificate> DecompositionTree::simplified_leaf_certificates() const {
    std::vector<Certificate> out;
    for (const auto* leaf : leaves()) out.push_back(canonical_form(underlying_simple(leaf->graph)));
    std::sort(out.begin(), out.end());
    return out;
}

DecompositionTree tight_cut_decomposition(const Multigraph& g,
                                          const DecompositionPolicy& policy) {
    if (!is_matching_covered(g))
        throw GraphError("tight cut decomposition needs a matching covered input");
    std::mt19937_64 rng(policy.seed);
    int label_counter = 0;
    DecompositionTree tree;
    tree.root = decompose_node(g, policy, &rng, &label_counter);
    for (const auto* leaf : tree.leaves())
        (leaf->verdict == LeafVerdict::Brick ? tree.brick_count : tree.brace_count) += 1;
    return tree;
}

int b_count(const Multigraph& g) {
    return tight_cut_decomposition(g).brick_count;
}

bool is_brick(const Multigraph& g) {
    if (g.num_vertices() < 4 || g.num_vertices() % 2) return false;
    if (!is_connected(g)) return false;
    if (vertex_connectivity(g) < 3) return false;
    return is_bicritical(g);
}

bool is_brace(const Multigraph& g) {
    if (!is_bipartite(g)) return false;
    if (!is_matching_covered(g)) return false;
    return !find_nontrivial_tight_cut(g).has_value();
}

bool is_near_brick(const Multigraph& g) { return b_count(g) == 1; }

UncrossResult uncross(const Multigraph& g, const Cut& c, const Cut& d) {
    std::vector<char> in_x(g.vertex_bound(), 0), in_y(g.vertex_bound(), 0);
    for (VertexId v : c.shore) in_x[v] = 1;
    for (VertexId v : d.shore) in_y[v] = 1;
    auto corner = [&](bool x, bool y) {
        std::vector<VertexId> out;
        for (VertexId v : g.vertices())
            if (in_x[v] == x && in_y[v] == y) out.push_back(v);
        return out;
    };
    auto xy = corner(true, true), xyb = corner(true, false), xby = corner(false, true),
         xbyb = corner(false, false);
    const char* empty_name = nullptr;
    if (xy.empty()) empty_name = "X n Y";
    else if (xyb.empty()) empty_name = "X n ~Y";
    else if (xby.empty()) empty_name = "~X n Y";
    else if (xbyb.empty()) empty_name = "~X n ~Y";
    if (empty_name)
        throw GraphError(std::string("cuts are laminar: corner ") + empty_name + " is empty");

    if (!is_tight_cut(g, c.shore) || !is_tight_cut(g, d.shore))
        throw GraphError("uncross needs two tight cuts");

    // normalize so |X n Y| is odd (swap Y with its complement if needed)
    if (xy.size() % 2 == 0) {
        std::swap(xy, xyb);
        std::swap(xby, xbyb);
    }

    UncrossResult res;
    res.corner_xy = static_cast<int>(xy.size());
    res.corner_xy_bar = static_cast<int>(xyb.size());
    res.corner_x_bar_y = static_cast<int>(xby.size());
    res.corner_both_bar = static_cast<int>(xbyb.size());
    res.i = cut_of(g, xy);
    res.u = cut_of(g, xbyb);
    for (VertexId p : xby)
        for (VertexId q : xyb)
            if (g.adjacent(p, q))
                throw TheoremViolation("edge between ~X n Y and X n ~Y after uncrossing");
    if (!is_tight_cut(g, res.i.shore) || !is_tight_cut(g, res.u.shore))
        throw TheoremViolation("uncrossed cut is not tight");
    res.size_identity = (c.size() + d.size() == res.i.size() + res.u.size());
    if (!res.size_identity) throw TheoremViolation("|C|+|D| != |I|+|U| after uncrossing");
    return res;
}

}  // namespace tightcut
