#include "tightcut/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "tightcut/catalog.hpp"
#include "tightcut/connectivity.hpp"
#include "tightcut/graph6.hpp"
#include "tightcut/iso.hpp"
#include "tightcut/json_io.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t graph_seed(std::uint64_t base, const Certificate& cert) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : cert) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return mix64(base ^ h);
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<std::size_t>(jobs, count);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

struct GraphFailures {
    std::vector<std::pair<std::string, nlohmann::json>> items;

    void add(const std::string& detail, nlohmann::json context = {}) {
        items.emplace_back(detail, std::move(context));
    }
    bool empty() const { return items.empty(); }
};

using Checker = std::function<void(const Multigraph&, std::uint64_t, GraphFailures&)>;
using Filter = std::function<bool(const Multigraph&)>;

struct Suite {
    std::string description;
    Filter filter;
    Checker check;
};

bool host_is_efec_brick(const Multigraph& g) {
    return is_essentially_4ec_cubic(g) && is_brick(g);
}

nlohmann::json edge_json(const Multigraph& g, EdgeId e) {
    auto [u, v] = g.ends(e);
    return nlohmann::json{{"edge", e}, {"endpoints", {u, v}}};
}

// ---- suite bodies -------------------------------------------------------

void check_t11(const Multigraph& g, std::uint64_t seed, GraphFailures& out) {
    auto reference = tight_cut_decomposition(g).simplified_leaf_certificates();
    for (int i = 0; i < 100; ++i) {
        auto policy = DecompositionPolicy::seeded(mix64(seed + i));
        auto leaves = tight_cut_decomposition(g, policy).simplified_leaf_certificates();
        if (leaves != reference) {
            out.add("seeded decomposition changed the simplified leaf multiset",
                    nlohmann::json{{"seed_index", i},
                                   {"expected_leaves", reference},
                                   {"got_leaves", leaves}});
            return;
        }
    }
}

void check_t14(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    auto found = find_nontrivial_tight_cut(g);
    auto all = enumerate_tight_cuts_exhaustive(g);
    if (found.has_value() != !all.empty()) {
        out.add("ELP search and exhaustive enumeration disagree",
                nlohmann::json{{"search_found", found.has_value()},
                               {"exhaustive_count", all.size()}});
        return;
    }
    if (found) {
        if (found->first.trivial(g)) out.add("search returned a trivial cut");
        if (!is_tight_cut(g, found->first.shore))
            out.add("search returned a cut that is not tight",
                    nlohmann::json{{"shore", found->first.shore}});
    }
}

void check_t16(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    for (const Cut& c : enumerate_tight_cuts_exhaustive(g))
        if (c.size() != 3)
            out.add("tight cut of a cubic host is not a 3-cut",
                    nlohmann::json{{"shore", c.shore}, {"size", c.size()}});
}

void check_c17(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    bool brick = is_brick(g), brace = is_brace(g);
    if (brick == brace)
        out.add("essentially 4-edge-connected cubic graph is not brick xor brace",
                nlohmann::json{{"brick", brick}, {"brace", brace}});
}

void check_t18(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    auto doubletons = removable_doubletons(g);
    std::set<EdgeId> in_doubleton;
    for (auto [a, b] : doubletons) {
        in_doubleton.insert(a);
        in_doubleton.insert(b);
    }
    for (EdgeId e : g.edges()) {
        bool removable = is_removable(g, e);
        bool doubleton = in_doubleton.count(e) > 0;
        if (removable == doubleton)
            out.add(removable ? "edge is both removable and a doubleton member"
                              : "edge is neither removable nor a doubleton member",
                    edge_json(g, e));
    }
}

void check_t110(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    for (EdgeId e : g.edges()) {
        if (!is_removable(g, e)) continue;
        int b = b_count(g.without_edge(e));
        if (b != 1 && b != 2) {
            auto ctx = edge_json(g, e);
            ctx["b"] = b;
            out.add("removable edge with b outside {1,2}", ctx);
            continue;
        }
        try {
            RemovableStructure s = removable_structure(g, e);
            if (s.b_from_structure != b) {
                auto ctx = edge_json(g, e);
                ctx["b_decomposition"] = b;
                ctx["b_structure"] = s.b_from_structure;
                out.add("structure case tag disagrees with the decomposition", ctx);
            }
        } catch (const std::exception& ex) {
            auto ctx = edge_json(g, e);
            ctx["error"] = ex.what();
            out.add("structure extraction failed", ctx);
        }
    }
}

void check_c112(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    for (const auto& row : classify_all_edges(g)) {
        if (row.verdict == EdgeVerdict::NonRemovable || row.verdict == EdgeVerdict::RemovableOther)
            out.add("edge escapes the doubleton / b-invariant / quasi trichotomy",
                    nlohmann::json{{"edge", row.edge}, {"verdict", to_string(row.verdict)}});
    }
}

void check_t111(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    auto rows = classify_all_edges(g);
    std::map<EdgeId, EdgeVerdict> verdict;
    for (const auto& row : rows) verdict[row.edge] = row.verdict;
    for (VertexId v : g.vertices()) {
        int quasi = 0;
        for (EdgeId e : g.incident(v))
            if (verdict[e] == EdgeVerdict::QuasiBInvariant) ++quasi;
        if (quasi < 2) continue;
        try {
            auto outcome = two_qbinv_vertex_outcome(g, v);
            bool petersen = is_isomorphic(g, catalog("petersen").graph);
            bool cubeplex = is_isomorphic(g, catalog("cubeplex").graph);
            using K = TwoQbinvOutcome::Kind;
            if ((outcome.kind == K::QuasiAndPetersen) != petersen)
                out.add("outcome (ii) does not coincide with the Petersen graph",
                        nlohmann::json{{"vertex", v}});
            if ((outcome.kind == K::DoubletonAndCubeplex) != cubeplex)
                out.add("outcome (i) does not coincide with the Cubeplex",
                        nlohmann::json{{"vertex", v}});
        } catch (const std::exception& ex) {
            out.add("outcome extraction failed",
                    nlohmann::json{{"vertex", v}, {"error", ex.what()}});
        }
    }
}

void check_c113(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    BinvCensus census = binv_census(g);
    if (census.petersen_exception) return;
    for (const auto& [v, covered] : census.vertex_has_class)
        if (!covered)
            out.add("vertex without an incident b-invariant class", nlohmann::json{{"vertex", v}});
}

void check_c114(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    BinvCensus census = binv_census(g);
    if (census.petersen_exception) return;
    if (2 * census.binv_edges < g.num_vertices())
        out.add("fewer than |V|/2 b-invariant edges",
                nlohmann::json{{"binv_edges", census.binv_edges}, {"n", g.num_vertices()}});
}

void check_l15(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    auto cuts = enumerate_tight_cuts_exhaustive(g, 12);
    bool cubic = is_cubic(g);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        std::vector<char> in_x(g.vertex_bound(), 0);
        for (VertexId v : cuts[i].shore) in_x[v] = 1;
        for (std::size_t j = i + 1; j < cuts.size(); ++j) {
            int corner[2][2] = {{0, 0}, {0, 0}};
            for (VertexId v : g.vertices()) {
                bool y = std::binary_search(cuts[j].shore.begin(), cuts[j].shore.end(), v);
                ++corner[in_x[v] ? 1 : 0][y ? 1 : 0];
            }
            if (!corner[0][0] || !corner[0][1] || !corner[1][0] || !corner[1][1]) continue;
            try {
                UncrossResult res = uncross(g, cuts[i], cuts[j]);
                if (cubic && (res.i.size() != 3 || res.u.size() != 3))
                    out.add("uncrossing in a cubic host produced a non-3-cut",
                            nlohmann::json{{"i_size", res.i.size()}, {"u_size", res.u.size()}});
            } catch (const std::exception& ex) {
                out.add("uncrossing failed",
                        nlohmann::json{{"shore_x", cuts[i].shore},
                                       {"shore_y", cuts[j].shore},
                                       {"error", ex.what()}});
            }
        }
    }
}

void check_p34(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    for (EdgeId e : g.edges()) {
        if (!is_removable(g, e)) continue;
        Multigraph reduced = g.without_edge(e);
        for (const auto& barrier : enumerate_barriers(reduced)) {
            if (!is_special_barrier(reduced, barrier)) {
                auto ctx = edge_json(g, e);
                ctx["barrier"] = barrier;
                out.add("barrier of g-e is not special", ctx);
            }
        }
    }
}

void check_p35_39(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    for (EdgeId e : g.edges()) {
        if (!is_removable(g, e)) continue;
        if (b_count(g.without_edge(e)) != 2) continue;
        try {
            RemovableStructure s = qbinv_structure(g, e);
            // shore properties around both barriers (matchability of
            // G[(B-p-q) u (I-v)] and connectivity for |B| >= 3)
            struct Side {
                const std::vector<VertexId>*barrier, *isolated;
                VertexId end;
            };
            for (const Side& side : {Side{&s.barrier, &s.isolated, s.end_v},
                                     Side{&s.barrier_prime, &s.isolated_prime, s.end_u}}) {
                std::vector<VertexId> i_minus;
                for (VertexId w : *side.isolated)
                    if (w != side.end) i_minus.push_back(w);
                const auto& b = *side.barrier;
                for (std::size_t i = 0; i < b.size(); ++i)
                    for (std::size_t j = i + 1; j < b.size(); ++j) {
                        std::vector<VertexId> verts = i_minus;
                        for (VertexId w : b)
                            if (w != b[i] && w != b[j]) verts.push_back(w);
                        if (!has_perfect_matching(g.induced(verts))) {
                            auto ctx = edge_json(g, e);
                            ctx["pair"] = {b[i], b[j]};
                            out.add("G[(B-p-q) u (I-v)] is not matchable", ctx);
                        }
                    }
                if (b.size() >= 3) {
                    std::vector<VertexId> verts = i_minus;
                    verts.insert(verts.end(), b.begin(), b.end());
                    if (!is_connected(g.induced(verts)))
                        out.add("G[B u (I-v)] is not connected", edge_json(g, e));
                }
            }
        } catch (const std::exception& ex) {
            auto ctx = edge_json(g, e);
            ctx["error"] = ex.what();
            out.add("quasi structure extraction failed", ctx);
        }
    }
}

void check_l36(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    for (const Cut& c : enumerate_small_edge_cuts(g, 4)) {
        if (c.size() != 4) continue;
        for (const auto& side : {c.shore, c.complement_shore(g)}) {
            std::vector<char> in_side(g.vertex_bound(), 0);
            for (VertexId v : side) in_side[v] = 1;
            std::map<VertexId, int> cut_ends;
            for (EdgeId e : c.edges) {
                auto [u, v] = g.ends(e);
                ++cut_ends[in_side[u] ? u : v];
            }
            bool shared = false;
            for (const auto& [v, k] : cut_ends)
                if (k >= 2) shared = true;
            if (!shared) continue;
            Multigraph sub = g.induced(side);
            if (sub.num_vertices() != 2 || sub.num_edges() != 1)
                out.add("4-cut shore with a shared cut end does not induce K2",
                        nlohmann::json{{"shore", side}});
        }
    }
}

void check_l41(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    std::map<EdgeId, std::vector<std::vector<VertexId>>> barriers;
    for (EdgeId e : g.edges()) barriers[e] = enumerate_barriers(g.without_edge(e));
    for (VertexId v : g.vertices()) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                for (const auto& b1 : barriers[inc[i]]) {
                    for (const auto& b2 : barriers[inc[j]]) {
                        std::vector<VertexId> common;
                        std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                                              std::back_inserter(common));
                        if (common.size() > 1) {
                            out.add("barriers of g-e1 and g-e2 share two vertices",
                                    nlohmann::json{{"e1", inc[i]},
                                                   {"e2", inc[j]},
                                                   {"common", common}});
                            return;
                        }
                    }
                }
            }
        }
    }
}

void check_l45(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    auto rows = classify_all_edges(g);
    std::map<EdgeId, EdgeVerdict> verdict;
    for (const auto& row : rows) verdict[row.edge] = row.verdict;
    for (VertexId v : g.vertices()) {
        std::vector<EdgeId> quasi;
        for (EdgeId e : g.incident(v))
            if (verdict[e] == EdgeVerdict::QuasiBInvariant) quasi.push_back(e);
        if (quasi.size() < 2) continue;
        std::map<EdgeId, std::size_t> barrier_size;
        for (EdgeId e : quasi)
            barrier_size[e] = qbinv_structure(g, e, v).barrier.size();
        for (std::size_t i = 0; i < quasi.size(); ++i)
            for (std::size_t j = i + 1; j < quasi.size(); ++j)
                if (barrier_size[quasi[i]] != 2 && barrier_size[quasi[j]] != 2)
                    out.add("neither barrier of a quasi pair has cardinality two",
                            nlohmann::json{{"vertex", v},
                                           {"e1", quasi[i]},
                                           {"e2", quasi[j]},
                                           {"sizes",
                                            {barrier_size[quasi[i]], barrier_size[quasi[j]]}}});
        if (quasi.size() == 3) {
            int small = 0;
            for (EdgeId e : quasi) small += barrier_size[e] == 2;
            if (small < 2)
                out.add("fewer than two of the three quasi barriers have cardinality two",
                        nlohmann::json{{"vertex", v}});
        }
    }
}

void check_snark(const Multigraph& g, std::uint64_t, GraphFailures& out) {
    bool colorable = is_3_edge_colorable(g);
    bool near_bip = is_near_bipartite(g);
    if (!colorable) {  // snark
        if (near_bip) out.add("snark with a removable doubleton");
        for (EdgeId e : g.edges())
            if (!is_removable(g, e)) out.add("snark edge is not removable", edge_json(g, e));
    } else if (near_bip) {
        // near-bipartite cubic bricks are 3-edge-colorable: consistent here
    }
    if (near_bip && !colorable) out.add("near-bipartite cubic brick is not 3-edge-colorable");
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table = {
        {"T1.1",
         {"decomposition leaf multiset is invariant under 100 seeded cut orders",
          [](const Multigraph& g) { return is_matching_covered(g); }, check_t11}},
        {"T1.4",
         {"nontrivial tight cut search agrees with exhaustive enumeration",
          [](const Multigraph& g) { return g.num_vertices() <= 14 && is_matching_covered(g); },
          check_t14}},
        {"T1.6",
         {"every tight cut of a cubic matching covered graph is a 3-cut",
          [](const Multigraph& g) {
              return is_cubic(g) && g.num_vertices() <= 14 && is_matching_covered(g);
          },
          check_t16}},
        {"C1.7",
         {"every essentially 4-edge-connected cubic graph is a brick xor a brace",
          [](const Multigraph& g) { return is_essentially_4ec_cubic(g); }, check_c17}},
        {"T1.8",
         {"each edge of an efec cubic brick is removable xor a doubleton member",
          host_is_efec_brick, check_t18}},
        {"T1.10",
         {"each removable edge has b(G-e) in {1,2}, matching the structure case",
          host_is_efec_brick, check_t110}},
        {"C1.12",
         {"the doubleton / b-invariant / quasi-b-invariant trichotomy is exhaustive",
          host_is_efec_brick, check_c112}},
        {"T1.11",
         {"two quasi edges at a vertex: outcome (ii) only for Petersen, (i) only for Cubeplex",
          host_is_efec_brick, check_t111}},
        {"C1.13",
         {"every vertex of an efec cubic brick (except Petersen) meets a b-invariant class",
          host_is_efec_brick, check_c113}},
        {"C1.14",
         {"non-near-bipartite efec cubic bricks (except Petersen) have >= |V|/2 b-invariant edges",
          [](const Multigraph& g) { return host_is_efec_brick(g) && !is_near_bipartite(g); },
          check_c114}},
        {"L1.5",
         {"uncrossing pairs of crossing tight cuts yields tight cuts of matching size",
          [](const Multigraph& g) { return g.num_vertices() <= 12 && is_matching_covered(g); },
          check_l15}},
        {"P3.4",
         {"every barrier of g-e is special for removable e",
          [](const Multigraph& g) { return host_is_efec_brick(g) && g.num_vertices() <= 14; },
          check_p34}},
        {"P3.5-3.9",
         {"the quasi edge structure bundle satisfies its shore and boundary properties",
          host_is_efec_brick, check_p35_39}},
        {"L3.6",
         {"4-cuts with a shared end inside a shore force that shore to induce K2",
          [](const Multigraph& g) {
              return is_essentially_4ec_cubic(g) && g.num_vertices() <= 16;
          },
          check_l36}},
        {"L4.1",
         {"barriers of g-e1 and g-e2 for adjacent edges intersect in at most one vertex",
          [](const Multigraph& g) {
              return is_cubic(g) && g.num_vertices() <= 14 && is_brick(g);
          },
          check_l41}},
        {"L4.5",
         {"of two quasi edges at a vertex, at least one barrier has cardinality two",
          host_is_efec_brick, check_l45}},
        {"SNARK",
         {"snarks are non-near-bipartite with every edge removable",
          host_is_efec_brick, check_snark}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, _] : suites()) out.push_back(id);
        return out;
    }();
    return ids;
}

std::string theorem_description(const std::string& id) {
    auto it = suites().find(id);
    if (it == suites().end()) throw GraphError("unknown theorem id: " + id);
    return it->second.description;
}

TheoremReport verify_theorem(const std::string& id, const std::vector<Multigraph>& corpus,
                             const VerifyOptions& opts) {
    auto it = suites().find(id);
    if (it == suites().end()) throw GraphError("unknown theorem id: " + id);
    const Suite& suite = it->second;

    TheoremReport report;
    report.theorem = id;
    report.corpus = std::to_string(corpus.size()) + " graphs";

    struct Slot {
        bool applicable = false;
        Certificate cert;
        GraphFailures failures;
    };
    std::vector<Slot> slots(corpus.size());
    parallel_for(corpus.size(), opts.jobs, [&](std::size_t i) {
        const Multigraph& g = corpus[i];
        Slot& slot = slots[i];
        slot.cert = canonical_form(g);
        try {
            if (!suite.filter(g)) return;
            slot.applicable = true;
            suite.check(g, graph_seed(opts.seed, slot.cert), slot.failures);
        } catch (const std::exception& ex) {
            slot.applicable = true;
            slot.failures.add(std::string("suite error: ") + ex.what());
        }
    });

    std::vector<std::size_t> order(corpus.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return slots[a].cert < slots[b].cert; });
    for (std::size_t i : order) {
        nlohmann::json line;
        line["canonical"] = slots[i].cert;
        line["n"] = corpus[i].num_vertices();
        line["m"] = corpus[i].num_edges();
        line["applicable"] = slots[i].applicable;
        line["ok"] = slots[i].failures.empty();
        report.graph_lines.push_back(std::move(line));
        if (!slots[i].applicable) {
            ++report.skipped;
            continue;
        }
        ++report.checked;
        if (slots[i].failures.empty()) continue;
        ++report.failed;
        for (auto& [detail, context] : slots[i].failures.items)
            report.witnesses.push_back({graph_to_json(corpus[i]), detail, context});
    }
    return report;
}

nlohmann::json tree_to_json(const DecompositionTree& tree) {
    std::function<nlohmann::json(const DecompositionNode&)> walk =
        [&](const DecompositionNode& node) {
            nlohmann::json j;
            j["graph"] = graph_to_json(node.graph);
            if (node.is_leaf()) {
                j["leaf"] = node.verdict == LeafVerdict::Brick ? "brick" : "brace";
                return j;
            }
            j["cut_shore"] = node.cut->shore;
            switch (node.kind->kind) {
                case CutKind::BarrierCut: j["kind"] = "barrier-cut"; break;
                case CutKind::TwoSeparationCut: j["kind"] = "2-separation-cut"; break;
                case CutKind::Other: j["kind"] = "other"; break;
            }
            j["children"] = nlohmann::json::array();
            for (const auto& child : node.children) j["children"].push_back(walk(child));
            return j;
        };
    nlohmann::json j = walk(tree.root);
    j["bricks"] = tree.brick_count;
    j["braces"] = tree.brace_count;
    return j;
}

nlohmann::json classification_to_json(const EdgeClassification& row) {
    nlohmann::json j;
    j["edge"] = row.edge;
    j["endpoints"] = {row.endpoints.first, row.endpoints.second};
    j["verdict"] = to_string(row.verdict);
    if (row.partner) j["partner"] = *row.partner;
    if (row.b_value) j["b"] = *row.b_value;
    return j;
}

nlohmann::json analyze(const Multigraph& g) {
    nlohmann::json j;
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    j["simple"] = g.is_simple();
    j["connected"] = is_connected(g);
    j["cubic"] = is_cubic(g);
    j["bipartite"] = is_bipartite(g);
    bool mc = is_matching_covered(g);
    j["matching_covered"] = mc;
    if (g.is_simple() && g.num_vertices() <= 62) j["graph6"] = to_graph6(g);
    if (!mc) {
        j["max_matching_size"] = max_matching(g).size();
        return j;
    }
    if (g.num_vertices() >= 4 && g.num_vertices() % 2 == 0)
        j["bicritical"] = is_bicritical(g);
    bool brick = is_brick(g), brace = is_brace(g);
    j["brick"] = brick;
    j["brace"] = brace;
    j["efec"] = is_cubic(g) && is_essentially_4ec_cubic(g);
    auto tree = tight_cut_decomposition(g);
    j["b"] = tree.brick_count;
    j["verdict"] = brick ? "brick" : (brace ? "brace" : "composite");
    j["decomposition"] = tree_to_json(tree);
    if (is_cubic(g) && brick) {
        bool relaxed = !is_essentially_4ec_cubic(g);
        auto rows = classify_all_edges(g, relaxed);
        j["edge_classes"] = nlohmann::json::array();
        std::map<std::string, int> counts;
        for (const auto& row : rows) {
            j["edge_classes"].push_back(classification_to_json(row));
            ++counts[to_string(row.verdict)];
        }
        j["verdict_counts"] = counts;
        j["near_bipartite"] = is_near_bipartite(g);
        j["three_edge_colorable"] = is_3_edge_colorable(g);
        j["snark"] = is_snark(g);
    }
    return j;
}

nlohmann::json report_to_json(const TheoremReport& report) {
    nlohmann::json j;
    j["theorem"] = report.theorem;
    j["description"] = theorem_description(report.theorem);
    j["corpus"] = report.corpus;
    j["checked"] = report.checked;
    j["skipped"] = report.skipped;
    j["failed"] = report.failed;
    j["ok"] = report.ok();
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : report.witnesses)
        j["witnesses"].push_back(nlohmann::json{
            {"graph", w.graph}, {"detail", w.detail}, {"context", w.context}});
    return j;
}

std::vector<std::string> report_jsonl(const TheoremReport& report) {
    std::vector<std::string> lines;
    for (const auto& line : report.graph_lines) lines.push_back(line.dump());
    lines.push_back(report_to_json(report).dump());
    return lines;
}

}  // namespace tightcut
