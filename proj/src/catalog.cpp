#include "tightcut/catalog.hpp"

#include <algorithm>
#include <map>

#include "tightcut/bricks.hpp"
#include "tightcut/connectivity.hpp"
#include "tightcut/iso.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/tightcut.hpp"

namespace tightcut {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Multigraph build(int n, const EdgeList& edges,
                 const std::vector<std::pair<int, std::string>>& labels = {}) {
    Multigraph g = Multigraph::from_edges(n, edges);
    for (const auto& [v, l] : labels) g.set_label(v, l);
    return g;
}

CatalogEntry make_k4() {
    CatalogEntry e;
    e.name = "k4";
    e.provenance = "complete graph on four vertices";
    e.graph = build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    e.facts = {{"vertices", 4},
               {"edges", 6},
               {"cubic", true},
               {"brick", true},
               {"efec", true},
               {"b", 1},
               {"removable_edge_count", 0},
               {"removable_doubleton_count", 3},
               {"near_bipartite", true},
               {"three_edge_colorable", true},
               {"snark", false},
               {"perfect_matching_count", 3}};
    return e;
}

CatalogEntry make_c6bar() {
    CatalogEntry e;
    e.name = "c6bar";
    e.provenance = "triangular prism (complement of the 6-cycle)";
    // triangles {0,1,2} and {3,4,5}, rungs i <-> i+3
    e.graph = build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    e.facts = {{"vertices", 6},
               {"edges", 9},
               {"cubic", true},
               {"brick", true},
               {"efec", false},
               {"b", 1},
               {"removable_edge_count", 0},
               {"removable_doubleton_count", 3},
               {"near_bipartite", true},
               {"three_edge_colorable", true},
               // the triangle shore carries a nontrivial 3-cut that is not tight
               {"shore_cut_size", nlohmann::json{{"shore", {0, 1, 2}}, {"size", 3}}},
               {"shore_tight", nlohmann::json{{"shore", {0, 1, 2}}, {"tight", false}}},
               {"perfect_matching_count", 4}};
    return e;
}

CatalogEntry make_k33() {
    CatalogEntry e;
    e.name = "k33";
    e.provenance = "complete bipartite graph K3,3";
    e.graph = build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    e.facts = {{"vertices", 6},
               {"edges", 9},
               {"cubic", true},
               {"brace", true},
               {"brick", false},
               {"bicritical", false},
               {"efec", true},
               {"b", 0},
               {"matching_covered", true}};
    return e;
}

CatalogEntry make_petersen() {
    CatalogEntry e;
    e.name = "petersen";
    e.provenance = "Petersen graph";
    e.graph = build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},      // outer cycle
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},      // spokes
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});    // inner pentagram
    e.facts = {{"vertices", 10},
               {"edges", 15},
               {"cubic", true},
               {"brick", true},
               {"bicritical", true},
               {"efec", true},
               {"b", 1},
               {"near_bipartite", false},
               {"removable_doubleton_count", 0},
               {"removable_edge_count", 15},
               {"quasi_edge_count", 15},
               {"binv_edge_count", 0},
               {"snark", true},
               {"three_edge_colorable", false},
               {"perfect_matching_count", 6},
               {"outcome_at", nlohmann::json{{"vertex", 0}, {"kind", "quasi-petersen"}}}};
    return e;
}

CatalogEntry make_tricorn() {
    CatalogEntry e;
    e.name = "tricorn";
    e.provenance = "Tricorn: non-near-bipartite cubic brick with exactly three removable edges";
    // 0 centre; 1,2,3 hubs; 4..9 outer hexagon, hub i above outer pair
    e.graph = build(10, {{0, 1}, {0, 2}, {0, 3},                  // centre to hubs
                         {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9},  // hub to outer
                         {4, 5}, {6, 7}, {8, 9},                  // outer: removable three
                         {5, 6}, {7, 8}, {9, 4}});                // outer: the rest
    e.facts = {{"vertices", 10},
               {"edges", 15},
               {"cubic", true},
               {"brick", true},
               {"efec", false},
               {"near_bipartite", false},
               {"removable_edge_count", 3},
               {"removable_edges_exact", nlohmann::json::array({{4, 5}, {6, 7}, {8, 9}})},
               {"removable_all_binv", true},
               {"has_nontrivial_3cut", true},
               {"three_edge_colorable", true}};
    return e;
}

CatalogEntry make_fig1() {
    CatalogEntry e;
    e.name = "fig1";
    e.provenance = "catalogue: cubic graph with a nontrivial tight cut; contractions K4 and K3,3";
    // triangle {0,1,2}; 3,4,5 carry the cut edges; 6,7 complete the K3,3 side
    e.graph = build(8, {{0, 1}, {1, 2}, {2, 0},
                        {0, 3}, {1, 4}, {2, 5},
                        {6, 3}, {6, 4}, {6, 5}, {7, 3}, {7, 4}, {7, 5}});
    e.facts = {{"vertices", 8},
               {"edges", 12},
               {"cubic", true},
               {"matching_covered", true},
               {"brick", false},
               {"b", 1},
               {"shore_tight", nlohmann::json{{"shore", {0, 1, 2}}, {"tight", true}}},
               {"special_barrier", nlohmann::json::array({3, 4, 5})},
               {"decomposes_to", nlohmann::json::array({"k33", "k4"})}};
    return e;
}

CatalogEntry make_fig3() {
    CatalogEntry e;
    e.name = "fig3";
    e.provenance = "catalogue: bicritical graph that is not a brick";
    // degree-4 vertices 4,5 form the unique 2-vertex-cut
    e.graph = build(6, {{0, 1}, {0, 4}, {1, 4}, {0, 5}, {1, 5},
                        {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    e.facts = {{"vertices", 6},
               {"edges", 10},
               {"bicritical", true},
               {"brick", false},
               {"matching_covered", true},
               {"vertex_connectivity", 2},
               {"unique_two_cut", nlohmann::json::array({4, 5})},
               {"b", 2},
               {"decomposes_to", nlohmann::json::array({"k4", "k4"})}};
    return e;
}

CatalogEntry make_fig4() {
    CatalogEntry e;
    e.name = "fig4";
    e.provenance =
        "catalogue: smallest essentially 4-edge-connected cubic brick with a vertex incident to "
        "exactly two quasi-b-invariant edges";
    e.graph = build(
        14,
        {{0, 1}, {0, 2}, {0, 3},            // v to u1,u2,u3
         {1, 9}, {1, 10},                   // u1 down
         {2, 4}, {2, 6},                    // u2 to outer columns
         {3, 5}, {3, 7},                    // u3 to outer columns
         {4, 5}, {6, 7},                    // column tops
         {4, 8}, {5, 9}, {6, 11}, {7, 10},  // columns down
         {12, 9}, {12, 8}, {12, 11},        // w
         {13, 10}, {13, 8}, {13, 11}},      // z
        {{0, "v"}, {1, "u1"}, {2, "u2"}, {3, "u3"}});
    e.facts = {{"vertices", 14},
               {"edges", 21},
               {"cubic", true},
               {"brick", true},
               {"efec", true},
               {"edge_verdict", nlohmann::json::array(
                                    {nlohmann::json{{"edge", {0, 1}}, {"verdict", "quasi-b-invariant"}},
                                     nlohmann::json{{"edge", {0, 2}}, {"verdict", "quasi-b-invariant"}},
                                     nlohmann::json{{"edge", {0, 3}}, {"verdict", "b-invariant"}}})},
               {"outcome_at", nlohmann::json{{"vertex", 0}, {"kind", "b-invariant"}}}};
    return e;
}

EdgeList fig5_base() {
    // shared frame of the two 16-vertex bricks: 0,1 carry the marked
    // edge; 2..7 and 8..13 the two side gadgets; 14,15 the apexes
    return {{0, 1},
            {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 6}, {5, 7},
            {1, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 1}, {8, 12}, {11, 13},
            {14, 7}, {14, 13}, {15, 6}, {15, 12},
            {7, 3}, {6, 4}, {13, 12}};
}

CatalogEntry make_fig5(bool left) {
    CatalogEntry e;
    e.name = left ? "fig5-left" : "fig5-right";
    e.provenance = "catalogue: cubic brick whose marked removable edge leaves three bricks";
    EdgeList edges = fig5_base();
    if (left) {
        edges.push_back({14, 10});
        edges.push_back({15, 9});
    } else {
        edges.push_back({14, 9});
        edges.push_back({15, 10});
    }
    e.graph = build(16, edges);
    e.facts = {{"vertices", 16},
               {"edges", 24},
               {"cubic", true},
               {"brick", true},
               {"efec", false},
               {"marked_edge", nlohmann::json::array({0, 1})},
               {"marked_edge_removable", true},
               {"marked_edge_b", 3},
               {"marked_edge_leaves", nlohmann::json::array({"k4", "k4", "k4"})}};
    return e;
}

CatalogEntry make_cubeplex() {
    CatalogEntry e;
    e.name = "cubeplex";
    e.provenance = "Cubeplex: one of the two minimally non-Pfaffian near-bipartite graphs";
    e.graph = build(12,
                    {{0, 1}, {0, 2}, {0, 3},          // v to u1,u2,u3
                     {1, 8}, {1, 9},                  // u1 to s1,t1
                     {2, 4}, {2, 6},                  // u2 to s2,t2
                     {3, 5}, {3, 7},                  // u3 to t3,s3
                     {4, 5}, {6, 7},                  // s2-t3, t2-s3
                     {5, 8}, {9, 7},                  // t3-s1, t1-s3
                     {4, 10}, {10, 6},                // s2-y, y-t2
                     {11, 8}, {11, 9}, {11, 10}},     // y' to s1,t1,y
                    {{0, "v"}, {1, "u1"}, {2, "u2"}, {3, "u3"}, {10, "y"}, {11, "y'"}});
    e.facts = {{"vertices", 12},
               {"edges", 18},
               {"cubic", true},
               {"brick", true},
               {"efec", true},
               {"near_bipartite", true},
               {"three_edge_colorable", true},
               {"snark", false},
               {"outcome_at", nlohmann::json{{"vertex", 0}, {"kind", "doubleton-cubeplex"}}}};
    return e;
}

const std::map<std::string, CatalogEntry (*)()>& builders() {
    static const std::map<std::string, CatalogEntry (*)()> m = {
        {"k4", make_k4},
        {"c6bar", make_c6bar},
        {"k33", make_k33},
        {"petersen", make_petersen},
        {"tricorn", make_tricorn},
        {"fig1", make_fig1},
        {"fig3", make_fig3},
        {"fig4", make_fig4},
        {"fig5-left", []() { return make_fig5(true); }},
        {"fig5-right", []() { return make_fig5(false); }},
        {"cubeplex", make_cubeplex},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : builders()) out.push_back(name);
        return out;
    }();
    return names;
}

CatalogEntry catalog(const std::string& name) {
    auto it = builders().find(name);
    if (it == builders().end()) throw GraphError("unknown catalog name: " + name);
    return it->second();
}

namespace {

nlohmann::json compute_fact(const CatalogEntry& entry, const KnownFact& fact) {
    const Multigraph& g = entry.graph;
    const std::string& key = fact.key;
    if (key == "vertices") return g.num_vertices();
    if (key == "edges") return g.num_edges();
    if (key == "cubic") return is_cubic(g);
    if (key == "connected") return is_connected(g);
    if (key == "matching_covered") return is_matching_covered(g);
    if (key == "bicritical") return is_bicritical(g);
    if (key == "brick") return is_brick(g);
    if (key == "brace") return is_brace(g);
    if (key == "efec") return is_essentially_4ec_cubic(g);
    if (key == "b") return b_count(g);
    if (key == "near_bipartite") return is_near_bipartite(g);
    if (key == "snark") return is_snark(g);
    if (key == "three_edge_colorable") return is_3_edge_colorable(g);
    if (key == "perfect_matching_count") return count_perfect_matchings(g);
    if (key == "vertex_connectivity") return vertex_connectivity(g);
    if (key == "removable_doubleton_count")
        return removable_doubletons(g).size();
    if (key == "removable_edge_count") {
        int c = 0;
        for (EdgeId e : g.edges()) c += is_removable(g, e);
        return c;
    }
    if (key == "removable_edges_exact") {
        nlohmann::json arr = nlohmann::json::array();
        for (EdgeId e : g.edges()) {
            if (!is_removable(g, e)) continue;
            auto [u, v] = g.ends(e);
            arr.push_back({std::min(u, v), std::max(u, v)});
        }
        return arr;
    }
    if (key == "removable_all_binv") {
        for (EdgeId e : g.edges())
            if (is_removable(g, e) && b_count(g.without_edge(e)) != 1) return false;
        return true;
    }
    if (key == "quasi_edge_count" || key == "binv_edge_count") {
        int c = 0;
        for (const auto& row : classify_all_edges(g, /*relaxed=*/true))
            c += (row.verdict == (key == "quasi_edge_count" ? EdgeVerdict::QuasiBInvariant
                                                            : EdgeVerdict::BInvariant));
        return c;
    }
    if (key == "has_nontrivial_3cut") {
        for (const Cut& c : enumerate_small_edge_cuts(g, 3))
            if (c.size() == 3 && !c.trivial(g)) return true;
        return false;
    }
    if (key == "shore_cut_size")
        return nlohmann::json{{"shore", fact.expected["shore"]},
                              {"size", cut_of(g, fact.expected["shore"].get<std::vector<int>>()).size()}};
    if (key == "shore_tight")
        return nlohmann::json{{"shore", fact.expected["shore"]},
                              {"tight", is_tight_cut(g, fact.expected["shore"].get<std::vector<int>>())}};
    if (key == "special_barrier")
        return is_special_barrier(g, fact.expected.get<std::vector<int>>())
                   ? fact.expected
                   : nlohmann::json("not a special barrier");
    if (key == "unique_two_cut") {
        auto vs = g.vertices();
        nlohmann::json cuts = nlohmann::json::array();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (components(g.without_vertices({vs[i], vs[j]})).size() > 1)
                    cuts.push_back({vs[i], vs[j]});
        if (cuts.size() == 1) return cuts[0];
        return cuts;
    }
    if (key == "decomposes_to" || key == "marked_edge_leaves") {
        Multigraph host = g;
        if (key == "marked_edge_leaves") {
            for (const auto& f : entry.facts)
                if (f.key == "marked_edge")
                    host = g.without_edge(
                        *g.find_edge(f.expected[0].get<int>(), f.expected[1].get<int>()));
        }
        auto tree = tight_cut_decomposition(host);
        std::vector<Certificate> certs;
        if (key == "marked_edge_leaves") {
            // the pinned fact is about the brick leaves only
            for (const auto* leaf : tree.leaves())
                if (leaf->verdict == LeafVerdict::Brick)
                    certs.push_back(canonical_form(underlying_simple(leaf->graph)));
        } else {
            certs = tree.simplified_leaf_certificates();
        }
        std::vector<std::string> names;
        for (const Certificate& cert : certs) {
            std::string found = "?";
            for (const auto& name : catalog_names())
                if (canonical_form(underlying_simple(catalog(name).graph)) == cert) {
                    found = name;
                    break;
                }
            names.push_back(found);
        }
        std::sort(names.begin(), names.end());
        return names;
    }
    if (key == "marked_edge") return fact.expected;  // declarative anchor
    if (key == "marked_edge_removable" || key == "marked_edge_b") {
        for (const auto& f : entry.facts) {
            if (f.key != "marked_edge") continue;
            EdgeId e = *g.find_edge(f.expected[0].get<int>(), f.expected[1].get<int>());
            if (key == "marked_edge_removable") return is_removable(g, e);
            return b_count(g.without_edge(e));
        }
        return nullptr;
    }
    if (key == "edge_verdict") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& item : fact.expected) {
            EdgeId e = *g.find_edge(item["edge"][0].get<int>(), item["edge"][1].get<int>());
            auto row = classify_edge(g, e, /*relaxed=*/true);
            arr.push_back(nlohmann::json{{"edge", item["edge"]}, {"verdict", to_string(row.verdict)}});
        }
        return arr;
    }
    if (key == "outcome_at") {
        auto out = two_qbinv_vertex_outcome(g, fact.expected["vertex"].get<int>());
        std::string kind;
        switch (out.kind) {
            case TwoQbinvOutcome::Kind::DoubletonAndCubeplex: kind = "doubleton-cubeplex"; break;
            case TwoQbinvOutcome::Kind::QuasiAndPetersen: kind = "quasi-petersen"; break;
            case TwoQbinvOutcome::Kind::BInvariant: kind = "b-invariant"; break;
        }
        return nlohmann::json{{"vertex", fact.expected["vertex"]}, {"kind", kind}};
    }
    throw GraphError("unknown known-fact key: " + key);
}

}  // namespace

std::vector<FactCheck> check_known_facts(const CatalogEntry& entry) {
    std::vector<FactCheck> out;
    for (const auto& fact : entry.facts) {
        FactCheck check;
        check.key = fact.key;
        check.expected = fact.expected;
        try {
            check.actual = compute_fact(entry, fact);
            check.ok = (check.actual == check.expected);
        } catch (const std::exception& ex) {
            check.actual = std::string("error: ") + ex.what();
            check.ok = false;
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace tightcut
