#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "tightcut/bricks.hpp"
#include "tightcut/catalog.hpp"
#include "tightcut/connectivity.hpp"
#include "tightcut/matching.hpp"

using namespace tightcut;

TEST_CASE("essential 4-edge-connectivity") {
    CHECK(is_essentially_4ec_cubic(catalog("petersen").graph));
    CHECK(is_essentially_4ec_cubic(catalog("k4").graph));
    CHECK(is_essentially_4ec_cubic(catalog("k33").graph));
    CHECK(is_essentially_4ec_cubic(catalog("cubeplex").graph));
    CHECK_FALSE(is_essentially_4ec_cubic(catalog("c6bar").graph));
    CHECK_FALSE(is_essentially_4ec_cubic(catalog("fig3").graph));  // not even cubic

    // Tricorn: a hub with its outer pair spans a nontrivial 3-cut
    auto tricorn = catalog("tricorn").graph;
    CHECK_FALSE(is_essentially_4ec_cubic(tricorn));
    bool found = false;
    for (const Cut& c : enumerate_small_edge_cuts(tricorn, 3))
        if (c.size() == 3 && !c.trivial(tricorn)) found = true;
    CHECK(found);
    CHECK(cut_of(tricorn, {1, 4, 5}).size() == 3);
}

TEST_CASE("removability") {
    auto k4 = catalog("k4").graph;
    for (EdgeId e : k4.edges()) CHECK_FALSE(is_removable(k4, e));

    auto petersen = catalog("petersen").graph;
    for (EdgeId e : petersen.edges()) CHECK(is_removable(petersen, e));

    // Tricorn: exactly the three outer doubled-pair edges are removable
    auto tricorn = catalog("tricorn").graph;
    std::set<std::pair<VertexId, VertexId>> removable;
    for (EdgeId e : tricorn.edges()) {
        if (!is_removable(tricorn, e)) continue;
        auto [u, v] = tricorn.ends(e);
        removable.insert({std::min(u, v), std::max(u, v)});
    }
    CHECK(removable == std::set<std::pair<VertexId, VertexId>>{{4, 5}, {6, 7}, {8, 9}});
}

TEST_CASE("removable doubletons") {
    auto k4 = catalog("k4").graph;
    auto k4_doubletons = removable_doubletons(k4);
    CHECK(k4_doubletons.size() == 3);
    // they are exactly the three perfect matchings of K4
    std::set<std::set<EdgeId>> as_sets;
    for (auto [a, b] : k4_doubletons) as_sets.insert({a, b});
    std::set<std::set<EdgeId>> pms;
    for (const auto& pm : all_perfect_matchings(k4)) pms.insert({pm.begin(), pm.end()});
    CHECK(as_sets == pms);

    CHECK(removable_doubletons(catalog("c6bar").graph).size() == 3);
    CHECK(removable_doubletons(catalog("petersen").graph).empty());
    CHECK(removable_doubletons(catalog("tricorn").graph).empty());

    CHECK(is_near_bipartite(catalog("k4").graph));
    CHECK(is_near_bipartite(catalog("c6bar").graph));
    CHECK(is_near_bipartite(catalog("cubeplex").graph));
    CHECK_FALSE(is_near_bipartite(catalog("petersen").graph));
    CHECK_THROWS_AS(removable_doubletons(catalog("k33").graph), GraphError);

    // every doubleton pair is mutually dependent
    for (const auto& name : {"k4", "c6bar", "cubeplex"}) {
        auto g = catalog(name).graph;
        for (auto [a, b] : removable_doubletons(g)) CHECK(mutually_dependent(g, a, b));
    }
}

TEST_CASE("edge classification on the named graphs") {
    auto petersen = catalog("petersen").graph;
    for (const auto& row : classify_all_edges(petersen)) {
        CHECK(row.verdict == EdgeVerdict::QuasiBInvariant);
        CHECK(row.b_value == 2);
    }

    auto fig4 = catalog("fig4").graph;
    std::map<std::pair<VertexId, VertexId>, EdgeVerdict> want = {
        {{0, 1}, EdgeVerdict::QuasiBInvariant},
        {{0, 2}, EdgeVerdict::QuasiBInvariant},
        {{0, 3}, EdgeVerdict::BInvariant},
    };
    for (const auto& row : classify_all_edges(fig4)) {
        auto key = std::make_pair(std::min(row.endpoints.first, row.endpoints.second),
                                  std::max(row.endpoints.first, row.endpoints.second));
        auto it = want.find(key);
        if (it != want.end()) CHECK(row.verdict == it->second);
    }

    // fig5: the marked edge is removable with b = 3 (relaxed host)
    auto fig5 = catalog("fig5-left").graph;
    auto row = classify_edge(fig5, *fig5.find_edge(0, 1), /*relaxed=*/true);
    CHECK(row.verdict == EdgeVerdict::RemovableOther);
    CHECK(row.b_value == 3);
    CHECK_THROWS_AS(classify_edge(fig5, *fig5.find_edge(0, 1)), GraphError);  // strict

    // K4: every edge is a doubleton member with the opposite edge partner
    auto k4 = catalog("k4").graph;
    for (const auto& r : classify_all_edges(k4)) {
        CHECK(r.verdict == EdgeVerdict::DoubletonMember);
        REQUIRE(r.partner.has_value());
        auto [a, b] = k4.ends(r.edge);
        auto [c, d] = k4.ends(*r.partner);
        CHECK(a != c);
        CHECK(a != d);
        CHECK(b != c);
        CHECK(b != d);
    }

    CHECK_THROWS_AS(classify_all_edges(catalog("k33").graph), GraphError);  // not a brick
}

TEST_CASE("3-edge-coloring and snarks") {
    CHECK(is_3_edge_colorable(catalog("c6bar").graph));
    CHECK(is_3_edge_colorable(catalog("k4").graph));
    CHECK(is_3_edge_colorable(catalog("k33").graph));
    CHECK(is_3_edge_colorable(catalog("tricorn").graph));
    CHECK(is_3_edge_colorable(catalog("cubeplex").graph));
    CHECK_FALSE(is_3_edge_colorable(catalog("petersen").graph));

    CHECK(is_snark(catalog("petersen").graph));
    CHECK_FALSE(is_snark(catalog("cubeplex").graph));
    CHECK_FALSE(is_snark(catalog("c6bar").graph));
    CHECK_THROWS_AS(is_snark(catalog("fig3").graph), GraphError);

    // a theta multigraph is cubic and 3-edge-colorable
    Multigraph theta(2);
    theta.add_edge(0, 1);
    theta.add_edge(0, 1);
    theta.add_edge(0, 1);
    CHECK(is_3_edge_colorable(theta));
}

TEST_CASE("removable structure of Petersen deletions") {
    auto petersen = catalog("petersen").graph;
    for (EdgeId e : petersen.edges()) {
        RemovableStructure s = removable_structure(petersen, e);
        CHECK(s.tag == RemovableStructure::Case::TwoBarrier);
        CHECK_FALSE(s.h_is_brick);
        CHECK(s.b_from_structure == 2);
        REQUIRE(s.fig.has_value());
        CHECK(s.barrier.size() == 2);
        CHECK(s.barrier_prime.size() == 2);
        CHECK(s.fig->shore_l.size() == 2);
        CHECK(s.fig->shore_l_prime.size() == 2);
        CHECK(is_isomorphic(s.fig->j, catalog("k4").graph));
        CHECK(is_isomorphic(s.fig->j_prime, catalog("k4").graph));
    }
}

TEST_CASE("removable structure of fig4 edges tracks b") {
    auto fig4 = catalog("fig4").graph;
    for (const auto& row : classify_all_edges(fig4)) {
        if (row.verdict == EdgeVerdict::DoubletonMember ||
            row.verdict == EdgeVerdict::NonRemovable)
            continue;
        RemovableStructure s = removable_structure(fig4, row.edge);
        CHECK(s.b_from_structure == row.b_value);
    }
    // non-removable edges are rejected
    auto k4 = catalog("k4").graph;
    CHECK_THROWS_AS(removable_structure(k4, 0), GraphError);
    auto tricorn = catalog("tricorn").graph;
    CHECK_THROWS_AS(removable_structure(tricorn, 0), GraphError);  // host not efec
}

TEST_CASE("qbinv structure carries the labeled bundle") {
    auto petersen = catalog("petersen").graph;
    EdgeId e = *petersen.find_edge(0, 1);
    RemovableStructure s = qbinv_structure(petersen, e, 0);
    CHECK(s.end_v == 0);
    REQUIRE(s.fig.has_value());
    const auto& fig = *s.fig;
    // the link edge sits at x and x' with the boundary edges around it
    auto [x, xp] = fig.j.ends(fig.link_in_j);
    CHECK(((x == s.x && xp == s.x_prime) || (x == s.x_prime && xp == s.x)));
    // d,f leave x; d',f' leave x'; g,h and g',h' live only in J'
    CHECK(fig.j.has_edge(fig.d));
    CHECK(fig.j.has_edge(fig.f));
    CHECK(fig.j.has_edge(fig.d_prime));
    CHECK(fig.j.has_edge(fig.f_prime));
    CHECK_FALSE(fig.j.has_edge(fig.g));
    CHECK(fig.j_prime.has_edge(fig.g));
    CHECK(fig.j_prime.has_edge(fig.h_prime));

    // binv edges are not accepted
    auto fig4 = catalog("fig4").graph;
    CHECK_THROWS_AS(qbinv_structure(fig4, *fig4.find_edge(0, 3)), TheoremViolation);
}

TEST_CASE("inflexibility") {
    auto k4 = catalog("k4").graph;
    for (EdgeId e : k4.edges()) {
        auto rep = is_inflexible(k4, e);
        CHECK(rep.inflexible);
        REQUIRE(rep.doubletons.has_value());
    }

    // J bricks extracted from quasi edges: flexible ones admit a perfect
    // matching through any boundary combination (checked by enumeration)
    for (const auto& name : {"petersen", "cubeplex", "fig4"}) {
        auto g = catalog(name).graph;
        for (const auto& row : classify_all_edges(g)) {
            if (row.verdict != EdgeVerdict::QuasiBInvariant) continue;
            RemovableStructure s = qbinv_structure(g, row.edge);
            for (const Multigraph* j : {&s.fig->j, &s.fig->j_prime}) {
                EdgeId link = (j == &s.fig->j) ? s.fig->link_in_j : s.fig->link_in_j_prime;
                auto rep = is_inflexible(*j, link);
                auto [x, xp] = j->ends(link);
                std::vector<EdgeId> at_x, at_xp;
                for (EdgeId ed : j->incident(x))
                    if (ed != link) at_x.push_back(ed);
                for (EdgeId ed : j->incident(xp))
                    if (ed != link) at_xp.push_back(ed);
                if (!rep.inflexible) {
                    for (EdgeId a : at_x) {
                        for (EdgeId b : at_xp) {
                            bool joint = false;
                            for (const auto& pm : all_perfect_matchings(*j)) {
                                if (std::count(pm.begin(), pm.end(), a) &&
                                    std::count(pm.begin(), pm.end(), b))
                                    joint = true;
                            }
                            CHECK(joint);
                        }
                    }
                } else {
                    auto [p1, p2] = *rep.doubletons;
                    for (auto [a, b] : {p1, p2}) {
                        Multigraph h = j->without_edge(a).without_edge(b);
                        CHECK(is_bipartite(h));
                        CHECK(is_matching_covered(h));
                    }
                }
            }
        }
    }
}

TEST_CASE("outcomes at vertices with two quasi edges") {
    auto petersen = catalog("petersen").graph;
    for (VertexId v : petersen.vertices()) {
        auto out = two_qbinv_vertex_outcome(petersen, v);
        CHECK(out.kind == TwoQbinvOutcome::Kind::QuasiAndPetersen);
    }

    auto cubeplex = catalog("cubeplex").graph;
    auto out = two_qbinv_vertex_outcome(cubeplex, *cubeplex.vertex_with_label("v"));
    CHECK(out.kind == TwoQbinvOutcome::Kind::DoubletonAndCubeplex);
    CHECK(out.third_edge == *cubeplex.find_edge(0, 3));

    auto fig4 = catalog("fig4").graph;
    auto out4 = two_qbinv_vertex_outcome(fig4, 0);
    CHECK(out4.kind == TwoQbinvOutcome::Kind::BInvariant);
    CHECK(out4.third_edge == *fig4.find_edge(0, 3));

    // a vertex with fewer than two quasi edges is rejected
    CHECK_THROWS_AS(two_qbinv_vertex_outcome(catalog("k4").graph, 0), GraphError);
}

TEST_CASE("b-invariant census") {
    auto petersen_census = binv_census(catalog("petersen").graph);
    CHECK(petersen_census.binv_edges == 0);
    CHECK(petersen_census.petersen_exception);
    CHECK_FALSE(petersen_census.all_vertices_covered);

    auto fig4_census = binv_census(catalog("fig4").graph);
    CHECK(fig4_census.petersen_exception == false);
    CHECK(fig4_census.all_vertices_covered);
    CHECK(fig4_census.doubletons == 0);  // non-near-bipartite
    CHECK(fig4_census.binv_edges >= 7);  // >= |V|/2

    auto k4_census = binv_census(catalog("k4").graph);
    CHECK(k4_census.binv_edges == 0);
    CHECK(k4_census.doubletons == 3);
    CHECK(k4_census.all_vertices_covered);

    auto cubeplex_census = binv_census(catalog("cubeplex").graph);
    CHECK(cubeplex_census.all_vertices_covered);
}
