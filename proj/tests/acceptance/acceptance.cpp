// Acceptance suite: one pass/fail line per criterion.  Exit code 0 iff
// every criterion passes.  An optional argv[1] selects a single
// criterion number.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tightcut/bricks.hpp"
#include "tightcut/catalog.hpp"
#include "tightcut/corpus.hpp"
#include "tightcut/iso.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/tightcut.hpp"
#include "tightcut/verify.hpp"

using namespace tightcut;

namespace {

std::vector<Multigraph> cubic_corpus(std::initializer_list<int> ns) {
    std::vector<Multigraph> corpus;
    for (int n : ns) {
        const auto& level = generated_cubic(n);
        corpus.insert(corpus.end(), level.begin(), level.end());
    }
    return corpus;
}

bool run_suite(const std::string& id, const std::vector<Multigraph>& corpus,
               std::string& detail, std::uint64_t seed = 12345) {
    auto report = verify_theorem(id, corpus, {0, seed});
    detail += id + ": " + std::to_string(report.checked) + " checked";
    if (!report.ok()) {
        detail += ", " + std::to_string(report.failed) + " FAILED";
        for (std::size_t i = 0; i < report.witnesses.size() && i < 3; ++i)
            detail += " [" + report.witnesses[i].detail + "]";
        return false;
    }
    detail += "; ";
    return true;
}

// --- criterion 1: oracle gates ------------------------------------------

bool criterion1(std::string& detail) {
    long checked = 0;
    for (int n = 1; n <= 8; ++n) {
        for (const auto& g : oracles::all_connected_graphs(n)) {
            if (max_matching(g).size() != oracles::exhaustive_max_matching(g)) {
                detail = "blossom/exhaustive mismatch on " + std::to_string(n) + " vertices";
                return false;
            }
            ++checked;
        }
    }
    detail += "blossom==exhaustive on " + std::to_string(checked) + " connected graphs (n<=8)";

    for (const auto& g : random_graphs(1000, 10, 7001)) {
        if (max_matching(g).size() != oracles::exhaustive_max_matching(g)) {
            detail = "blossom/exhaustive mismatch on a random 10-vertex graph";
            return false;
        }
    }
    detail += ", 1000 random n=10";

    long elp = 0;
    for (const auto& g : cubic_corpus({4, 6, 8, 10})) {
        if (!is_matching_covered(g)) continue;
        auto found = find_nontrivial_tight_cut(g);
        auto all = enumerate_tight_cuts_exhaustive(g, 10);
        if (found.has_value() != !all.empty()) {
            detail = "ELP search disagrees with exhaustive enumeration";
            return false;
        }
        if (found && !is_tight_cut(g, found->first.shore)) {
            detail = "ELP search returned a non-tight cut";
            return false;
        }
        ++elp;
    }
    detail += ", ELP==exhaustive on " + std::to_string(elp) + " cubic matching covered (n<=10)";
    return true;
}

bool criterion2(std::string& detail) {
    return run_suite("T1.6", cubic_corpus({4, 6, 8, 10, 12}), detail);
}

bool criterion3(std::string& detail) {
    return run_suite("C1.7", cubic_corpus({4, 6, 8, 10, 12}), detail);
}

bool criterion4(std::string& detail) {
    auto corpus = cubic_corpus({4, 6, 8, 10, 12});
    return run_suite("T1.8", corpus, detail) && run_suite("C1.12", corpus, detail);
}

bool criterion5(std::string& detail) {
    return run_suite("T1.10", cubic_corpus({4, 6, 8, 10, 12}), detail);
}

bool criterion6(std::string& detail) {
    auto petersen = catalog("petersen").graph;
    auto rows = classify_all_edges(petersen);
    for (const auto& row : rows) {
        if (row.verdict != EdgeVerdict::QuasiBInvariant) {
            detail = "a Petersen edge is not quasi-b-invariant";
            return false;
        }
    }
    Certificate k4 = canonical_form(catalog("k4").graph);
    for (EdgeId e : petersen.edges()) {
        if (!is_removable(petersen, e)) {
            detail = "a Petersen edge is not removable";
            return false;
        }
        auto tree = tight_cut_decomposition(petersen.without_edge(e));
        if (tree.brick_count != 2) {
            detail = "a Petersen deletion does not leave two bricks";
            return false;
        }
        for (const auto* leaf : tree.leaves()) {
            if (leaf->verdict == LeafVerdict::Brick &&
                canonical_form(underlying_simple(leaf->graph)) != k4) {
                detail = "a Petersen deletion brick is not K4 up to multiplicity";
                return false;
            }
        }
    }
    if (!is_snark(petersen)) {
        detail = "Petersen is not recognised as a snark";
        return false;
    }
    detail = "15 quasi edges; every deletion leaves two K4 bricks; snark with all edges removable";
    return true;
}

bool criterion7(std::string& detail) {
    auto corpus = cubic_corpus({10, 12});
    if (!run_suite("T1.11", corpus, detail)) return false;

    // outcome (ii) and (i) are realized exactly once each in this corpus
    int petersen_hits = 0, cubeplex_hits = 0;
    for (const auto& g : corpus) {
        if (!is_essentially_4ec_cubic(g) || !is_brick(g)) continue;
        if (is_isomorphic(g, catalog("petersen").graph)) ++petersen_hits;
        if (is_isomorphic(g, catalog("cubeplex").graph)) ++cubeplex_hits;
    }
    if (petersen_hits != 1 || cubeplex_hits != 1) {
        detail = "corpus does not contain Petersen and Cubeplex exactly once";
        return false;
    }
    auto fig4 = catalog("fig4").graph;
    auto outcome = two_qbinv_vertex_outcome(fig4, *fig4.vertex_with_label("v"));
    if (outcome.kind != TwoQbinvOutcome::Kind::BInvariant) {
        detail = "fig4 does not realize outcome (iii) at v";
        return false;
    }
    detail += "fig4 realizes outcome (iii)";
    return true;
}

bool criterion8(std::string& detail) {
    auto corpus = cubic_corpus({4, 6, 8, 10, 12});
    corpus.push_back(catalog("fig4").graph);
    return run_suite("C1.13", corpus, detail) && run_suite("C1.14", corpus, detail);
}

bool criterion9(std::string& detail) {
    long facts = 0;
    for (const auto& name : catalog_names()) {
        auto entry = catalog(name);
        for (const auto& check : check_known_facts(entry)) {
            ++facts;
            if (!check.ok) {
                detail = name + "/" + check.key + ": expected " + check.expected.dump() +
                         ", got " + check.actual.dump();
                return false;
            }
        }
    }
    detail = std::to_string(facts) + " catalog facts verified (K4/prism doubletons, Tricorn, "
             "fig1, fig3, fig5 marked edges among them)";
    return true;
}

bool criterion10(std::string& detail) {
    std::vector<Multigraph> corpus;
    for (const auto& g : cubic_corpus({4, 6, 8, 10}))
        if (is_matching_covered(g)) corpus.push_back(g);
    for (auto& g : random_matching_covered(200, 12, 424242)) corpus.push_back(std::move(g));
    return run_suite("T1.1", corpus, detail);
}

bool criterion11(std::string& detail) {
    std::vector<Multigraph> l15_corpus = cubic_corpus({4, 6, 8, 10, 12});
    {
        Multigraph c6(6);
        for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
        l15_corpus.push_back(c6);
        for (auto& g : random_matching_covered(60, 10, 5309)) l15_corpus.push_back(std::move(g));
    }
    if (!run_suite("L1.5", l15_corpus, detail)) return false;

    auto corpus = cubic_corpus({4, 6, 8, 10, 12});
    for (const char* id : {"P3.4", "P3.5-3.9", "L3.6", "L4.1", "L4.5"})
        if (!run_suite(id, corpus, detail)) return false;
    return run_suite("SNARK", corpus, detail);
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int number;
        const char* title;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle gates (blossom vs exhaustive; ELP search vs exhaustive tight cuts)",
         criterion1},
        {2, "every tight cut of a cubic matching covered graph (n<=12) is a 3-cut", criterion2},
        {3, "every essentially 4-edge-connected cubic graph (n<=12) is a brick xor a brace",
         criterion3},
        {4, "edge trichotomy on efec cubic bricks (n<=12): doubleton / b-invariant / quasi",
         criterion4},
        {5, "removable edges have b in {1,2} and the structure case agrees (n<=12)", criterion5},
        {6, "Petersen facts: all quasi, deletions leave two K4 bricks, snark", criterion6},
        {7, "two quasi edges at a vertex: (ii) only Petersen, (i) only Cubeplex, fig4 is (iii)",
         criterion7},
        {8, "b-invariant classes at every vertex; >= |V|/2 b-invariant edges when "
            "non-near-bipartite",
         criterion8},
        {9, "catalog regression: every transcribed figure matches its pinned facts", criterion9},
        {10, "decomposition leaf multiset invariance across 100 seeded orders", criterion10},
        {11, "property sweeps: uncrossing, special barriers, quasi structure, 4-cuts, "
             "barrier intersections, snarks",
         criterion11},
    };

    int only = (argc > 1) ? std::atoi(argv[1]) : 0;
    bool all_ok = true;
    for (const auto& criterion : criteria) {
        if (only && criterion.number != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.number, criterion.title, secs, detail.empty() ? "" : " — ",
                    detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
