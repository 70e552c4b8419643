// tightcut: matching covered graphs, tight cut decompositions, brick and
// brace recognition, edge classification and theorem verification runs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tightcut/bricks.hpp"
#include "tightcut/catalog.hpp"
#include "tightcut/corpus.hpp"
#include "tightcut/graph6.hpp"
#include "tightcut/json_io.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/tightcut.hpp"
#include "tightcut/verify.hpp"

using namespace tightcut;

namespace {

struct GraphInput {
    std::string g6;
    std::string file;
    std::string catalog_name;

    void attach(CLI::App* cmd) {
        cmd->add_option("--g6", g6, "graph6 string");
        cmd->add_option("--file", file, "graph6 file (one graph per line) or a JSON graph");
        cmd->add_option("--catalog", catalog_name, "named catalog graph");
    }

    std::vector<Multigraph> load() const {
        int sources = !g6.empty() + !file.empty() + !catalog_name.empty();
        if (sources != 1)
            throw GraphError("choose exactly one of --g6, --file, --catalog");
        if (!g6.empty()) return {from_graph6(g6)};
        if (!catalog_name.empty()) return {catalog(catalog_name).graph};
        std::ifstream in(file);
        if (!in) throw GraphError("cannot open " + file);
        char first = static_cast<char>(in.peek());
        if (first == '{') {
            nlohmann::json j;
            in >> j;
            return {graph_from_json(j)};
        }
        return read_graph6_file(file);
    }
};

void print_human_analysis(const nlohmann::json& a) {
    std::printf("vertices %d, edges %d%s%s\n", a["vertices"].get<int>(),
                a["edges"].get<int>(), a["cubic"].get<bool>() ? ", cubic" : "",
                a["bipartite"].get<bool>() ? ", bipartite" : "");
    if (!a["matching_covered"].get<bool>()) {
        std::printf("not matching covered (maximum matching %d)\n",
                    a["max_matching_size"].get<int>());
        return;
    }
    std::printf("matching covered; verdict: %s, b = %d\n",
                a["verdict"].get<std::string>().c_str(), a["b"].get<int>());
    if (a.contains("efec"))
        std::printf("essentially 4-edge-connected: %s\n", a["efec"].get<bool>() ? "yes" : "no");
    if (a.contains("verdict_counts")) {
        std::printf("edge classes:");
        for (auto it = a["verdict_counts"].begin(); it != a["verdict_counts"].end(); ++it)
            std::printf(" %s=%d", it.key().c_str(), it.value().get<int>());
        std::printf("\n");
        std::printf("near-bipartite: %s, 3-edge-colorable: %s, snark: %s\n",
                    a["near_bipartite"].get<bool>() ? "yes" : "no",
                    a["three_edge_colorable"].get<bool>() ? "yes" : "no",
                    a["snark"].get<bool>() ? "yes" : "no");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"matching covered graph toolkit"};
    app.require_subcommand(1);

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "full per-graph report");
    GraphInput analyze_input;
    analyze_input.attach(cmd_analyze);
    bool analyze_json = false;
    cmd_analyze->add_flag("--json", analyze_json, "emit JSON");

    // decompose
    auto* cmd_decompose = app.add_subcommand("decompose", "tight cut decomposition");
    GraphInput decompose_input;
    decompose_input.attach(cmd_decompose);
    std::string policy_text = "det";
    bool decompose_json = false;
    cmd_decompose->add_option("--policy", policy_text, "det or seed:N");
    cmd_decompose->add_flag("--json", decompose_json, "emit JSON");

    // classify-edges
    auto* cmd_classify = app.add_subcommand("classify-edges", "per-edge verdict table");
    GraphInput classify_input;
    classify_input.attach(cmd_classify);
    bool classify_relaxed = false, classify_json = false;
    cmd_classify->add_flag("--relaxed", classify_relaxed, "allow non-efec cubic bricks");
    cmd_classify->add_flag("--json", classify_json, "emit JSON");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a theorem suite over a corpus");
    std::string theorem;
    std::vector<int> ns;
    std::string corpus_path;
    int jobs = 0;
    std::uint64_t seed = 12345;
    cmd_verify->add_option("--theorem", theorem, "theorem id (see `catalog` docs)")->required();
    cmd_verify->add_option("--n", ns, "generated corpus sizes (even, 4..14)");
    cmd_verify->add_option("--corpus", corpus_path, "extra graph6 corpus file");
    cmd_verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    cmd_verify->add_option("--seed", seed, "seed for the randomized suites");

    // catalog
    auto* cmd_catalog = app.add_subcommand("catalog", "list or show named graphs");
    std::vector<std::string> catalog_args;
    cmd_catalog->add_option("args", catalog_args, "list | show NAME");
    bool catalog_json = false;
    cmd_catalog->add_flag("--json", catalog_json, "emit JSON");

    // generate
    auto* cmd_generate = app.add_subcommand("generate", "isomorphism-free cubic graphs");
    int gen_n = 0;
    std::string gen_out;
    cmd_generate->add_option("--n", gen_n, "even order, 4..14")->required();
    cmd_generate->add_option("--out", gen_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_analyze->parsed()) {
        for (const auto& g : analyze_input.load()) {
            auto a = analyze(g);
            if (analyze_json)
                std::cout << a.dump() << "\n";
            else
                print_human_analysis(a);
        }
        return 0;
    }

    if (cmd_decompose->parsed()) {
        auto policy = DecompositionPolicy::parse(policy_text);
        for (const auto& g : decompose_input.load()) {
            auto tree = tight_cut_decomposition(g, policy);
            if (decompose_json) {
                std::cout << tree_to_json(tree).dump() << "\n";
            } else {
                std::printf("b = %d (%d brick%s, %d brace%s)\n", tree.brick_count,
                            tree.brick_count, tree.brick_count == 1 ? "" : "s",
                            tree.brace_count, tree.brace_count == 1 ? "" : "s");
                for (const auto* leaf : tree.leaves())
                    std::printf("  leaf: %s on %d vertices\n",
                                leaf->verdict == LeafVerdict::Brick ? "brick" : "brace",
                                leaf->graph.num_vertices());
            }
        }
        return 0;
    }

    if (cmd_classify->parsed()) {
        for (const auto& g : classify_input.load()) {
            auto rows = classify_all_edges(g, classify_relaxed);
            if (classify_json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& row : rows) out.push_back(classification_to_json(row));
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& row : rows) {
                    std::printf("edge %d (%d,%d): %s", row.edge, row.endpoints.first,
                                row.endpoints.second, to_string(row.verdict).c_str());
                    if (row.partner) std::printf(" partner=%d", *row.partner);
                    if (row.b_value) std::printf(" b=%d", *row.b_value);
                    std::printf("\n");
                }
            }
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        CorpusSpec spec;
        spec.generated_ns = ns;
        if (!corpus_path.empty()) spec.graph6_path = corpus_path;
        auto corpus = load_corpus(spec);
        if (corpus.empty()) throw GraphError("empty corpus: pass --n and/or --corpus");
        auto report = verify_theorem(theorem, corpus, {jobs, seed});
        for (const auto& line : report_jsonl(report)) std::cout << line << "\n";
        return report.ok() ? 0 : 1;
    }

    if (cmd_catalog->parsed()) {
        if (catalog_args.empty() || catalog_args[0] == "list") {
            for (const auto& name : catalog_names()) {
                auto entry = catalog(name);
                std::printf("%-12s %2d vertices  %s\n", name.c_str(),
                            entry.graph.num_vertices(), entry.provenance.c_str());
            }
            return 0;
        }
        if (catalog_args[0] == "show" && catalog_args.size() == 2) {
            auto entry = catalog(catalog_args[1]);
            if (catalog_json) {
                nlohmann::json j;
                j["name"] = entry.name;
                j["provenance"] = entry.provenance;
                j["graph"] = graph_to_json(entry.graph);
                j["facts"] = nlohmann::json::array();
                for (const auto& check : check_known_facts(entry))
                    j["facts"].push_back(nlohmann::json{{"key", check.key},
                                                        {"expected", check.expected},
                                                        {"actual", check.actual},
                                                        {"ok", check.ok}});
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf("%s: %s\n", entry.name.c_str(), entry.provenance.c_str());
                std::printf("graph6: %s\n", to_graph6(entry.graph).c_str());
                bool all_ok = true;
                for (const auto& check : check_known_facts(entry)) {
                    std::printf("  [%s] %s\n", check.ok ? "ok" : "FAIL", check.key.c_str());
                    all_ok = all_ok && check.ok;
                }
                if (!all_ok) return 1;
            }
            return 0;
        }
        throw GraphError("usage: catalog [list | show NAME]");
    }

    if (cmd_generate->parsed()) {
        auto graphs = generate_cubic(gen_n);
        if (gen_out.empty()) {
            for (const auto& g : graphs) std::cout << to_graph6(g) << "\n";
        } else {
            write_graph6_file(gen_out, graphs);
            std::fprintf(stderr, "%zu graphs written to %s\n", graphs.size(), gen_out.c_str());
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& ex) {
        std::fprintf(stderr, "parse error: %s\n", ex.what());
        return 2;
    } catch (const GraphError& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
}
