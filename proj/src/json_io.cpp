#include "tightcut/json_io.hpp"

namespace tightcut {

nlohmann::json graph_to_json(const Multigraph& g) {
    auto vs = g.vertices();
    std::vector<int> index(g.vertex_bound(), -1);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) index[vs[i]] = i;
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.ends(e);
        edges.push_back({index[u], index[v]});
    }
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [v, l] : g.labels()) labels[std::to_string(index[v])] = l;
    nlohmann::json out;
    out["n"] = g.num_vertices();
    out["edges"] = std::move(edges);
    if (!labels.empty()) out["labels"] = std::move(labels);
    return out;
}

Multigraph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw GraphError("graph JSON needs an integer field \"n\"");
    Multigraph g(j["n"].get<int>());
    if (j.contains("edges")) {
        for (const auto& pair : j["edges"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw GraphError("graph JSON edges must be [u,v] pairs");
            g.add_edge(pair[0].get<int>(), pair[1].get<int>());
        }
    }
    if (j.contains("labels")) {
        for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
            g.set_label(std::stoi(it.key()), it.value().get<std::string>());
    }
    return g;
}

}  // namespace tightcut
