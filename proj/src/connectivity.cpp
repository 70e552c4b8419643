#include "tightcut/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace tightcut {

namespace {

struct Dinic {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> at;
    std::vector<int> level, it;

    explicit Dinic(int n) : at(n), level(n), it(n) {}

    void add(int u, int v, int cap_uv, int cap_vu) {
        at[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap_uv});
        at[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, cap_vu});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : at[v])
                if (arcs[id].cap > 0 && level[arcs[id].to] == -1) {
                    level[arcs[id].to] = level[v] + 1;
                    q.push(arcs[id].to);
                }
        }
        return level[t] != -1;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = it[v]; i < static_cast<int>(at[v].size()); ++i) {
            int id = at[v][i];
            if (arcs[id].cap > 0 && level[arcs[id].to] == level[v] + 1) {
                int d = dfs(arcs[id].to, t, std::min(f, arcs[id].cap));
                if (d > 0) {
                    arcs[id].cap -= d;
                    arcs[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
        }
        return flow;
    }
};

std::vector<int> compact_index(const Multigraph& g, std::vector<VertexId>& vs) {
    vs = g.vertices();
    std::vector<int> index(g.vertex_bound(), -1);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) index[vs[i]] = i;
    return index;
}

}  // namespace

int edge_connectivity(const Multigraph& g) {
    if (g.num_vertices() < 2) throw GraphError("edge connectivity needs >= 2 vertices");
    if (!is_connected(g)) throw GraphError("edge connectivity of a disconnected graph");
    std::vector<VertexId> vs;
    auto index = compact_index(g, vs);
    int k = static_cast<int>(vs.size());
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < k; ++t) {
        Dinic d(k);
        for (EdgeId e : g.edges()) {
            auto [u, v] = g.ends(e);
            d.add(index[u], index[v], 1, 1);
        }
        best = std::min(best, d.max_flow(0, t));
    }
    return best;
}

int vertex_connectivity(const Multigraph& g) {
    int n = g.num_vertices();
    if (n < 2) throw GraphError("vertex connectivity needs >= 2 vertices");
    if (!is_connected(g)) throw GraphError("vertex connectivity of a disconnected graph");
    std::vector<VertexId> vs;
    auto index = compact_index(g, vs);
    int k = static_cast<int>(vs.size());
    int best = n - 1;  // complete graph case
    for (int s = 0; s < k; ++s) {
        for (int t = s + 1; t < k; ++t) {
            if (g.adjacent(vs[s], vs[t])) continue;
            // vertex-split network: v_in = 2v, v_out = 2v+1
            Dinic d(2 * k);
            for (int v = 0; v < k; ++v)
                d.add(2 * v, 2 * v + 1, (v == s || v == t) ? k : 1, 0);
            for (EdgeId e : g.edges()) {
                auto [u, v] = g.ends(e);
                d.add(2 * index[u] + 1, 2 * index[v], k, 0);
                d.add(2 * index[v] + 1, 2 * index[u], k, 0);
            }
            best = std::min(best, d.max_flow(2 * s + 1, 2 * t));
        }
    }
    return best;
}

std::vector<Cut> enumerate_small_edge_cuts(const Multigraph& g, int k) {
    int n = g.num_vertices();
    if (n < 2) throw GraphError("cut enumeration needs >= 2 vertices");
    if (n > 16) throw GraphError("exhaustive cut enumeration is bounded to 16 vertices");
    auto vs = g.vertices();
    std::vector<std::pair<int, int>> edge_pairs;  // compact endpoints per edge
    std::vector<EdgeId> edge_ids;
    std::vector<int> index(g.vertex_bound(), -1);
    for (int i = 0; i < n; ++i) index[vs[i]] = i;
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.ends(e);
        edge_pairs.emplace_back(index[u], index[v]);
        edge_ids.push_back(e);
    }
    std::vector<Cut> out;
    // one representative per {S, complement}: the first vertex always inside S
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask < full; mask += 2) {
        int size = 0;
        for (auto [a, b] : edge_pairs)
            if (((mask >> a) & 1) != ((mask >> b) & 1) && ++size > k) break;
        if (size > k) continue;
        Cut c;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) c.shore.push_back(vs[i]);
        for (std::size_t j = 0; j < edge_pairs.size(); ++j) {
            auto [a, b] = edge_pairs[j];
            if (((mask >> a) & 1) != ((mask >> b) & 1)) c.edges.push_back(edge_ids[j]);
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
        return std::make_pair(a.size(), a.shore) < std::make_pair(b.size(), b.shore);
    });
    return out;
}

bool is_two_connected(const Multigraph& g) {
    int n = g.num_vertices();
    if (n < 2) return false;
    if (!is_connected(g)) return false;
    if (n == 2) return g.num_edges() >= 1;  // K2 convention
    for (VertexId v : g.vertices()) {
        Multigraph h = g;
        h.remove_vertex(v);
        if (!is_connected(h)) return false;
    }
    return true;
}

}  // namespace tightcut
