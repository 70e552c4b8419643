#include "tightcut/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "tightcut/graph6.hpp"
#include "tightcut/iso.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

namespace {

// Insert two new adjacent vertices across two existing edges.  With two
// distinct edges this subdivides both and joins the midpoints; with one
// edge it places both midpoints on it and doubles the bridge.  Together
// the two operations invert the edge reduction that removes an adjacent
// vertex pair, so iterating them from the triple edge on two vertices
// reaches every connected loopless cubic multigraph level by level (the
// generator tests cross-check this against the labelled enumerator and
// the known class counts).
Multigraph insert_on_edges(const Multigraph& g, EdgeId e1, EdgeId e2) {
    Multigraph out = g;
    auto [a, b] = out.ends(e1);
    if (e1 != e2) {
        auto [c, d] = out.ends(e2);
        out.remove_edge(e1);
        out.remove_edge(e2);
        VertexId u = out.add_vertex();
        VertexId w = out.add_vertex();
        out.add_edge(a, u);
        out.add_edge(u, b);
        out.add_edge(c, w);
        out.add_edge(w, d);
        out.add_edge(u, w);
    } else {
        out.remove_edge(e1);
        VertexId u = out.add_vertex();
        VertexId w = out.add_vertex();
        out.add_edge(a, u);
        out.add_edge(w, b);
        out.add_edge(u, w);
        out.add_edge(u, w);
    }
    return out;
}

// Doubled-triangle cap: a parallel pair both joined to an apex.  The apex
// is returned; it carries the cap's one free edge slot.
VertexId attach_dcap(Multigraph& g) {
    VertexId x = g.add_vertex(), y = g.add_vertex(), z = g.add_vertex();
    g.add_edge(x, y);
    g.add_edge(x, y);
    g.add_edge(x, z);
    g.add_edge(y, z);
    return z;
}

// The edge-insertion step cannot reach the graphs in which every pair
// reduction creates a loop or disconnects: trees whose vertices all have
// degree 1 or 3, with every leaf replaced by a doubled-triangle cap.
// Cap edges block reductions (the parallel pair's outside stubs meet at
// the apex; apex edges sit next to a parallel pair), and the remaining
// tree edges are bridges.  With leaves replaced such a tree on l leaves
// yields n = 4l - 2, so up to n = 14 the shapes are the two-cap bridge,
// the three-cap star and the four-cap H tree.  Everything else reduces:
// the generator tests certify this against a brute-force enumeration for
// n <= 8 and against labelled orbit counts at n = 10.
std::vector<Multigraph> irreducible_roots(int n) {
    std::vector<Multigraph> out;
    if (n == 6) {
        Multigraph g(0);
        VertexId a = attach_dcap(g), b = attach_dcap(g);
        g.add_edge(a, b);
        out.push_back(std::move(g));
    } else if (n == 10) {
        Multigraph g(0);
        VertexId centre = g.add_vertex();
        for (int i = 0; i < 3; ++i) g.add_edge(centre, attach_dcap(g));
        out.push_back(std::move(g));
    } else if (n == 14) {
        Multigraph g(0);
        VertexId left = g.add_vertex(), right = g.add_vertex();
        g.add_edge(left, right);
        g.add_edge(left, attach_dcap(g));
        g.add_edge(left, attach_dcap(g));
        g.add_edge(right, attach_dcap(g));
        g.add_edge(right, attach_dcap(g));
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Multigraph> next_level(const std::vector<Multigraph>& level, int n) {
    std::map<Certificate, Multigraph> dedup;
    for (const Multigraph& g : level) {
        auto es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i) {
            for (std::size_t j = i; j < es.size(); ++j) {
                Multigraph h = insert_on_edges(g, es[i], es[j]);
                Certificate cert = canonical_form(h);
                dedup.emplace(std::move(cert), std::move(h));
            }
        }
    }
    for (Multigraph& g : irreducible_roots(n))
        dedup.emplace(canonical_form(g), std::move(g));
    std::vector<Multigraph> out;
    out.reserve(dedup.size());
    for (auto& [cert, g] : dedup) out.push_back(std::move(g));
    return out;
}

const std::vector<Multigraph>& multigraph_level(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Multigraph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        Multigraph triple(2);
        triple.add_edge(0, 1);
        triple.add_edge(0, 1);
        triple.add_edge(0, 1);
        cache.emplace(2, std::vector<Multigraph>{triple});
    }
    for (int k = 4; k <= n; k += 2)
        if (!cache.count(k)) cache.emplace(k, next_level(cache.at(k - 2), k));
    return cache.at(n);
}

}  // namespace

std::vector<Multigraph> generate_cubic(int n) {
    if (n % 2 || n < 4 || n > 14)
        throw GraphError("built-in generation covers even n with 4 <= n <= 14");
    std::vector<Multigraph> out;
    for (const Multigraph& g : multigraph_level(n))
        if (g.is_simple()) out.push_back(g);
    return out;
}

std::vector<Multigraph> generate_cubic_multigraphs(int n) {
    if (n % 2 || n < 2 || n > 14)
        throw GraphError("built-in generation covers even n with 2 <= n <= 14");
    return multigraph_level(n);
}

const std::vector<Multigraph>& generated_cubic(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Multigraph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, generate_cubic(n)).first;
    return it->second;
}

std::uint64_t count_labeled_cubic(int n, bool connected_only) {
    if (n % 2 || n < 4) throw GraphError("labelled cubic counting needs even n >= 4");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    std::uint64_t count = 0;

    auto connected = [&]() {
        std::vector<char> seen(n, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (adj[v][w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n;
    };

    // always extend the smallest incomplete vertex; partners above it are
    // taken in increasing order so each labelled graph appears once
    auto rec = [&](auto&& self, int u, int from) -> void {
        while (u < n && deg[u] == 3) {
            u = u + 1;
            from = u + 1;
        }
        if (u == n) {
            if (!connected_only || connected()) ++count;
            return;
        }
        for (int w = std::max(from, u + 1); w < n; ++w) {
            if (deg[w] == 3 || adj[u][w]) continue;
            adj[u][w] = adj[w][u] = 1;
            ++deg[u];
            ++deg[w];
            if (deg[u] == 3)
                self(self, u + 1, u + 2);
            else
                self(self, u, w + 1);
            adj[u][w] = adj[w][u] = 0;
            --deg[u];
            --deg[w];
        }
    };
    rec(rec, 0, 1);
    return count;
}

std::vector<Multigraph> load_corpus(const CorpusSpec& spec) {
    std::vector<Multigraph> out;
    for (int n : spec.generated_ns) {
        const auto& gen = generated_cubic(n);
        out.insert(out.end(), gen.begin(), gen.end());
    }
    if (spec.graph6_path) {
        for (Multigraph& g : read_graph6_file(*spec.graph6_path)) out.push_back(std::move(g));
    }
    if (spec.dedup_isomorphs) {
        std::set<Certificate> seen;
        std::vector<Multigraph> unique;
        for (Multigraph& g : out)
            if (seen.insert(canonical_form(g)).second) unique.push_back(std::move(g));
        out = std::move(unique);
    }
    return out;
}

std::vector<Multigraph> random_graphs(int count, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Multigraph> out;
    std::uniform_real_distribution<double> density(0.25, 0.75);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        double p = density(rng);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Multigraph> random_matching_covered(int count, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> sizes;
    for (int n = 4; n <= max_n; n += 2) sizes.push_back(n);
    std::uniform_int_distribution<std::size_t> pick_size(0, sizes.size() - 1);
    std::uniform_real_distribution<double> density(0.3, 0.8);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Multigraph> out;
    while (static_cast<int>(out.size()) < count) {
        int n = sizes[pick_size(rng)];
        double p = density(rng);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        if (is_matching_covered(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace tightcut
