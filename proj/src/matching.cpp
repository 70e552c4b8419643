#include "tightcut/matching.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace tightcut {

namespace {

// Edmonds' blossom algorithm on a compacted simple view of the host.
// One solver instance serves many sub-problem solves (vertices disabled,
// warm-started from a prior matching), which is what the barrier and
// admissibility scans hammer on.
struct Solver {
    int k = 0;
    std::vector<VertexId> vs;
    std::vector<int> index;
    std::vector<std::vector<int>> adj;

    std::vector<int> match, parent, base;
    std::vector<char> alive, used, in_blossom;

    explicit Solver(const Multigraph& g) {
        vs = g.vertices();
        k = static_cast<int>(vs.size());
        index.assign(g.vertex_bound(), -1);
        for (int i = 0; i < k; ++i) index[vs[i]] = i;
        adj.resize(k);
        for (int i = 0; i < k; ++i) {
            for (VertexId w : g.neighbors(vs[i])) adj[i].push_back(index[w]);
        }
        match.assign(k, -1);
        parent.assign(k, -1);
        base.resize(k);
        alive.assign(k, 1);
        used.assign(k, 0);
        in_blossom.assign(k, 0);
    }

    int lca(int a, int b) {
        std::vector<char> mark(k, 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < k; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (!alive[to]) continue;
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < k; ++i)
                        if (alive[i] && in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        int u = to;
                        while (u != -1) {
                            int pv = parent[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }

    // Maximum matching among alive vertices; match[] may be pre-seeded.
    int solve() {
        int size = 0;
        for (int v = 0; v < k; ++v)
            if (alive[v] && match[v] != -1) ++size;
        size /= 2;
        for (int v = 0; v < k; ++v) {
            if (!alive[v] || match[v] != -1) continue;
            if (find_augmenting_path(v)) ++size;
        }
        return size;
    }

    void reset(const std::vector<VertexId>& removed) {
        std::fill(alive.begin(), alive.end(), 1);
        std::fill(match.begin(), match.end(), -1);
        for (VertexId v : removed) {
            if (v < 0 || v >= static_cast<int>(index.size()) || index[v] == -1)
                throw GraphError("unknown vertex id " + std::to_string(v));
            alive[index[v]] = 0;
        }
    }

    void seed_pair(VertexId u, VertexId w) {
        int a = index[u], b = index[w];
        if (!alive[a] || !alive[b] || match[a] != -1 || match[b] != -1) return;
        match[a] = b;
        match[b] = a;
    }

    int alive_count() const {
        int c = 0;
        for (int v = 0; v < k; ++v) c += alive[v];
        return c;
    }
};

Matching matching_from_solver(const Multigraph& g, const Solver& s) {
    Matching m;
    for (int v = 0; v < s.k; ++v) {
        int w = s.match[v];
        if (w > v) m.edges.push_back(*g.find_edge(s.vs[v], s.vs[w]));
    }
    return m;
}

}  // namespace

Matching max_matching(const Multigraph& g, const Matching* warm) {
    Solver s(g);
    if (warm) {
        for (EdgeId e : warm->edges) {
            if (!g.has_edge(e)) continue;
            auto [u, v] = g.ends(e);
            s.seed_pair(u, v);
        }
    }
    s.solve();
    return matching_from_solver(g, s);
}

bool has_perfect_matching(const Multigraph& g) {
    if (g.num_vertices() % 2) return false;
    Solver s(g);
    return 2 * s.solve() == g.num_vertices();
}

bool matchable_without(const Multigraph& g, const std::vector<VertexId>& removed) {
    int remaining = g.num_vertices() - static_cast<int>(removed.size());
    if (remaining % 2) return false;
    Solver s(g);
    s.reset(removed);
    return 2 * s.solve() == remaining;
}

std::vector<std::vector<EdgeId>> all_perfect_matchings(const Multigraph& g) {
    std::vector<std::vector<EdgeId>> out;
    if (g.num_vertices() % 2) return out;
    std::vector<char> covered(g.vertex_bound(), 0);
    std::vector<EdgeId> chosen;
    auto vs = g.vertices();
    auto rec = [&](auto&& self, std::size_t i) -> void {
        while (i < vs.size() && covered[vs[i]]) ++i;
        if (i == vs.size()) {
            out.push_back(chosen);
            return;
        }
        VertexId v = vs[i];
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            chosen.push_back(e);
            self(self, i + 1);
            chosen.pop_back();
            covered[v] = covered[w] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::uint64_t count_perfect_matchings(const Multigraph& g) {
    if (g.num_vertices() % 2) return 0;
    std::vector<char> covered(g.vertex_bound(), 0);
    auto vs = g.vertices();
    auto rec = [&](auto&& self, std::size_t i) -> std::uint64_t {
        while (i < vs.size() && covered[vs[i]]) ++i;
        if (i == vs.size()) return 1;
        VertexId v = vs[i];
        std::uint64_t total = 0;
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            total += self(self, i + 1);
            covered[v] = covered[w] = 0;
        }
        return total;
    };
    return rec(rec, 0);
}

bool is_admissible(const Multigraph& g, EdgeId e) {
    auto [u, v] = g.ends(e);  // validates e
    return matchable_without(g, {u, v});
}

bool is_matching_covered(const Multigraph& g) {
    if (g.num_vertices() < 2 || !is_connected(g)) return false;
    if (g.num_vertices() % 2) return false;
    Solver s(g);
    if (2 * s.solve() != g.num_vertices()) return false;
    std::vector<int> base_match = s.match;
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.ends(e);
        s.reset({u, v});
        for (int x = 0; x < s.k; ++x) {
            int y = base_match[x];
            if (y > x && s.alive[x] && s.alive[y] && base_match[y] == x) {
                s.match[x] = y;
                s.match[y] = x;
            }
        }
        if (2 * s.solve() != g.num_vertices() - 2) return false;
    }
    return true;
}

bool is_bicritical(const Multigraph& g) {
    int n = g.num_vertices();
    if (n < 4) throw GraphError("bicriticality is defined for order >= 4");
    if (n % 2) throw GraphError("bicriticality is defined for even order");
    Solver s(g);
    if (2 * s.solve() != n) return false;
    std::vector<int> base_match = s.match;
    auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            s.reset({vs[i], vs[j]});
            for (int x = 0; x < s.k; ++x) {
                int y = base_match[x];
                if (y > x && s.alive[x] && s.alive[y]) {
                    s.match[x] = y;
                    s.match[y] = x;
                }
            }
            if (2 * s.solve() != n - 2) return false;
        }
    }
    return true;
}

bool is_factor_critical(const Multigraph& g) {
    int n = g.num_vertices();
    if (n == 0) return false;
    if (n % 2 == 0) return false;
    Solver s(g);
    for (VertexId v : g.vertices()) {
        s.reset({v});
        if (2 * s.solve() != n - 1) return false;
    }
    return true;
}

namespace {
int odd_component_count(const Multigraph& g, const std::vector<VertexId>& s) {
    Multigraph h = g.without_vertices(s);
    int odd = 0;
    for (const auto& comp : components(h))
        if (comp.size() % 2) ++odd;
    return odd;
}
}  // namespace

bool is_barrier(const Multigraph& g, const std::vector<VertexId>& s) {
    if (s.empty()) throw GraphError("barrier test needs a nonempty set");
    return odd_component_count(g, s) == static_cast<int>(s.size());
}

bool is_special_barrier(const Multigraph& g, const std::vector<VertexId>& s) {
    if (!is_barrier(g, s)) return false;
    Multigraph h = g.without_vertices(s);
    int nontrivial = 0;
    for (const auto& comp : components(h)) {
        if (comp.size() % 2 == 0) return false;
        if (comp.size() > 1) ++nontrivial;
    }
    return nontrivial == 1;
}

GallaiEdmonds gallai_edmonds(const Multigraph& g) {
    GallaiEdmonds out;
    Solver s(g);
    int nu = s.solve();
    std::vector<int> base_match = s.match;
    std::vector<char> in_d(g.vertex_bound(), 0);
    for (VertexId v : g.vertices()) {
        s.reset({v});
        for (int x = 0; x < s.k; ++x) {
            int y = base_match[x];
            if (y > x && s.alive[x] && s.alive[y]) {
                s.match[x] = y;
                s.match[y] = x;
            }
        }
        if (s.solve() == nu) {
            out.d.push_back(v);
            in_d[v] = 1;
        }
    }
    for (VertexId v : g.vertices()) {
        if (in_d[v]) continue;
        bool touches_d = false;
        for (VertexId w : g.neighbors(v))
            if (in_d[w]) {
                touches_d = true;
                break;
            }
        (touches_d ? out.a : out.c).push_back(v);
    }
    return out;
}

std::optional<std::vector<VertexId>> maximal_barrier_containing(const Multigraph& g,
                                                                VertexId u, VertexId w) {
    if (u == w) throw GraphError("maximal barrier needs two distinct vertices");
    if (!g.has_vertex(u) || !g.has_vertex(w)) throw GraphError("unknown vertex id");
    if (matchable_without(g, {u, w})) return std::nullopt;
    std::vector<VertexId> barrier = {u, w};
    Multigraph cur = g.without_vertices({u, w});
    for (;;) {
        GallaiEdmonds ge = gallai_edmonds(cur);
        barrier.insert(barrier.end(), ge.a.begin(), ge.a.end());
        if (ge.c.empty()) break;
        // the split left an even part: absorb it so no even component
        // survives and the result is maximal under inclusion
        Multigraph even_part = cur.induced(ge.c);
        VertexId z = *std::min_element(ge.c.begin(), ge.c.end());
        barrier.push_back(z);
        even_part.remove_vertex(z);
        cur = std::move(even_part);
    }
    std::sort(barrier.begin(), barrier.end());
    return barrier;
}

std::optional<std::vector<EdgeId>> v_matching(const Multigraph& g, VertexId v) {
    if (!is_cubic(g)) throw GraphError("v-matchings are defined for cubic hosts");
    auto star = g.incident(v);
    std::vector<VertexId> removed = {v};
    for (EdgeId e : star) removed.push_back(g.other_end(e, v));
    std::sort(removed.begin() + 1, removed.end());
    if (std::adjacent_find(removed.begin() + 1, removed.end()) != removed.end())
        return std::nullopt;  // parallel edges at v
    Multigraph rest = g.without_vertices(removed);
    if (!has_perfect_matching(rest)) return std::nullopt;
    Matching m = max_matching(rest);
    std::vector<EdgeId> out(star.begin(), star.end());
    out.insert(out.end(), m.edges.begin(), m.edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool depends(const Multigraph& g, EdgeId e, EdgeId f) {
    if (e == f) throw GraphError("dependence needs two distinct edges");
    auto [u, v] = g.ends(e);
    g.ends(f);  // validate
    if (!is_admissible(g, e))
        throw GraphError("dependence is defined for admissible edges only");
    Multigraph h = g.without_edge(f);
    return !matchable_without(h, {u, v});
}

bool mutually_dependent(const Multigraph& g, EdgeId e, EdgeId f) {
    return depends(g, e, f) && depends(g, f, e);
}

std::optional<BipartiteWitness> bipartite_inadmissibility_witness(const Multigraph& h,
                                                                  EdgeId ab) {
    auto bip = bipartition(h);
    if (!bip) throw GraphError("witness extraction needs a bipartite host");
    if (!has_perfect_matching(h)) throw GraphError("witness extraction needs a matchable host");
    auto [a, b] = h.ends(ab);
    std::vector<VertexId> side_a = bip->first, side_b = bip->second;
    if (std::find(side_a.begin(), side_a.end(), a) == side_a.end()) std::swap(side_a, side_b);
    if (matchable_without(h, {a, b})) return std::nullopt;

    Multigraph hp = h.without_vertices({a, b});
    Matching m = max_matching(hp);
    std::vector<VertexId> partner(h.vertex_bound(), -1);
    for (EdgeId e : m.edges) {
        auto [x, y] = hp.ends(e);
        partner[x] = y;
        partner[y] = x;
    }
    // the unique exposed vertex on a's side of h-a-b
    VertexId u0 = -1;
    for (VertexId x : side_a)
        if (x != a && partner[x] == -1) {
            if (u0 != -1) throw TheoremViolation("more than one exposed vertex on one side");
            u0 = x;
        }
    if (u0 == -1) throw TheoremViolation("no exposed vertex despite failed matchability");

    // alternating closure: free edge into B, matched edge back into A
    std::vector<char> in_s(h.vertex_bound(), 0), seen_b(h.vertex_bound(), 0);
    std::queue<VertexId> q;
    q.push(u0);
    in_s[u0] = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (VertexId y : hp.neighbors(x)) {
            if (seen_b[y]) continue;
            seen_b[y] = 1;
            VertexId back = partner[y];
            if (back == -1) throw TheoremViolation("augmenting path escaped the closure");
            if (!in_s[back]) {
                in_s[back] = 1;
                q.push(back);
            }
        }
    }
    BipartiteWitness wit;
    std::vector<char> in_b1(h.vertex_bound(), 0);
    for (VertexId x : side_a) (in_s[x] ? wit.a1 : wit.a2).push_back(x);
    for (VertexId x : wit.a1)
        for (VertexId y : h.neighbors(x)) in_b1[y] = 1;
    for (VertexId y : side_b) (in_b1[y] ? wit.b1 : wit.b2).push_back(y);

    if (wit.a1.size() != wit.b1.size()) throw TheoremViolation("witness classes unbalanced");
    if (!in_b1[b]) throw TheoremViolation("witness misses the deleted endpoint");
    if (in_s[a]) throw TheoremViolation("witness absorbed the deleted endpoint");
    return wit;
}

std::vector<std::vector<VertexId>> enumerate_barriers(const Multigraph& g) {
    int n = g.num_vertices();
    if (n > 16) throw GraphError("exhaustive barrier scan is bounded to 16 vertices");
    auto vs = g.vertices();
    std::vector<std::vector<VertexId>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (static_cast<int>(mask) == (1 << n) - 1) continue;
        std::vector<VertexId> s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.push_back(vs[i]);
        if (odd_component_count(g, s) == static_cast<int>(s.size())) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace tightcut
