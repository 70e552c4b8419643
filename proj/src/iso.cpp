#include "tightcut/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace tightcut {

namespace {

// Compacted multiplicity matrix; all ids remapped to 0..k-1.
struct Compact {
    int k = 0;
    std::vector<std::vector<std::uint8_t>> w;
    std::vector<std::vector<int>> nbrs;

    explicit Compact(const Multigraph& g) {
        auto vs = g.vertices();
        k = static_cast<int>(vs.size());
        std::vector<int> index(g.vertex_bound(), -1);
        for (int i = 0; i < k; ++i) index[vs[i]] = i;
        w.assign(k, std::vector<std::uint8_t>(k, 0));
        for (EdgeId e : g.edges()) {
            auto [u, v] = g.ends(e);
            ++w[index[u]][index[v]];
            ++w[index[v]][index[u]];
        }
        nbrs.resize(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (w[i][j]) nbrs[i].push_back(j);
    }
};

// Stable colour refinement: ranks are derived from sorted signatures, so
// the resulting ordered partition is isomorphism-invariant.
std::vector<int> refine(const Compact& c, std::vector<int> colour) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    int classes = 0;
    for (;;) {
        std::vector<Sig> sig(c.k);
        for (int v = 0; v < c.k; ++v) {
            sig[v].first = colour[v];
            for (int u : c.nbrs[v]) sig[v].second.emplace_back(colour[u], c.w[v][u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<Sig> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < c.k; ++v)
            colour[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        int now = static_cast<int>(uniq.size());
        if (now == classes) return colour;
        classes = now;
    }
}

std::string leaf_certificate(const Compact& c, const std::vector<int>& colour) {
    std::vector<int> pos(c.k);
    for (int v = 0; v < c.k; ++v) pos[colour[v]] = v;
    std::string out;
    out.reserve(2 + c.k * (c.k - 1) / 2);
    out.push_back(static_cast<char>(c.k));
    for (int i = 0; i < c.k; ++i)
        for (int j = i + 1; j < c.k; ++j)
            out.push_back(static_cast<char>(c.w[pos[i]][pos[j]]));
    return out;
}

struct CanonSearch {
    const Compact& c;
    std::string best;
    bool have_best = false;

    void run(std::vector<int> colour) {
        colour = refine(c, colour);
        int target = -1, target_colour = c.k;
        std::vector<int> count(c.k, 0);
        for (int v = 0; v < c.k; ++v) ++count[colour[v]];
        for (int v = 0; v < c.k; ++v)
            if (count[colour[v]] > 1 && colour[v] < target_colour) {
                target_colour = colour[v];
                target = v;
            }
        if (target == -1) {
            std::string cert = leaf_certificate(c, colour);
            if (!have_best || cert < best) {
                best = std::move(cert);
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < c.k; ++v) {
            if (colour[v] != target_colour) continue;
            std::vector<int> next(c.k);
            for (int u = 0; u < c.k; ++u) {
                next[u] = 2 * colour[u];
                if (colour[u] == target_colour && u != v) next[u] += 1;
            }
            run(std::move(next));
        }
    }
};

}  // namespace

Certificate canonical_form(const Multigraph& g) {
    Compact c(g);
    if (c.k == 0) return "00";
    CanonSearch s{c};
    s.run(std::vector<int>(c.k, 0));
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(s.best.size() * 2);
    for (unsigned char ch : s.best) {
        out.push_back(hex[ch >> 4]);
        out.push_back(hex[ch & 15]);
    }
    return out;
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::uint64_t automorphism_count(const Multigraph& g) {
    Compact c(g);
    if (c.k == 0) return 1;
    std::vector<int> colour = refine(c, std::vector<int>(c.k, 0));
    std::vector<int> order(c.k);
    for (int i = 0; i < c.k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::make_pair(colour[a], a) < std::make_pair(colour[b], b); });
    std::vector<int> image(c.k, -1);
    std::vector<char> used(c.k, 0);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == c.k) {
            ++count;
            return;
        }
        int v = order[depth];
        for (int t = 0; t < c.k; ++t) {
            if (used[t] || colour[t] != colour[v]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                if (c.w[v][order[d]] != c.w[t][image[order[d]]]) ok = false;
            if (!ok) continue;
            image[v] = t;
            used[t] = 1;
            self(self, depth + 1);
            used[t] = 0;
        }
        image[v] = -1;
    };
    rec(rec, 0);
    return count;
}

}  // namespace tightcut
