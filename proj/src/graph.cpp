#include "tightcut/graph.hpp"

#include <algorithm>
#include <queue>

namespace tightcut {

Multigraph::Multigraph(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    vertex_alive_.assign(n, 1);
    inc_.resize(n);
    n_alive_ = n;
}

Multigraph Multigraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Multigraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Multigraph::check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw GraphError("unknown vertex id " + std::to_string(v));
}

void Multigraph::check_edge(EdgeId e) const {
    if (!has_edge(e)) throw GraphError("unknown edge id " + std::to_string(e));
}

VertexId Multigraph::add_vertex() {
    vertex_alive_.push_back(1);
    inc_.emplace_back();
    ++n_alive_;
    return static_cast<VertexId>(vertex_alive_.size()) - 1;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loops are not permitted");
    EdgeId e = static_cast<EdgeId>(edge_ends_.size());
    edge_ends_.emplace_back(u, v);
    edge_alive_.push_back(1);
    inc_[u].push_back(e);
    inc_[v].push_back(e);
    ++m_alive_;
    return e;
}

void Multigraph::remove_edge(EdgeId e) {
    check_edge(e);
    auto [u, v] = edge_ends_[e];
    std::erase(inc_[u], e);
    std::erase(inc_[v], e);
    edge_alive_[e] = 0;
    --m_alive_;
}

void Multigraph::remove_vertex(VertexId v) {
    check_vertex(v);
    auto incident_copy = inc_[v];
    for (EdgeId e : incident_copy) remove_edge(e);
    vertex_alive_[v] = 0;
    labels_.erase(v);
    --n_alive_;
}

std::vector<VertexId> Multigraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_alive_);
    for (VertexId v = 0; v < vertex_bound(); ++v)
        if (vertex_alive_[v]) out.push_back(v);
    return out;
}

std::vector<EdgeId> Multigraph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(m_alive_);
    for (EdgeId e = 0; e < edge_bound(); ++e)
        if (edge_alive_[e]) out.push_back(e);
    return out;
}

std::pair<VertexId, VertexId> Multigraph::ends(EdgeId e) const {
    check_edge(e);
    return edge_ends_[e];
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
    auto [a, b] = ends(e);
    if (a == v) return b;
    if (b == v) return a;
    throw GraphError("vertex " + std::to_string(v) + " is not an end of edge " +
                     std::to_string(e));
}

const std::vector<EdgeId>& Multigraph::incident(VertexId v) const {
    check_vertex(v);
    return inc_[v];
}

int Multigraph::degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incident(v)) out.push_back(other_end(e, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<EdgeId> Multigraph::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    std::optional<EdgeId> best;
    for (EdgeId e : inc_[u])
        if (other_end(e, u) == v && (!best || e < *best)) best = e;
    return best;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    int k = 0;
    for (EdgeId e : inc_[u])
        if (other_end(e, u) == v) ++k;
    return k;
}

bool Multigraph::is_simple() const {
    for (VertexId v : vertices())
        for (VertexId w : neighbors(v))
            if (multiplicity(v, w) > 1) return false;
    return true;
}

void Multigraph::set_label(VertexId v, const std::string& label) {
    check_vertex(v);
    labels_[v] = label;
}

std::optional<std::string> Multigraph::label(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::optional<VertexId> Multigraph::vertex_with_label(const std::string& label) const {
    for (const auto& [v, l] : labels_)
        if (l == label) return v;
    return std::nullopt;
}

Multigraph Multigraph::induced(const std::vector<VertexId>& keep) const {
    std::vector<char> keeping(vertex_bound(), 0);
    for (VertexId v : keep) {
        check_vertex(v);
        keeping[v] = 1;
    }
    Multigraph out = *this;
    for (VertexId v = 0; v < vertex_bound(); ++v)
        if (vertex_alive_[v] && !keeping[v]) out.remove_vertex(v);
    return out;
}

Multigraph Multigraph::without_vertices(const std::vector<VertexId>& drop) const {
    Multigraph out = *this;
    for (VertexId v : drop) out.remove_vertex(v);
    return out;
}

Multigraph Multigraph::without_edge(EdgeId e) const {
    Multigraph out = *this;
    out.remove_edge(e);
    return out;
}

void Multigraph::reattach(EdgeId e, VertexId from, VertexId to) {
    auto& [a, b] = edge_ends_[e];
    if (a == from)
        a = to;
    else
        b = to;
    std::erase(inc_[from], e);
    inc_[to].push_back(e);
}

bool Cut::trivial(const Multigraph& g) const {
    int k = static_cast<int>(shore.size());
    return k == 1 || k == g.num_vertices() - 1;
}

std::vector<VertexId> Cut::complement_shore(const Multigraph& g) const {
    std::vector<char> in(g.vertex_bound(), 0);
    for (VertexId v : shore) in[v] = 1;
    std::vector<VertexId> out;
    for (VertexId v : g.vertices())
        if (!in[v]) out.push_back(v);
    return out;
}

Cut cut_of(const Multigraph& g, const std::vector<VertexId>& shore) {
    if (shore.empty()) throw GraphError("cut shore must be nonempty");
    std::vector<char> in(g.vertex_bound(), 0);
    for (VertexId v : shore) {
        if (!g.has_vertex(v)) throw GraphError("cut shore contains unknown vertex");
        in[v] = 1;
    }
    if (static_cast<int>(shore.size()) == g.num_vertices())
        throw GraphError("cut shore must be a proper subset");
    Cut c;
    c.shore = shore;
    std::sort(c.shore.begin(), c.shore.end());
    c.shore.erase(std::unique(c.shore.begin(), c.shore.end()), c.shore.end());
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.ends(e);
        if (in[u] != in[v]) c.edges.push_back(e);
    }
    return c;
}

Multigraph contract_shore(const Multigraph& g, const std::vector<VertexId>& shore,
                          const std::string& label) {
    Cut c = cut_of(g, shore);  // validates the shore
    Multigraph out = g;
    VertexId z = out.add_vertex();
    if (!label.empty()) out.set_label(z, label);
    std::vector<char> in(g.vertex_bound(), 0);
    for (VertexId v : c.shore) in[v] = 1;
    for (EdgeId e : c.edges) {
        auto [u, v] = out.ends(e);
        out.reattach(e, in[u] ? u : v, z);
    }
    for (VertexId v : c.shore) out.remove_vertex(v);
    return out;
}

Multigraph underlying_simple(const Multigraph& g) {
    Multigraph out = g;
    for (VertexId v : g.vertices()) {
        for (VertexId w : g.neighbors(v)) {
            if (w < v) continue;
            auto keep = g.find_edge(v, w);
            for (EdgeId e : g.incident(v))
                if (g.other_end(e, v) == w && e != *keep && out.has_edge(e))
                    out.remove_edge(e);
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
    std::vector<char> seen(g.vertex_bound(), 0);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s : g.vertices()) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Multigraph& g) {
    if (g.num_vertices() == 0) return true;
    return components(g).size() == 1;
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> bipartition(
    const Multigraph& g) {
    std::vector<int> colour(g.vertex_bound(), -1);
    std::vector<VertexId> a, b;
    for (VertexId s : g.vertices()) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (VertexId v : g.vertices()) (colour[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

bool is_regular(const Multigraph& g, int k) {
    for (VertexId v : g.vertices())
        if (g.degree(v) != k) return false;
    return true;
}

bool is_cubic(const Multigraph& g) { return g.num_vertices() > 0 && is_regular(g, 3); }

}  // namespace tightcut
