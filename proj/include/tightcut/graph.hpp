#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightcut/errors.hpp"

namespace tightcut {

using VertexId = int;
using EdgeId = int;

/// Loop-free undirected multigraph.  Parallel edges are permitted and
/// distinguished by edge id.  Vertex and edge ids are never renumbered:
/// deletions tombstone the id, so references held by witnesses (cuts,
/// matchings, barriers) stay valid across contractions and deletions.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n);

    static Multigraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);
    void remove_edge(EdgeId e);
    void remove_vertex(VertexId v);  // also removes incident edges

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < static_cast<int>(vertex_alive_.size()) && vertex_alive_[v];
    }
    bool has_edge(EdgeId e) const {
        return e >= 0 && e < static_cast<int>(edge_alive_.size()) && edge_alive_[e];
    }

    int num_vertices() const { return n_alive_; }
    int num_edges() const { return m_alive_; }

    /// Upper bounds on ids (alive ids are < the bound).
    int vertex_bound() const { return static_cast<int>(vertex_alive_.size()); }
    int edge_bound() const { return static_cast<int>(edge_alive_.size()); }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;

    std::pair<VertexId, VertexId> ends(EdgeId e) const;
    VertexId other_end(EdgeId e, VertexId v) const;
    const std::vector<EdgeId>& incident(VertexId v) const;
    int degree(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;  // distinct, sorted
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }
    bool is_simple() const;

    void set_label(VertexId v, const std::string& label);
    std::optional<std::string> label(VertexId v) const;
    const std::map<VertexId, std::string>& labels() const { return labels_; }
    std::optional<VertexId> vertex_with_label(const std::string& label) const;

    /// Induced subgraph on `keep` (ids preserved).
    Multigraph induced(const std::vector<VertexId>& keep) const;
    Multigraph without_vertices(const std::vector<VertexId>& drop) const;
    Multigraph without_edge(EdgeId e) const;

private:
    friend Multigraph contract_shore(const Multigraph&, const std::vector<VertexId>&,
                                     const std::string&);
    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;
    void reattach(EdgeId e, VertexId from, VertexId to);

    std::vector<std::pair<VertexId, VertexId>> edge_ends_;
    std::vector<char> edge_alive_;
    std::vector<char> vertex_alive_;
    std::vector<std::vector<EdgeId>> inc_;
    std::map<VertexId, std::string> labels_;
    int n_alive_ = 0;
    int m_alive_ = 0;
};

/// A cut ∂(X): the shore X together with the edges having exactly one
/// end in X.  Stored sorted; the complement shore is derived on demand.
struct Cut {
    std::vector<VertexId> shore;
    std::vector<EdgeId> edges;

    int size() const { return static_cast<int>(edges.size()); }
    bool trivial(const Multigraph& g) const;
    std::vector<VertexId> complement_shore(const Multigraph& g) const;
};

Cut cut_of(const Multigraph& g, const std::vector<VertexId>& shore);

/// Contract `shore` to a single new vertex carrying `label`.  Edges of the
/// cut keep their ids and become incident to the new vertex; edges inside
/// the shore are deleted, so the result stays loop-free.  Parallel edges
/// are preserved.
Multigraph contract_shore(const Multigraph& g, const std::vector<VertexId>& shore,
                          const std::string& label);

/// Collapse every parallel class to a single edge (smallest id survives).
Multigraph underlying_simple(const Multigraph& g);

bool is_connected(const Multigraph& g);
std::vector<std::vector<VertexId>> components(const Multigraph& g);

/// Bipartition (two colour classes) if the graph is bipartite.  Each class
/// is sorted; the class containing the smallest vertex id comes first.
std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> bipartition(
    const Multigraph& g);
bool is_bipartite(const Multigraph& g);

bool is_cubic(const Multigraph& g);
bool is_regular(const Multigraph& g, int k);

}  // namespace tightcut
