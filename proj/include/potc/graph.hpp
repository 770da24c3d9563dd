#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace potc {

using VertexId = int;

struct EdgeKey {
    VertexId u{};
    VertexId v{};
    auto operator<=>(const EdgeKey&) const = default;
};

// Canonical key: smaller endpoint first. Self-loops are rejected.
inline EdgeKey make_edge(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("self-loop edge");
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

// Abstract simple undirected graph over vertex ids 0..n-1.
// Adjacency lists are kept sorted; edge list is sorted and canonical.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(n)) {}

    int n_vertices() const { return static_cast<int>(adj_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    void add_edge(VertexId a, VertexId b);
    bool has_edge(VertexId a, VertexId b) const;
    bool has_edge(EdgeKey e) const { return has_edge(e.u, e.v); }

    int degree(VertexId v) const { return static_cast<int>(adj_.at(static_cast<size_t>(v)).size()); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(static_cast<size_t>(v)); }
    const std::vector<EdgeKey>& edges() const { return edges_; }

    int max_degree() const;
    int min_degree() const;

    std::vector<VertexId> common_neighbors(VertexId a, VertexId b) const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<EdgeKey> edges_;
};

bool is_connected(const Graph& g);
// True iff g is connected, has >= 3 vertices and no articulation vertex.
bool is_biconnected(const Graph& g);

}  // namespace potc
