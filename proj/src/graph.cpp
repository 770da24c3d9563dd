#include "potc/graph.hpp"

#include <algorithm>

namespace potc {

void Graph::add_edge(VertexId a, VertexId b) {
    EdgeKey e = make_edge(a, b);
    if (e.v >= n_vertices() || e.u < 0) throw std::out_of_range("vertex id out of range");
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (pos != edges_.end() && *pos == e) throw std::invalid_argument("duplicate edge");
    edges_.insert(pos, e);
    auto& au = adj_[static_cast<size_t>(e.u)];
    au.insert(std::lower_bound(au.begin(), au.end(), e.v), e.v);
    auto& av = adj_[static_cast<size_t>(e.v)];
    av.insert(std::lower_bound(av.begin(), av.end(), e.u), e.u);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a == b) return false;
    if (a < 0 || b < 0 || a >= n_vertices() || b >= n_vertices()) return false;
    const auto& au = adj_[static_cast<size_t>(a)];
    return std::binary_search(au.begin(), au.end(), b);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_vertices() == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_vertices(); ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<VertexId> Graph::common_neighbors(VertexId a, VertexId b) const {
    std::vector<VertexId> out;
    const auto& na = neighbors(a);
    const auto& nb = neighbors(b);
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

namespace {

int count_reachable(const Graph& g, VertexId start, VertexId skip) {
    std::vector<char> seen(static_cast<size_t>(g.n_vertices()), 0);
    std::vector<VertexId> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++count;
        for (VertexId w : g.neighbors(v)) {
            if (w == skip || seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    return count;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n_vertices() <= 1) return true;
    return count_reachable(g, 0, -1) == g.n_vertices();
}

bool is_biconnected(const Graph& g) {
    int n = g.n_vertices();
    if (n < 3) return false;
    if (!is_connected(g)) return false;
    for (VertexId v = 0; v < n; ++v) {
        VertexId start = (v == 0) ? 1 : 0;
        if (count_reachable(g, start, v) != n - 1) return false;
    }
    return true;
}

}  // namespace potc
