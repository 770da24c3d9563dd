#include <algorithm>
#include <set>

#include "potc/coloring.hpp"
#include "potc/oracle.hpp"

namespace potc {

namespace {

// Mutable working copy of the graph; vertex ids stay stable across removals.
struct WorkGraph {
    int n;
    std::vector<std::set<VertexId>> adj;
    std::vector<char> alive;
    int alive_count;

    explicit WorkGraph(const Graph& g)
        : n(g.n_vertices()), adj(static_cast<size_t>(g.n_vertices())), alive(static_cast<size_t>(g.n_vertices()), 1),
          alive_count(g.n_vertices()) {
        for (const EdgeKey& e : g.edges()) {
            adj[static_cast<size_t>(e.u)].insert(e.v);
            adj[static_cast<size_t>(e.v)].insert(e.u);
        }
    }

    int degree(VertexId v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }

    std::vector<EdgeKey> remove_vertex(VertexId v) {
        std::vector<EdgeKey> removed;
        for (VertexId w : adj[static_cast<size_t>(v)]) {
            adj[static_cast<size_t>(w)].erase(v);
            removed.push_back(make_edge(v, w));
        }
        adj[static_cast<size_t>(v)].clear();
        alive[static_cast<size_t>(v)] = 0;
        --alive_count;
        return removed;
    }

    void remove_edge(EdgeKey e) {
        adj[static_cast<size_t>(e.u)].erase(e.v);
        adj[static_cast<size_t>(e.v)].erase(e.u);
    }

    void restore_vertex(VertexId v) {
        alive[static_cast<size_t>(v)] = 1;
        ++alive_count;
    }

    void restore_edge(EdgeKey e) {
        adj[static_cast<size_t>(e.u)].insert(e.v);
        adj[static_cast<size_t>(e.v)].insert(e.u);
    }

    Graph snapshot() const {
        Graph g(n);
        for (VertexId v = 0; v < n; ++v)
            for (VertexId w : adj[static_cast<size_t>(v)])
                if (w > v) g.add_edge(v, w);
        return g;
    }
};

struct Reduction {
    std::optional<Configuration> config;  // absent for low-degree
    VertexId pendant = -1;
    std::vector<VertexId> removed_vertices;
    std::vector<EdgeKey> removed_edges;
};

void erase_dead_vertex_colors(const WorkGraph& work, PartialColoring& phi) {
    for (VertexId v = 0; v < work.n; ++v)
        if (!work.alive[static_cast<size_t>(v)]) phi.erase(Element::vertex(v));
}

}  // namespace

ColoringOutcome color_list_total(const Graph& g, const ListAssignment& L, const EngineOptions& opt) {
    ColoringOutcome out;
    if (!L.covers(g)) throw std::invalid_argument("list assignment does not cover VE(G)");

    OracleBudget budget{opt.oracle_budget, 0.0};
    int required = std::max(6, g.max_degree() + 1);
    if (L.min_list_size(g) < required) {
        if (!opt.force_oracle_when_undersized) {
            out.status = ColoringOutcome::Status::UndersizedLists;
            out.message = "minimum list size " + std::to_string(L.min_list_size(g)) +
                          " is below the required max(6, Delta+1) = " + std::to_string(required);
            return out;
        }
        OracleResult r = brute_force_l_total(g, L, budget);
        out.trace.push_back({"oracle-full", {}});
        switch (r.status) {
            case OracleResult::Status::Found:
                out.status = ColoringOutcome::Status::Success;
                out.coloring = std::move(r.coloring);
                return out;
            case OracleResult::Status::NotColorable:
                out.status = ColoringOutcome::Status::NotColorable;
                out.message = "exhaustive search refuted colorability";
                return out;
            case OracleResult::Status::BudgetExhausted:
                out.status = ColoringOutcome::Status::BudgetExhausted;
                out.message = "oracle node budget exhausted";
                return out;
        }
    }

    WorkGraph work(g);
    std::vector<Reduction> stack;
    PartialColoring phi;

    while (work.alive_count > 0) {
        VertexId low = -1;
        for (VertexId v = 0; v < work.n; ++v) {
            if (work.alive[static_cast<size_t>(v)] && work.degree(v) <= 1) {
                low = v;
                break;
            }
        }
        if (low >= 0) {
            Reduction r;
            r.pendant = low;
            r.removed_vertices = {low};
            r.removed_edges = work.remove_vertex(low);
            out.trace.push_back({"low-degree", {{"v", low}}});
            stack.push_back(std::move(r));
            continue;
        }

        Graph cur = work.snapshot();
        std::optional<Configuration> c = find_configuration(cur);
        if (!c) {
            if (work.alive_count <= opt.not_reducible_oracle_max_vertices) {
                OracleResult r = brute_force_l_total(cur, L, budget);
                if (r.status == OracleResult::Status::Found) {
                    phi = std::move(r.coloring);
                    erase_dead_vertex_colors(work, phi);
                    out.trace.push_back({"oracle-base", {}});
                    break;
                }
                if (r.status == OracleResult::Status::NotColorable) {
                    out.status = ColoringOutcome::Status::NotColorable;
                    out.message = "irreducible remainder is not colorable; the input is not colorable";
                    return out;
                }
                out.status = ColoringOutcome::Status::BudgetExhausted;
                out.message = "oracle node budget exhausted on irreducible remainder";
                return out;
            }
            out.status = ColoringOutcome::Status::NotReducible;
            out.message = "no reducible configuration in a min-degree-2 remainder (input not pseudo-outerplanar?)";
            for (VertexId v = 0; v < work.n; ++v)
                if (work.alive[static_cast<size_t>(v)]) out.irreducible.push_back(v);
            return out;
        }

        Reduction r;
        r.config = c;
        out.trace.push_back({to_string(c->tag), c->bindings});
        switch (c->tag) {
            case ConfigTag::A:
                r.removed_vertices = {c->at("u")};
                break;
            case ConfigTag::B:
                r.removed_vertices = {c->at("u1"), c->at("u2"), c->at("u3"), c->at("v2"), c->at("v3")};
                break;
            case ConfigTag::C:
            case ConfigTag::D:
            case ConfigTag::F:
            case ConfigTag::G:
                r.removed_vertices = {c->at("u2"), c->at("u4")};
                break;
            case ConfigTag::E: {
                r.removed_vertices = {c->at("u2"), c->at("u4")};
                EdgeKey uv = make_edge(c->at("u3"), c->at("v"));
                work.remove_edge(uv);
                r.removed_edges.push_back(uv);
                break;
            }
        }
        for (VertexId v : r.removed_vertices) {
            auto gone = work.remove_vertex(v);
            r.removed_edges.insert(r.removed_edges.end(), gone.begin(), gone.end());
        }
        stack.push_back(std::move(r));
    }

    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        const Reduction& r = *it;
        for (VertexId v : r.removed_vertices) work.restore_vertex(v);
        for (const EdgeKey& e : r.removed_edges) work.restore_edge(e);
        Graph cur = work.snapshot();
        try {
            if (r.pendant >= 0) {
                extend_low_degree(cur, L, phi, r.pendant);
            } else {
                switch (r.config->tag) {
                    case ConfigTag::A: extend_config_a(cur, L, phi, *r.config); break;
                    case ConfigTag::B: extend_config_b(cur, L, phi, *r.config); break;
                    case ConfigTag::C: extend_config_c(cur, L, phi, *r.config); break;
                    case ConfigTag::D: extend_config_d(cur, L, phi, *r.config); break;
                    case ConfigTag::E: extend_config_e(cur, L, phi, *r.config); break;
                    case ConfigTag::F: extend_config_f(cur, L, phi, *r.config); break;
                    case ConfigTag::G: extend_config_g(cur, L, phi, *r.config); break;
                }
            }
        } catch (const std::runtime_error& err) {
            // Counting shortfall outside the lemma hypotheses (possible for a
            // high-degree mid vertex of (f)/(g)): recolor the current
            // subgraph outright rather than give up.
            OracleResult rescue = brute_force_l_total(cur, L, budget);
            if (rescue.status == OracleResult::Status::Found) {
                phi = std::move(rescue.coloring);
                erase_dead_vertex_colors(work, phi);
                out.trace.push_back({"oracle-rescue", {}});
                continue;
            }
            out.status = rescue.status == OracleResult::Status::BudgetExhausted
                             ? ColoringOutcome::Status::BudgetExhausted
                             : ColoringOutcome::Status::InternalError;
            out.message = std::string("extension failed (") + err.what() + "); oracle rescue: " +
                          (rescue.status == OracleResult::Status::BudgetExhausted ? "budget exhausted"
                                                                                  : "not colorable");
            return out;
        }
    }

    VerifyReport rep = verify_total_coloring(g, L, phi);
    if (!rep.valid) {
        out.status = ColoringOutcome::Status::InternalError;
        out.message = "engine produced an invalid coloring";
        return out;
    }
    out.status = ColoringOutcome::Status::Success;
    out.coloring = std::move(phi);
    return out;
}

ColoringOutcome color_list_total(const Diagram& d, const ListAssignment& L, const EngineOptions& opt) {
    return color_list_total(to_graph(d), L, opt);
}

}  // namespace potc
