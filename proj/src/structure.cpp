#include "potc/structure.hpp"

#include <algorithm>
#include <set>

namespace potc {

const char* to_string(ConfigTag t) {
    switch (t) {
        case ConfigTag::A: return "A";
        case ConfigTag::B: return "B";
        case ConfigTag::C: return "C";
        case ConfigTag::D: return "D";
        case ConfigTag::E: return "E";
        case ConfigTag::F: return "F";
        case ConfigTag::G: return "G";
    }
    return "?";
}

std::vector<VertexId> Configuration::binding_tuple() const {
    std::vector<VertexId> out;
    for (const auto& [role, v] : bindings) out.push_back(v);  // map iterates in role order
    return out;
}

bool operator<(const Configuration& a, const Configuration& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.binding_tuple() < b.binding_tuple();
}

namespace {

bool all_distinct(std::initializer_list<VertexId> vs) {
    std::set<VertexId> s(vs);
    return s.size() == vs.size();
}

void keep_min(std::optional<Configuration>& best, Configuration cand) {
    if (!best || cand < *best) best = std::move(cand);
}

std::optional<Configuration> find_a(const Graph& g) {
    std::optional<Configuration> best;
    for (VertexId u = 0; u < g.n_vertices(); ++u) {
        if (g.degree(u) != 2) continue;
        for (VertexId v : g.neighbors(u)) {
            if (g.degree(v) > 4) continue;
            keep_min(best, Configuration{ConfigTag::A, {{"u", u}, {"v", v}}});
        }
    }
    return best;
}

std::optional<Configuration> find_b(const Graph& g) {
    std::optional<Configuration> best;
    for (VertexId v2 = 0; v2 < g.n_vertices(); ++v2) {
        if (g.degree(v2) != 5) continue;
        for (VertexId v3 : g.neighbors(v2)) {
            if (g.degree(v3) != 5) continue;
            auto common23 = g.common_neighbors(v2, v3);
            for (VertexId u2 : common23) {
                if (g.degree(u2) != 2) continue;
                for (VertexId v1 : common23) {
                    if (v1 == u2) continue;
                    for (VertexId v4 : common23) {
                        if (v4 == u2 || v4 == v1) continue;
                        for (VertexId u1 : g.common_neighbors(v1, v2)) {
                            if (g.degree(u1) != 2) continue;
                            for (VertexId u3 : g.common_neighbors(v3, v4)) {
                                if (g.degree(u3) != 2) continue;
                                if (!all_distinct({v1, u1, v2, u2, v3, u3, v4})) continue;
                                keep_min(best, Configuration{ConfigTag::B,
                                                             {{"v1", v1},
                                                              {"u1", u1},
                                                              {"v2", v2},
                                                              {"u2", u2},
                                                              {"v3", v3},
                                                              {"u3", u3},
                                                              {"v4", v4}}});
                            }
                        }
                    }
                }
            }
        }
    }
    return best;
}

std::optional<Configuration> find_c(const Graph& g) {
    std::optional<Configuration> best;
    for (VertexId u2 = 0; u2 < g.n_vertices(); ++u2) {
        if (g.degree(u2) != 2) continue;
        for (VertexId u4 = 0; u4 < g.n_vertices(); ++u4) {
            if (u4 == u2 || g.degree(u4) != 2) continue;
            auto common = g.common_neighbors(u2, u4);
            for (VertexId u1 : common)
                for (VertexId u3 : common) {
                    if (u1 == u3 || !all_distinct({u1, u2, u3, u4})) continue;
                    keep_min(best, Configuration{ConfigTag::C,
                                                 {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}}});
                }
        }
    }
    return best;
}

// Shared scaffolding for (d)-(g): a 4-cycle u1 u2 u3 u4 with chord u2u4 and
// d(u2) = d(u4) = 3. Calls fn(u1, u2, u3, u4) on every labeled occurrence.
template <typename Fn>
void for_each_chorded_cycle(const Graph& g, Fn&& fn) {
    for (const EdgeKey& e : g.edges()) {
        if (g.degree(e.u) != 3 || g.degree(e.v) != 3) continue;
        for (auto [u2, u4] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            auto common = g.common_neighbors(u2, u4);
            for (VertexId u1 : common)
                for (VertexId u3 : common) {
                    if (u1 == u3 || !all_distinct({u1, u2, u3, u4})) continue;
                    fn(u1, u2, u3, u4);
                }
        }
    }
}

std::optional<Configuration> find_d(const Graph& g) {
    std::optional<Configuration> best;
    for_each_chorded_cycle(g, [&](VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
        if (g.degree(u3) > 4) return;
        keep_min(best, Configuration{ConfigTag::D, {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}}});
    });
    return best;
}

std::optional<Configuration> find_e(const Graph& g) {
    std::optional<Configuration> best;
    for_each_chorded_cycle(g, [&](VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
        for (VertexId v : g.neighbors(u3)) {
            if (g.degree(v) != 2 || !all_distinct({u1, u2, u3, u4, v})) continue;
            keep_min(best, Configuration{ConfigTag::E,
                                         {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}, {"v", v}}});
        }
    });
    return best;
}

std::optional<Configuration> find_f(const Graph& g) {
    std::optional<Configuration> best;
    for_each_chorded_cycle(g, [&](VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
        for (VertexId v : g.neighbors(u3)) {
            if (g.degree(v) != 3) continue;
            for (VertexId x : g.common_neighbors(u3, v)) {
                if (!all_distinct({u1, u2, u3, u4, v, x})) continue;
                keep_min(best, Configuration{ConfigTag::F,
                                             {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}, {"v", v}, {"x", x}}});
            }
        }
    });
    return best;
}

std::optional<Configuration> find_g(const Graph& g) {
    std::optional<Configuration> best;
    for_each_chorded_cycle(g, [&](VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
        if (!g.has_edge(u1, u3)) return;
        for (VertexId v : g.neighbors(u3)) {
            if (!g.has_edge(u1, v) || !all_distinct({u1, u2, u3, u4, v})) continue;
            keep_min(best, Configuration{ConfigTag::G,
                                         {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}, {"v", v}}});
        }
    });
    return best;
}

}  // namespace

std::optional<Configuration> find_configuration(const Graph& g) {
    if (auto c = find_a(g)) return c;
    if (auto c = find_b(g)) return c;
    if (auto c = find_c(g)) return c;
    if (auto c = find_d(g)) return c;
    if (auto c = find_e(g)) return c;
    if (auto c = find_f(g)) return c;
    if (auto c = find_g(g)) return c;
    return std::nullopt;
}

namespace {

bool has_roles(const Configuration& c, std::initializer_list<const char*> roles) {
    if (c.bindings.size() != roles.size()) return false;
    for (const char* r : roles)
        if (!c.bindings.count(r)) return false;
    return true;
}

bool in_range(const Graph& g, const Configuration& c) {
    for (const auto& [role, v] : c.bindings)
        if (v < 0 || v >= g.n_vertices()) return false;
    std::set<VertexId> s;
    for (const auto& [role, v] : c.bindings) s.insert(v);
    return s.size() == c.bindings.size();
}

bool cycle_with_chord(const Graph& g, VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
    return g.has_edge(u1, u2) && g.has_edge(u2, u3) && g.has_edge(u3, u4) && g.has_edge(u4, u1) &&
           g.has_edge(u2, u4) && g.degree(u2) == 3 && g.degree(u4) == 3;
}

}  // namespace

bool verify_configuration(const Graph& g, const Configuration& c) {
    if (!in_range(g, c)) return false;
    switch (c.tag) {
        case ConfigTag::A: {
            if (!has_roles(c, {"u", "v"})) return false;
            VertexId u = c.at("u"), v = c.at("v");
            return g.degree(u) == 2 && g.degree(v) <= 4 && g.has_edge(u, v);
        }
        case ConfigTag::B: {
            if (!has_roles(c, {"v1", "u1", "v2", "u2", "v3", "u3", "v4"})) return false;
            VertexId v1 = c.at("v1"), u1 = c.at("u1"), v2 = c.at("v2"), u2 = c.at("u2");
            VertexId v3 = c.at("v3"), u3 = c.at("u3"), v4 = c.at("v4");
            bool path = g.has_edge(v1, u1) && g.has_edge(u1, v2) && g.has_edge(v2, u2) &&
                        g.has_edge(u2, v3) && g.has_edge(v3, u3) && g.has_edge(u3, v4);
            bool extra = g.has_edge(v1, v2) && g.has_edge(v1, v3) && g.has_edge(v2, v3) &&
                         g.has_edge(v2, v4) && g.has_edge(v3, v4);
            bool degs = g.degree(u1) == 2 && g.degree(u2) == 2 && g.degree(u3) == 2 &&
                        g.degree(v2) == 5 && g.degree(v3) == 5;
            return path && extra && degs;
        }
        case ConfigTag::C: {
            if (!has_roles(c, {"u1", "u2", "u3", "u4"})) return false;
            VertexId u1 = c.at("u1"), u2 = c.at("u2"), u3 = c.at("u3"), u4 = c.at("u4");
            return g.has_edge(u1, u2) && g.has_edge(u2, u3) && g.has_edge(u3, u4) && g.has_edge(u4, u1) &&
                   g.degree(u2) == 2 && g.degree(u4) == 2;
        }
        case ConfigTag::D: {
            if (!has_roles(c, {"u1", "u2", "u3", "u4"})) return false;
            return cycle_with_chord(g, c.at("u1"), c.at("u2"), c.at("u3"), c.at("u4")) &&
                   g.degree(c.at("u3")) <= 4;
        }
        case ConfigTag::E: {
            if (!has_roles(c, {"u1", "u2", "u3", "u4", "v"})) return false;
            return cycle_with_chord(g, c.at("u1"), c.at("u2"), c.at("u3"), c.at("u4")) &&
                   g.has_edge(c.at("u3"), c.at("v")) && g.degree(c.at("v")) == 2;
        }
        case ConfigTag::F: {
            if (!has_roles(c, {"u1", "u2", "u3", "u4", "v", "x"})) return false;
            return cycle_with_chord(g, c.at("u1"), c.at("u2"), c.at("u3"), c.at("u4")) &&
                   g.has_edge(c.at("u3"), c.at("v")) && g.degree(c.at("v")) == 3 &&
                   g.has_edge(c.at("u3"), c.at("x")) && g.has_edge(c.at("v"), c.at("x"));
        }
        case ConfigTag::G: {
            if (!has_roles(c, {"u1", "u2", "u3", "u4", "v"})) return false;
            return cycle_with_chord(g, c.at("u1"), c.at("u2"), c.at("u3"), c.at("u4")) &&
                   g.has_edge(c.at("u1"), c.at("u3")) && g.has_edge(c.at("u3"), c.at("v")) &&
                   g.has_edge(c.at("u1"), c.at("v"));
        }
    }
    return false;
}

std::vector<std::pair<EdgeKey, EdgeKey>> find_co_crossed_chords(const Diagram& d) {
    std::set<std::pair<EdgeKey, EdgeKey>> found;
    for (const Block& b : d.blocks) {
        int m = b.size();
        if (m < 4) continue;
        for (int p = 0; p < m; ++p) {
            auto at = [&](int k) { return b.boundary[static_cast<size_t>((p + k) % m)]; };
            EdgeKey c1 = make_edge(at(0), at(2));
            EdgeKey c2 = make_edge(at(1), at(3));
            if (!b.is_chord(c1) || !b.is_chord(c2)) continue;
            if (!b.has_edge(make_edge(at(0), at(1))) || !b.has_edge(make_edge(at(1), at(2))) ||
                !b.has_edge(make_edge(at(2), at(3))))
                continue;
            if (c2 < c1) std::swap(c1, c2);
            found.emplace(c1, c2);
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace potc
