#include <algorithm>

#include "potc/coloring.hpp"

namespace potc {

namespace {

Element vx(VertexId v) { return Element::vertex(v); }
Element ed(VertexId a, VertexId b) { return Element::edge(a, b); }

void assign_least(const Graph& g, const ListAssignment& L, PartialColoring& phi, Element x,
                  const char* stage) {
    ColorSet a = available_list(g, L, phi, x);
    if (a.empty())
        throw HypothesisViolation(std::string(stage) + ": no available color for " + x.to_string());
    phi.set(x, a[0]);
}

void apply_solution(PartialColoring& phi, const std::map<Element, Color>& sol) {
    for (const auto& [x, c] : sol) phi.set(x, c);
}

std::vector<Element> config_d_elements(VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
    return {vx(u2), vx(u4), ed(u2, u4), ed(u1, u2), ed(u2, u3), ed(u3, u4), ed(u1, u4)};
}

LemmaDLists config_d_lists(const Graph& g, const ListAssignment& L, const PartialColoring& phi,
                           VertexId u1, VertexId u2, VertexId u3, VertexId u4) {
    LemmaDLists l;
    l.u2u4 = available_list(g, L, phi, ed(u2, u4));
    l.u2 = available_list(g, L, phi, vx(u2));
    l.u4 = available_list(g, L, phi, vx(u4));
    l.u1u2 = available_list(g, L, phi, ed(u1, u2));
    l.u2u3 = available_list(g, L, phi, ed(u2, u3));
    l.u3u4 = available_list(g, L, phi, ed(u3, u4));
    l.u1u4 = available_list(g, L, phi, ed(u1, u4));
    return l;
}

bool try_solve_config_d(const Graph& g, const ListAssignment& L, PartialColoring& phi, VertexId u1,
                        VertexId u2, VertexId u3, VertexId u4) {
    auto gp = gadget_from_graph(g, L, phi, config_d_elements(u1, u2, u3, u4));
    auto sol = solve_gadget(gp);
    if (!sol) return false;
    apply_solution(phi, *sol);
    return true;
}

}  // namespace

void extend_low_degree(const Graph& g, const ListAssignment& L, PartialColoring& phi, VertexId v) {
    int deg = g.degree(v);
    if (deg > 1) throw std::invalid_argument("extend_low_degree on a vertex of degree > 1");
    if (deg == 1) assign_least(g, L, phi, ed(v, g.neighbors(v)[0]), "low-degree");
    assign_least(g, L, phi, vx(v), "low-degree");
}

void extend_config_a(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c) {
    VertexId u = c.at("u");
    VertexId v = c.at("v");
    if (g.degree(u) != 2) throw HypothesisViolation("config-a: u is not a 2-vertex");
    const auto& nb = g.neighbors(u);
    VertexId w = (nb[0] == v) ? nb[1] : nb[0];
    // forced counting: uw sees at most Delta colors, uv at most 5, u at most 4
    assign_least(g, L, phi, ed(u, w), "config-a");
    assign_least(g, L, phi, ed(u, v), "config-a");
    assign_least(g, L, phi, vx(u), "config-a");
}

void extend_config_c(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c) {
    VertexId u1 = c.at("u1"), u2 = c.at("u2"), u3 = c.at("u3"), u4 = c.at("u4");
    std::vector<EdgeKey> cycle = {make_edge(u1, u2), make_edge(u2, u3), make_edge(u3, u4), make_edge(u4, u1)};
    std::map<EdgeKey, ColorSet> avail;
    for (const EdgeKey& e : cycle) avail[e] = available_list(g, L, phi, Element::edge(e));
    for (const auto& [e, cs] : avail)
        if (cs.size() < 2)
            throw HypothesisViolation("config-c: cycle edge " + Element::edge(e).to_string() +
                                      " has fewer than 2 available colors");
    for (const auto& [e, col] : color_cycle_edges_2lists(cycle, avail)) phi.set(Element::edge(e), col);
    assign_least(g, L, phi, vx(u2), "config-c");
    assign_least(g, L, phi, vx(u4), "config-c");
}

void extend_config_d(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c) {
    VertexId u1 = c.at("u1"), u2 = c.at("u2"), u3 = c.at("u3"), u4 = c.at("u4");
    LemmaDLists l = config_d_lists(g, L, phi, u1, u2, u3, u4);
    if (auto f = lemma_d_hypothesis_failure(l)) throw HypothesisViolation("config-d: " + *f);
    // removal of a (d)-configuration leaves three colors on the u3-side edges
    if (l.u2u3.size() < 3 || l.u3u4.size() < 3)
        throw HypothesisViolation("config-d: u3-side cycle edge below the 3-color count");
    if (!try_solve_config_d(g, L, phi, u1, u2, u3, u4))
        throw InternalInvariantError("config-d gadget unsolvable despite satisfied hypothesis");
}

void extend_config_e(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c) {
    VertexId u1 = c.at("u1"), u2 = c.at("u2"), u3 = c.at("u3"), u4 = c.at("u4"), v = c.at("v");
    phi.erase(vx(v));
    ColorSet auv = available_list(g, L, phi, ed(u3, v));
    ColorSet av = available_list(g, L, phi, vx(v));
    {
        LemmaDLists l = config_d_lists(g, L, phi, u1, u2, u3, u4);
        if (l.u2u4.size() < 6 || l.u2.size() < 4 || l.u4.size() < 4 || l.u1u2.size() < 2 ||
            l.u1u4.size() < 2 || l.u2u3.size() < 3 || l.u3u4.size() < 3 || auv.size() < 2 || av.size() < 3)
            throw HypothesisViolation("config-e: counting bounds fail after removing u2, u4 and u3v");
    }
    bool hypothesis_held = false;
    for (Color cuv : auv) {
        for (Color cv : av) {
            if (cv == cuv) continue;
            phi.set(ed(u3, v), cuv);
            phi.set(vx(v), cv);
            LemmaDLists l = config_d_lists(g, L, phi, u1, u2, u3, u4);
            if (!lemma_d_hypothesis_failure(l)) {
                hypothesis_held = true;
                if (try_solve_config_d(g, L, phi, u1, u2, u3, u4)) return;
            }
            phi.erase(ed(u3, v));
            phi.erase(vx(v));
        }
    }
    if (hypothesis_held)
        throw InternalInvariantError("config-e gadget unsolvable despite satisfied hypothesis");
    throw HypothesisViolation("config-e: no coloring of u3v and v establishes the extension bounds");
}

void extend_config_f(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c) {
    VertexId u1 = c.at("u1"), u2 = c.at("u2"), u3 = c.at("u3"), u4 = c.at("u4"), v = c.at("v");
    phi.erase(vx(u3));
    phi.erase(ed(u3, v));
    phi.erase(vx(v));

    LemmaFLists l;
    l.u2u4 = available_list(g, L, phi, ed(u2, u4));
    l.u2 = available_list(g, L, phi, vx(u2));
    l.u4 = available_list(g, L, phi, vx(u4));
    l.u2u3 = available_list(g, L, phi, ed(u2, u3));
    l.u3u4 = available_list(g, L, phi, ed(u3, u4));
    l.u1u2 = available_list(g, L, phi, ed(u1, u2));
    l.u1u4 = available_list(g, L, phi, ed(u1, u4));
    l.u3v = available_list(g, L, phi, ed(u3, v));
    l.u3 = available_list(g, L, phi, vx(u3));
    l.v = available_list(g, L, phi, vx(v));
    if (auto f = lemma_f_hypothesis_failure(l)) throw HypothesisViolation("config-f: " + *f);

    // staged fast path: settle u3, u3v, v so the chord gadget inherits its bounds
    for (Color c3 : l.u3) {
        for (Color cuv : l.u3v) {
            if (cuv == c3) continue;
            for (Color cv : l.v) {
                if (cv == c3 || cv == cuv) continue;
                phi.set(vx(u3), c3);
                phi.set(ed(u3, v), cuv);
                phi.set(vx(v), cv);
                LemmaDLists ld = config_d_lists(g, L, phi, u1, u2, u3, u4);
                if (!lemma_d_hypothesis_failure(ld) && try_solve_config_d(g, L, phi, u1, u2, u3, u4)) return;
                phi.erase(vx(u3));
                phi.erase(ed(u3, v));
                phi.erase(vx(v));
            }
        }
    }

    std::vector<Element> elems = config_d_elements(u1, u2, u3, u4);
    elems.push_back(vx(u3));
    elems.push_back(ed(u3, v));
    elems.push_back(vx(v));
    auto sol = solve_gadget(gadget_from_graph(g, L, phi, elems));
    if (!sol) throw InternalInvariantError("config-f gadget unsolvable despite satisfied hypothesis");
    apply_solution(phi, *sol);
}

void extend_config_g(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c) {
    VertexId u1 = c.at("u1"), u2 = c.at("u2"), u3 = c.at("u3"), u4 = c.at("u4");
    phi.erase(vx(u1));
    phi.erase(vx(u3));
    phi.erase(ed(u1, u3));

    LemmaGLists l;
    l.u2 = available_list(g, L, phi, vx(u2));
    l.u4 = available_list(g, L, phi, vx(u4));
    l.u2u4 = available_list(g, L, phi, ed(u2, u4));
    l.u1u2 = available_list(g, L, phi, ed(u1, u2));
    l.u2u3 = available_list(g, L, phi, ed(u2, u3));
    l.u3u4 = available_list(g, L, phi, ed(u3, u4));
    l.u1u4 = available_list(g, L, phi, ed(u1, u4));
    l.u1 = available_list(g, L, phi, vx(u1));
    l.u3 = available_list(g, L, phi, vx(u3));
    l.u1u3 = available_list(g, L, phi, ed(u1, u3));
    if (auto f = lemma_g_hypothesis_failure(l)) throw HypothesisViolation("config-g: " + *f);

    for (Color c1 : l.u1) {
        for (Color c3 : l.u3) {
            if (c3 == c1) continue;
            for (Color c13 : l.u1u3) {
                if (c13 == c1 || c13 == c3) continue;
                phi.set(vx(u1), c1);
                phi.set(vx(u3), c3);
                phi.set(ed(u1, u3), c13);
                LemmaDLists ld = config_d_lists(g, L, phi, u1, u2, u3, u4);
                if (!lemma_d_hypothesis_failure(ld) && try_solve_config_d(g, L, phi, u1, u2, u3, u4)) return;
                phi.erase(vx(u1));
                phi.erase(vx(u3));
                phi.erase(ed(u1, u3));
            }
        }
    }

    std::vector<Element> elems = config_d_elements(u1, u2, u3, u4);
    elems.push_back(vx(u1));
    elems.push_back(vx(u3));
    elems.push_back(ed(u1, u3));
    auto sol = solve_gadget(gadget_from_graph(g, L, phi, elems));
    if (!sol) throw InternalInvariantError("config-g gadget unsolvable despite satisfied hypothesis");
    apply_solution(phi, *sol);
}

void extend_config_b(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c) {
    VertexId v1 = c.at("v1"), u1 = c.at("u1"), v2 = c.at("v2"), u2 = c.at("u2");
    VertexId v3 = c.at("v3"), u3 = c.at("u3"), v4 = c.at("v4");

    Element e13 = ed(v1, v3), e24 = ed(v2, v4);
    ColorSet a13 = available_list(g, L, phi, e13);
    ColorSet a24 = available_list(g, L, phi, e24);
    ColorSet a12 = available_list(g, L, phi, ed(v1, v2));
    ColorSet a34 = available_list(g, L, phi, ed(v3, v4));
    if (a13.size() < 3 || a24.size() < 3 || a12.size() < 3 || a34.size() < 3)
        throw HypothesisViolation("config-b: preparation bounds fail (v1v3/v2v4/v1v2/v3v4 below 3)");

    // prefer a shared color on the crossing pair, then increasing pairs
    std::vector<std::pair<Color, Color>> prep;
    for (Color x : set_intersect(a13, a24)) prep.emplace_back(x, x);
    for (Color x : a13)
        for (Color y : a24)
            if (x != y) prep.emplace_back(x, y);

    std::vector<Element> gadget = {vx(u1),      vx(u2),      vx(u3),      vx(v2),      vx(v3),
                                   ed(v1, u1),  ed(u1, v2),  ed(v2, u2),  ed(u2, v3),  ed(v3, u3),
                                   ed(u3, v4),  ed(v1, v2),  ed(v2, v3),  ed(v3, v4)};

    bool hypothesis_held = false;
    for (const auto& [c13, c24] : prep) {
        phi.set(e13, c13);
        phi.set(e24, c24);
        LemmaBLists lb;
        lb.u1v1 = available_list(g, L, phi, ed(u1, v1));
        lb.u3v4 = available_list(g, L, phi, ed(u3, v4));
        lb.v1v2 = available_list(g, L, phi, ed(v1, v2));
        lb.v3v4 = available_list(g, L, phi, ed(v3, v4));
        lb.v2 = available_list(g, L, phi, vx(v2));
        lb.v3 = available_list(g, L, phi, vx(v3));
        lb.v2v3 = available_list(g, L, phi, ed(v2, v3));
        lb.u1v2 = available_list(g, L, phi, ed(u1, v2));
        lb.u2v2 = available_list(g, L, phi, ed(u2, v2));
        lb.u2v3 = available_list(g, L, phi, ed(u2, v3));
        lb.u3v3 = available_list(g, L, phi, ed(u3, v3));
        if (!lemma_b_hypothesis_failure(lb)) {
            hypothesis_held = true;
            auto sol = solve_gadget(gadget_from_graph(g, L, phi, gadget));
            if (sol) {
                apply_solution(phi, *sol);
                return;
            }
        }
        phi.erase(e13);
        phi.erase(e24);
    }
    if (hypothesis_held)
        throw InternalInvariantError("config-b gadget unsolvable despite satisfied hypothesis");
    throw HypothesisViolation("config-b: no preparation coloring of v1v3 and v2v4 meets the stage bounds");
}

}  // namespace potc
