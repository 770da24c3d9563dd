#include "potc/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace potc {

ColorSet make_color_set(std::initializer_list<Color> cs) {
    ColorSet s(cs);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

ColorSet color_range(Color lo, Color hi) {
    ColorSet s;
    for (Color c = lo; c <= hi; ++c) s.push_back(c);
    return s;
}

bool set_contains(const ColorSet& s, Color c) { return std::binary_search(s.begin(), s.end(), c); }

void set_insert(ColorSet& s, Color c) {
    auto it = std::lower_bound(s.begin(), s.end(), c);
    if (it == s.end() || *it != c) s.insert(it, c);
}

void set_erase(ColorSet& s, Color c) {
    auto it = std::lower_bound(s.begin(), s.end(), c);
    if (it != s.end() && *it == c) s.erase(it);
}

ColorSet set_minus(const ColorSet& a, const ColorSet& b) {
    ColorSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ColorSet set_intersect(const ColorSet& a, const ColorSet& b) {
    ColorSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string Element::to_string() const {
    if (is_vertex()) return "v:" + std::to_string(v);
    return "e:" + std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::vector<Element> all_elements(const Graph& g) {
    std::vector<Element> out;
    out.reserve(static_cast<size_t>(g.n_vertices() + g.n_edges()));
    for (VertexId v = 0; v < g.n_vertices(); ++v) out.push_back(Element::vertex(v));
    for (const EdgeKey& e : g.edges()) out.push_back(Element::edge(e));
    return out;
}

const ColorSet& ListAssignment::at(Element x) const {
    auto it = lists.find(x);
    if (it == lists.end()) throw std::invalid_argument("element " + x.to_string() + " has no list");
    return it->second;
}

int ListAssignment::min_list_size(const Graph& g) const {
    int m = -1;
    for (const Element& x : all_elements(g)) {
        int s = static_cast<int>(at(x).size());
        if (m < 0 || s < m) m = s;
    }
    return m < 0 ? 0 : m;
}

bool ListAssignment::covers(const Graph& g) const {
    for (const Element& x : all_elements(g))
        if (!has(x)) return false;
    return true;
}

ListAssignment uniform_lists(const Graph& g, int k) {
    ListAssignment L;
    ColorSet full = color_range(1, k);
    for (const Element& x : all_elements(g)) L.lists[x] = full;
    return L;
}

namespace {

// Visit every element adjacent or incident to x.
template <typename Fn>
void for_each_neighbor_element(const Graph& g, Element x, Fn&& fn) {
    if (x.is_vertex()) {
        for (VertexId w : g.neighbors(x.v)) {
            fn(Element::vertex(w));
            fn(Element::edge(x.v, w));
        }
    } else {
        fn(Element::vertex(x.e.u));
        fn(Element::vertex(x.e.v));
        for (VertexId w : g.neighbors(x.e.u))
            if (w != x.e.v) fn(Element::edge(x.e.u, w));
        for (VertexId w : g.neighbors(x.e.v))
            if (w != x.e.u) fn(Element::edge(x.e.v, w));
    }
}

}  // namespace

ColorSet available_list(const Graph& g, const ListAssignment& L, const PartialColoring& phi, Element x) {
    ColorSet out = L.at(x);
    for_each_neighbor_element(g, x, [&](Element y) {
        if (phi.has(y)) set_erase(out, phi.at(y));
    });
    return out;
}

VerifyReport verify_total_coloring(const Graph& g, const ListAssignment& L, const PartialColoring& phi) {
    VerifyReport rep;
    for (const Element& x : all_elements(g)) {
        if (!phi.has(x)) {
            rep.missing.push_back(x);
            continue;
        }
        if (L.has(x) && !set_contains(L.at(x), phi.at(x))) rep.off_list.push_back(x);
    }
    auto clash = [&](Element a, Element b) {
        if (phi.has(a) && phi.has(b) && phi.at(a) == phi.at(b)) rep.conflicts.emplace_back(a, b);
    };
    for (const EdgeKey& e : g.edges()) {
        clash(Element::vertex(e.u), Element::vertex(e.v));
        clash(Element::edge(e), Element::vertex(e.u));
        clash(Element::edge(e), Element::vertex(e.v));
    }
    for (VertexId w = 0; w < g.n_vertices(); ++w) {
        const auto& nb = g.neighbors(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                clash(Element::edge(w, nb[i]), Element::edge(w, nb[j]));
    }
    rep.valid = rep.missing.empty() && rep.conflicts.empty() && rep.off_list.empty();
    return rep;
}

// ------------------------------------------------------------------ gadgets

std::vector<std::pair<Element, Element>> conflicts_for_uncolored(const Graph& g,
                                                                 const std::vector<Element>& uncolored) {
    std::set<Element> pool(uncolored.begin(), uncolored.end());
    std::set<std::pair<Element, Element>> out;
    for (const Element& x : uncolored) {
        for_each_neighbor_element(g, x, [&](Element y) {
            if (!pool.count(y) || y == x) return;
            out.insert(x < y ? std::pair{x, y} : std::pair{y, x});
        });
    }
    return {out.begin(), out.end()};
}

GadgetProblem gadget_from_graph(const Graph& g, const ListAssignment& L, const PartialColoring& phi,
                                const std::vector<Element>& uncolored) {
    GadgetProblem p;
    p.uncolored = uncolored;
    std::sort(p.uncolored.begin(), p.uncolored.end());
    for (const Element& x : p.uncolored) p.avail[x] = available_list(g, L, phi, x);
    p.conflicts = conflicts_for_uncolored(g, p.uncolored);
    return p;
}

std::optional<std::map<Element, Color>> solve_gadget(const GadgetProblem& p) {
    size_t n = p.uncolored.size();
    if (n > kMaxGadgetElements)
        throw GadgetTooLarge("gadget has " + std::to_string(n) + " uncolored elements (max " +
                             std::to_string(kMaxGadgetElements) + ")");
    if (n == 0) return std::map<Element, Color>{};

    std::vector<Element> elems = p.uncolored;
    std::sort(elems.begin(), elems.end());
    std::map<Element, int> index;
    for (size_t i = 0; i < n; ++i) index[elems[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : p.conflicts) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) throw std::invalid_argument("conflict names unknown element");
        adj[static_cast<size_t>(ia->second)].push_back(ib->second);
        adj[static_cast<size_t>(ib->second)].push_back(ia->second);
    }

    std::vector<ColorSet> domain(n);
    for (size_t i = 0; i < n; ++i) {
        auto it = p.avail.find(elems[i]);
        if (it == p.avail.end()) throw std::invalid_argument("uncolored element lacks an available list");
        domain[i] = it->second;
    }

    std::vector<int> assigned(n, 0);
    std::vector<Color> value(n, 0);

    // Forward checking: on assignment, prune the color from unassigned
    // conflicting domains; trail records removals for undo.
    std::vector<std::pair<int, Color>> trail;

    auto pick = [&]() {
        int best = -1;
        for (size_t i = 0; i < n; ++i) {
            if (assigned[i]) continue;
            if (best < 0 || domain[i].size() < domain[static_cast<size_t>(best)].size()) best = static_cast<int>(i);
        }
        return best;
    };

    std::function<bool()> search = [&]() -> bool {
        int i = pick();
        if (i < 0) return true;
        ColorSet options = domain[static_cast<size_t>(i)];
        for (Color c : options) {
            assigned[static_cast<size_t>(i)] = 1;
            value[static_cast<size_t>(i)] = c;
            size_t mark = trail.size();
            bool dead = false;
            for (int j : adj[static_cast<size_t>(i)]) {
                if (assigned[static_cast<size_t>(j)]) continue;
                auto& dj = domain[static_cast<size_t>(j)];
                if (set_contains(dj, c)) {
                    set_erase(dj, c);
                    trail.emplace_back(j, c);
                    if (dj.empty()) {
                        dead = true;
                        break;
                    }
                }
            }
            if (!dead && search()) return true;
            while (trail.size() > mark) {
                auto [j, col] = trail.back();
                trail.pop_back();
                set_insert(domain[static_cast<size_t>(j)], col);
            }
            assigned[static_cast<size_t>(i)] = 0;
        }
        return false;
    };

    if (!search()) return std::nullopt;
    std::map<Element, Color> out;
    for (size_t i = 0; i < n; ++i) out[elems[i]] = value[i];
    return out;
}

std::map<EdgeKey, Color> color_cycle_edges_2lists(const std::vector<EdgeKey>& cycle,
                                                  const std::map<EdgeKey, ColorSet>& avail) {
    if (cycle.size() != 4) throw std::invalid_argument("expected a 4-cycle of edges");
    std::vector<ColorSet> lists(4);
    for (int i = 0; i < 4; ++i) {
        lists[static_cast<size_t>(i)] = avail.at(cycle[static_cast<size_t>(i)]);
        if (lists[static_cast<size_t>(i)].size() < 2)
            throw HypothesisViolation("cycle edge " + Element::edge(cycle[static_cast<size_t>(i)]).to_string() +
                                      " has fewer than 2 available colors");
    }

    std::vector<Color> chosen(4, 0);
    bool all_equal = lists[1] == lists[0] && lists[2] == lists[0] && lists[3] == lists[0];
    if (all_equal) {
        chosen[0] = lists[0][0];
        chosen[1] = lists[0][1];
        chosen[2] = lists[0][0];
        chosen[3] = lists[0][1];
    } else {
        int start = -1;
        Color c0 = 0;
        for (int i = 0; i < 4 && start < 0; ++i) {
            ColorSet d = set_minus(lists[static_cast<size_t>(i)], lists[static_cast<size_t>((i + 1) % 4)]);
            if (!d.empty()) {
                start = i;
                c0 = d[0];
            }
        }
        assert(start >= 0);  // not all equal implies some list escapes its successor
        chosen[static_cast<size_t>(start)] = c0;
        // walk away from start's successor; the successor is colored last and
        // is blind to c0, so one exclusion never empties its list.
        int order[3] = {(start + 3) % 4, (start + 2) % 4, (start + 1) % 4};
        for (int k = 0; k < 3; ++k) {
            int i = order[k];
            ColorSet opts = lists[static_cast<size_t>(i)];
            for (int other : {(i + 1) % 4, (i + 3) % 4}) {
                bool other_done = other == start || (k > 0 && other == order[0]) || (k > 1 && other == order[1]);
                if (other_done) set_erase(opts, chosen[static_cast<size_t>(other)]);
            }
            if (opts.empty()) throw InternalInvariantError("4-cycle 2-list coloring ran dry");
            chosen[static_cast<size_t>(i)] = opts[0];
        }
    }

    std::map<EdgeKey, Color> out;
    for (int i = 0; i < 4; ++i) out[cycle[static_cast<size_t>(i)]] = chosen[static_cast<size_t>(i)];
    return out;
}

// -------------------------------------------------- extension hypotheses

namespace {

std::optional<std::string> need(const ColorSet& s, size_t k, const char* name) {
    if (s.size() < k)
        return std::string(name) + " has " + std::to_string(s.size()) + " available colors, needs " +
               std::to_string(k);
    return std::nullopt;
}

}  // namespace

std::optional<std::string> lemma_b_hypothesis_failure(const LemmaBLists& l) {
    if (auto f = need(l.u1v1, 2, "u1v1")) return f;
    if (auto f = need(l.u3v4, 2, "u3v4")) return f;
    if (auto f = need(l.v1v2, 2, "v1v2")) return f;
    if (auto f = need(l.v3v4, 2, "v3v4")) return f;
    if (auto f = need(l.v2, 3, "v2")) return f;
    if (auto f = need(l.v3, 3, "v3")) return f;
    if (auto f = need(l.v2v3, 4, "v2v3")) return f;
    if (auto f = need(l.u1v2, 5, "u1v2")) return f;
    if (auto f = need(l.u2v2, 5, "u2v2")) return f;
    if (auto f = need(l.u2v3, 5, "u2v3")) return f;
    if (auto f = need(l.u3v3, 5, "u3v3")) return f;
    return std::nullopt;
}

std::optional<std::string> lemma_d_hypothesis_failure(const LemmaDLists& l) {
    if (auto f = need(l.u2u4, 6, "u2u4")) return f;
    if (auto f = need(l.u2, 4, "u2")) return f;
    if (auto f = need(l.u4, 4, "u4")) return f;
    if (auto f = need(l.u1u2, 2, "u1u2")) return f;
    if (auto f = need(l.u2u3, 2, "u2u3")) return f;
    if (auto f = need(l.u3u4, 2, "u3u4")) return f;
    if (auto f = need(l.u1u4, 2, "u1u4")) return f;
    if (l.u1u2.size() == 2 && l.u2u3.size() == 2 && l.u1u2 == l.u2u3)
        return "u1u2 and u2u3 are equal 2-lists";
    return std::nullopt;
}

std::optional<std::string> lemma_f_hypothesis_failure(const LemmaFLists& l) {
    if (auto f = need(l.u2u4, 6, "u2u4")) return f;
    if (auto f = need(l.u2, 5, "u2")) return f;
    if (auto f = need(l.u4, 5, "u4")) return f;
    if (auto f = need(l.u2u3, 4, "u2u3")) return f;
    if (auto f = need(l.u3u4, 4, "u3u4")) return f;
    if (auto f = need(l.u1u2, 2, "u1u2")) return f;
    if (auto f = need(l.u1u4, 2, "u1u4")) return f;
    if (auto f = need(l.u3v, 2, "u3v")) return f;
    if (auto f = need(l.u3, 2, "u3")) return f;
    if (auto f = need(l.v, 2, "v")) return f;
    if (l.u3v.size() == 2 && l.u3.size() == 2 && l.v.size() == 2 && l.u3v == l.u3 && l.u3 == l.v)
        return "u3v, u3 and v are identical 2-lists";
    return std::nullopt;
}

std::optional<std::string> lemma_g_hypothesis_failure(const LemmaGLists& l) {
    if (auto f = need(l.u2, 6, "u2")) return f;
    if (auto f = need(l.u4, 6, "u4")) return f;
    if (auto f = need(l.u2u4, 6, "u2u4")) return f;
    if (auto f = need(l.u1u2, 4, "u1u2")) return f;
    if (auto f = need(l.u2u3, 4, "u2u3")) return f;
    if (auto f = need(l.u3u4, 4, "u3u4")) return f;
    if (auto f = need(l.u1u4, 4, "u1u4")) return f;
    if (auto f = need(l.u1, 2, "u1")) return f;
    if (auto f = need(l.u3, 2, "u3")) return f;
    if (auto f = need(l.u1u3, 2, "u1u3")) return f;
    if (l.u1.size() == 2 && l.u3.size() == 2 && l.u1u3.size() == 2 && l.u1 == l.u3 && l.u3 == l.u1u3)
        return "u1, u3 and u1u3 are identical 2-lists";
    return std::nullopt;
}

const char* to_string(ColoringOutcome::Status s) {
    switch (s) {
        case ColoringOutcome::Status::Success: return "success";
        case ColoringOutcome::Status::UndersizedLists: return "undersized-lists";
        case ColoringOutcome::Status::NotColorable: return "not-colorable";
        case ColoringOutcome::Status::NotReducible: return "not-reducible";
        case ColoringOutcome::Status::BudgetExhausted: return "budget-exhausted";
        case ColoringOutcome::Status::InternalError: return "internal-error";
    }
    return "?";
}

}  // namespace potc
