#include "potc/oracle.hpp"

#include <algorithm>
#include <functional>

#include "potc/generator.hpp"

namespace potc {

namespace {

bool elements_conflict(const Graph& g, const Element& a, const Element& b) {
    if (a.is_vertex() && b.is_vertex()) return g.has_edge(a.v, b.v);
    if (a.is_edge() && b.is_edge()) {
        return a.e.u == b.e.u || a.e.u == b.e.v || a.e.v == b.e.u || a.e.v == b.e.v;
    }
    const Element& vert = a.is_vertex() ? a : b;
    const Element& edge = a.is_vertex() ? b : a;
    return edge.e.u == vert.v || edge.e.v == vert.v;
}

}  // namespace

OracleResult brute_force_l_total(const Graph& g, const ListAssignment& L, OracleBudget b) {
    OracleResult res;
    std::vector<Element> elems = all_elements(g);
    size_t n = elems.size();

    std::vector<std::vector<int>> later_conflicts(n);  // j > i conflicting with i
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (elements_conflict(g, elems[i], elems[j])) later_conflicts[i].push_back(static_cast<int>(j));

    std::vector<ColorSet> domain(n);
    for (size_t i = 0; i < n; ++i) domain[i] = L.at(elems[i]);

    std::vector<Color> value(n, 0);
    std::vector<std::pair<int, Color>> trail;
    bool budget_out = false;

    std::function<bool(size_t)> search = [&](size_t i) -> bool {
        if (i == n) return true;
        ColorSet options = domain[i];
        for (Color c : options) {
            if (++res.nodes > b.max_nodes) {
                budget_out = true;
                return false;
            }
            value[i] = c;
            size_t mark = trail.size();
            bool dead = false;
            for (int j : later_conflicts[i]) {
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
            if (!dead && search(i + 1)) return true;
            while (trail.size() > mark) {
                auto [j, col] = trail.back();
                trail.pop_back();
                set_insert(domain[static_cast<size_t>(j)], col);
            }
            if (budget_out) return false;
        }
        return false;
    };

    if (search(0)) {
        res.status = OracleResult::Status::Found;
        for (size_t i = 0; i < n; ++i) res.coloring.set(elems[i], value[i]);
    } else {
        res.status = budget_out ? OracleResult::Status::BudgetExhausted : OracleResult::Status::NotColorable;
    }
    return res;
}

ChiResult total_chromatic_number(const Graph& g, OracleBudget b) {
    ChiResult res;
    if (g.n_vertices() == 0) return res;
    std::uint64_t spent = 0;
    for (int k = std::max(1, g.max_degree() + 1);; ++k) {
        OracleBudget rem{b.max_nodes > spent ? b.max_nodes - spent : 0, b.timeout_hint_seconds};
        OracleResult r = brute_force_l_total(g, uniform_lists(g, k), rem);
        spent += r.nodes;
        res.nodes = spent;
        if (r.status == OracleResult::Status::Found) {
            res.chi = k;
            return res;
        }
        if (r.status == OracleResult::Status::BudgetExhausted) {
            res.status = ChiResult::Status::BudgetExhausted;
            return res;
        }
    }
}

ChoosabilityResult sample_choosability(const Graph& g, int k, int trials, int palette, std::uint64_t seed,
                                       OracleBudget b) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (palette < k || k < 1) throw std::invalid_argument("palette must be at least k >= 1");
    ChoosabilityResult res;
    for (int t = 0; t < trials; ++t) {
        ListAssignment L = gen_random_lists(g, k, palette, seed + static_cast<std::uint64_t>(t));
        OracleResult r = brute_force_l_total(g, L, b);
        if (r.status == OracleResult::Status::NotColorable) {
            res.verdict = ChoosabilityResult::Verdict::CounterexampleFound;
            res.failing_trial = t;
            res.counterexample = std::move(L);
            return res;
        }
        if (r.status == OracleResult::Status::BudgetExhausted) {
            res.verdict = ChoosabilityResult::Verdict::BudgetExhausted;
            res.failing_trial = t;
            return res;
        }
    }
    return res;
}

}  // namespace potc
