#include <doctest.h>

#include "potc/coloring.hpp"
#include "potc/generator.hpp"
#include "potc/oracle.hpp"
#include "potc/rng.hpp"
#include "support/corpus.hpp"
#include "support/gadgets.hpp"

using namespace potc;
namespace corpus = potc::test;
using potc::test::make_b_gadget;
using potc::test::make_d_gadget;
using potc::test::make_f_gadget;
using potc::test::make_g_gadget;

namespace {

// definition-level recomputation of the available list, kept separate from
// the library implementation
ColorSet avail_by_definition(const Graph& g, const ListAssignment& L, const PartialColoring& phi, Element x) {
    ColorSet out;
    for (Color c : L.at(x)) {
        bool ok = true;
        for (const Element& y : all_elements(g)) {
            if (y == x || !phi.has(y) || phi.at(y) != c) continue;
            bool touches = false;
            if (x.is_vertex() && y.is_vertex()) touches = g.has_edge(x.v, y.v);
            if (x.is_vertex() && y.is_edge()) touches = (y.e.u == x.v || y.e.v == x.v);
            if (x.is_edge() && y.is_vertex()) touches = (x.e.u == y.v || x.e.v == y.v);
            if (x.is_edge() && y.is_edge())
                touches = (x.e.u == y.e.u || x.e.u == y.e.v || x.e.v == y.e.u || x.e.v == y.e.v);
            if (touches) ok = false;
        }
        if (ok) out.push_back(c);
    }
    return out;
}

bool solution_respects(const GadgetProblem& p, const std::map<Element, Color>& sol) {
    for (const Element& x : p.uncolored) {
        auto it = sol.find(x);
        if (it == sol.end()) return false;
        if (!set_contains(p.avail.at(x), it->second)) return false;
    }
    for (const auto& [a, b] : p.conflicts)
        if (sol.at(a) == sol.at(b)) return false;
    return true;
}

}  // namespace

TEST_CASE("available_list on a path") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    ListAssignment L;
    L.lists[Element::vertex(0)] = make_color_set({1, 2, 3});
    L.lists[Element::vertex(1)] = make_color_set({1, 2, 3});
    L.lists[Element::vertex(2)] = make_color_set({1, 2, 3});
    L.lists[Element::edge(0, 1)] = make_color_set({1, 2, 3});
    L.lists[Element::edge(1, 2)] = make_color_set({1, 2, 3});
    PartialColoring phi;
    phi.set(Element::vertex(1), 1);
    phi.set(Element::edge(0, 1), 2);
    CHECK(available_list(g, L, phi, Element::vertex(0)) == make_color_set({3}));

    PartialColoring empty;
    for (const Element& x : all_elements(g)) CHECK(available_list(g, L, empty, x) == L.at(x));
}

TEST_CASE("available_list on saturated K4 corner") {
    Graph g = to_graph(corpus::k4_diagram());
    ListAssignment L = uniform_lists(g, 7);
    PartialColoring phi;
    phi.set(Element::edge(0, 1), 1);
    phi.set(Element::edge(0, 2), 2);
    phi.set(Element::edge(0, 3), 3);
    phi.set(Element::vertex(1), 4);
    phi.set(Element::vertex(2), 5);
    phi.set(Element::vertex(3), 6);
    CHECK(available_list(g, L, phi, Element::vertex(0)) == make_color_set({7}));
}

TEST_CASE("available_list matches the definition on random partial colorings") {
    Rng rng(21);
    for (int it = 0; it < 60; ++it) {
        GenParams p;
        p.n_vertices = 4 + rng.below(8);
        p.n_blocks = 1;
        p.chord_density = rng.unit();
        p.crossing_density = rng.unit();
        p.boundary_edge_density = 0.8;
        p.seed = 600 + static_cast<std::uint64_t>(it);
        Graph g = to_graph(gen_random_diagram(p));
        ListAssignment L = gen_random_lists(g, 6, 9, p.seed + 1);
        PartialColoring phi;
        for (const Element& x : all_elements(g))
            if (rng.chance(0.5)) phi.set(x, L.at(x)[static_cast<size_t>(rng.below(static_cast<int>(L.at(x).size())))]);
        for (const Element& x : all_elements(g))
            CHECK(available_list(g, L, phi, x) == avail_by_definition(g, L, phi, x));
    }
}

TEST_CASE("verify_total_coloring verdicts") {
    Graph k4 = to_graph(corpus::k4_diagram());
    ListAssignment L6 = uniform_lists(k4, 6);
    OracleResult witness = brute_force_l_total(k4, uniform_lists(k4, 5));
    REQUIRE(witness.status == OracleResult::Status::Found);
    CHECK(verify_total_coloring(k4, L6, witness.coloring).valid);

    Graph e(2);
    e.add_edge(0, 1);
    ListAssignment L = uniform_lists(e, 6);
    PartialColoring clash;
    clash.set(Element::vertex(0), 1);
    clash.set(Element::vertex(1), 1);
    clash.set(Element::edge(0, 1), 2);
    VerifyReport rep = verify_total_coloring(e, L, clash);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.conflicts.size() == 1);
    CHECK(rep.conflicts[0].first == Element::vertex(0));
    CHECK(rep.conflicts[0].second == Element::vertex(1));

    PartialColoring partial;
    partial.set(Element::vertex(0), 1);
    partial.set(Element::edge(0, 1), 2);
    VerifyReport rep2 = verify_total_coloring(e, L, partial);
    CHECK_FALSE(rep2.valid);
    REQUIRE(rep2.missing.size() == 1);
    CHECK(rep2.missing[0] == Element::vertex(1));

    PartialColoring off;
    off.set(Element::vertex(0), 9);
    off.set(Element::vertex(1), 1);
    off.set(Element::edge(0, 1), 2);
    CHECK(verify_total_coloring(e, L, off).off_list.size() == 1);
}

TEST_CASE("color_cycle_edges_2lists") {
    std::vector<EdgeKey> cycle = {make_edge(0, 1), make_edge(1, 2), make_edge(2, 3), make_edge(0, 3)};
    std::map<EdgeKey, ColorSet> avail;
    for (const EdgeKey& e : cycle) avail[e] = make_color_set({1, 2});
    auto sol = color_cycle_edges_2lists(cycle, avail);
    CHECK(sol[cycle[0]] == 1);
    CHECK(sol[cycle[1]] == 2);
    CHECK(sol[cycle[2]] == 1);
    CHECK(sol[cycle[3]] == 2);

    avail[cycle[3]] = make_color_set({3, 4});
    sol = color_cycle_edges_2lists(cycle, avail);
    for (int i = 0; i < 4; ++i) {
        CHECK(set_contains(avail[cycle[static_cast<size_t>(i)]], sol[cycle[static_cast<size_t>(i)]]));
        CHECK(sol[cycle[static_cast<size_t>(i)]] != sol[cycle[static_cast<size_t>((i + 1) % 4)]]);
    }

    // staggered lists around the cycle
    avail[cycle[0]] = make_color_set({1, 2});
    avail[cycle[1]] = make_color_set({2, 3});
    avail[cycle[2]] = make_color_set({3, 4});
    avail[cycle[3]] = make_color_set({4, 1});
    sol = color_cycle_edges_2lists(cycle, avail);
    for (int i = 0; i < 4; ++i) {
        CHECK(set_contains(avail[cycle[static_cast<size_t>(i)]], sol[cycle[static_cast<size_t>(i)]]));
        CHECK(sol[cycle[static_cast<size_t>(i)]] != sol[cycle[static_cast<size_t>((i + 1) % 4)]]);
    }

    Rng rng(31);
    for (int it = 0; it < 1000; ++it) {
        for (const EdgeKey& e : cycle) avail[e] = rng.k_subset(2, 6);
        auto s = color_cycle_edges_2lists(cycle, avail);
        for (int i = 0; i < 4; ++i) {
            CHECK(set_contains(avail[cycle[static_cast<size_t>(i)]], s[cycle[static_cast<size_t>(i)]]));
            CHECK(s[cycle[static_cast<size_t>(i)]] != s[cycle[static_cast<size_t>((i + 1) % 4)]]);
        }
    }
}

TEST_CASE("solve_gadget basics") {
    GadgetProblem one;
    one.uncolored = {Element::vertex(0)};
    one.avail[Element::vertex(0)] = make_color_set({1});
    auto sol = solve_gadget(one);
    REQUIRE(sol.has_value());
    CHECK(sol->at(Element::vertex(0)) == 1);

    GadgetProblem pigeon;
    pigeon.uncolored = {Element::vertex(0), Element::vertex(1)};
    pigeon.avail[Element::vertex(0)] = make_color_set({1});
    pigeon.avail[Element::vertex(1)] = make_color_set({1});
    pigeon.conflicts = {{Element::vertex(0), Element::vertex(1)}};
    CHECK_FALSE(solve_gadget(pigeon).has_value());

    GadgetProblem big;
    for (int i = 0; i < 17; ++i) {
        big.uncolored.push_back(Element::vertex(i));
        big.avail[Element::vertex(i)] = make_color_set({1});
    }
    CHECK_THROWS_AS(solve_gadget(big), GadgetTooLarge);
}

TEST_CASE("lemma hypothesis checkers") {
    Rng rng(41);
    LemmaDLists d = potc::test::random_d_lists(rng);
    CHECK_FALSE(lemma_d_hypothesis_failure(d).has_value());
    LemmaDLists short_d = d;
    short_d.u2u4 = make_color_set({1, 2, 3, 4, 5});
    CHECK(lemma_d_hypothesis_failure(short_d).has_value());
    LemmaDLists same = d;
    same.u1u2 = make_color_set({1, 2});
    same.u2u3 = make_color_set({1, 2});
    auto fail = lemma_d_hypothesis_failure(same);
    REQUIRE(fail.has_value());
    CHECK(fail->find("u1u2") != std::string::npos);

    LemmaFLists f = potc::test::random_f_lists(rng);
    CHECK_FALSE(lemma_f_hypothesis_failure(f).has_value());
    f.u3v = f.u3 = f.v = make_color_set({1, 2});
    CHECK(lemma_f_hypothesis_failure(f).has_value());

    LemmaGLists gg = potc::test::random_g_lists(rng);
    CHECK_FALSE(lemma_g_hypothesis_failure(gg).has_value());
    gg.u1 = gg.u3 = gg.u1u3 = make_color_set({2, 3});
    CHECK(lemma_g_hypothesis_failure(gg).has_value());

    LemmaBLists b = potc::test::random_b_lists(rng);
    CHECK_FALSE(lemma_b_hypothesis_failure(b).has_value());
    b.v2v3 = make_color_set({1, 2, 3});
    CHECK(lemma_b_hypothesis_failure(b).has_value());
}

TEST_CASE("tight gadget instances always extend (mini suites)") {
    Rng rng(51);
    for (int it = 0; it < 200; ++it) {
        GadgetProblem p = make_d_gadget(potc::test::random_d_lists(rng));
        auto sol = solve_gadget(p);
        REQUIRE_MESSAGE(sol.has_value(), "config-d instance ", it, " has no extension");
        CHECK(solution_respects(p, *sol));
    }
    for (int it = 0; it < 200; ++it) {
        GadgetProblem p = make_f_gadget(potc::test::random_f_lists(rng));
        auto sol = solve_gadget(p);
        REQUIRE_MESSAGE(sol.has_value(), "config-f instance ", it, " has no extension");
        CHECK(solution_respects(p, *sol));
    }
    for (int it = 0; it < 200; ++it) {
        GadgetProblem p = make_g_gadget(potc::test::random_g_lists(rng));
        auto sol = solve_gadget(p);
        REQUIRE_MESSAGE(sol.has_value(), "config-g instance ", it, " has no extension");
        CHECK(solution_respects(p, *sol));
    }
    for (int it = 0; it < 200; ++it) {
        ColorSet u1 = rng.k_subset(5, 9), u2 = rng.k_subset(6, 9), u3 = rng.k_subset(5, 9);
        GadgetProblem p = make_b_gadget(potc::test::random_b_lists(rng), u1, u2, u3);
        auto sol = solve_gadget(p);
        REQUIRE_MESSAGE(sol.has_value(), "config-b instance ", it, " has no extension");
        CHECK(solution_respects(p, *sol));
    }
}

TEST_CASE("distinctness violations are rejected up front") {
    Rng rng(61);
    for (int it = 0; it < 20; ++it) {
        LemmaDLists d = potc::test::random_d_lists(rng);
        d.u2u3 = d.u1u2;  // both 2-lists, now equal
        CHECK(lemma_d_hypothesis_failure(d).has_value());

        LemmaFLists f = potc::test::random_f_lists(rng);
        f.u3 = f.u3v;
        f.v = f.u3v;
        CHECK(lemma_f_hypothesis_failure(f).has_value());

        LemmaGLists gg = potc::test::random_g_lists(rng);
        gg.u1 = gg.u1u3;
        gg.u3 = gg.u1u3;
        CHECK(lemma_g_hypothesis_failure(gg).has_value());
    }
}

TEST_CASE("tight g-triple instance extends") {
    Rng rng(65);
    LemmaGLists l = potc::test::random_g_lists(rng);
    l.u1u3 = make_color_set({1, 3});
    l.u3 = make_color_set({1, 2});
    l.u1 = make_color_set({2, 3});
    REQUIRE_FALSE(lemma_g_hypothesis_failure(l).has_value());
    GadgetProblem p = make_g_gadget(l);
    auto sol = solve_gadget(p);
    REQUIRE(sol.has_value());
    CHECK(solution_respects(p, *sol));
}

TEST_CASE("solve_gadget is deterministic") {
    Rng a(71), b(71);
    GadgetProblem pa = make_g_gadget(potc::test::random_g_lists(a));
    GadgetProblem pb = make_g_gadget(potc::test::random_g_lists(b));
    auto sa = solve_gadget(pa);
    auto sb = solve_gadget(pb);
    REQUIRE(sa.has_value());
    REQUIRE(sb.has_value());
    CHECK(*sa == *sb);
}
