#include <cmath>

#include <doctest.h>

#include "potc/diagram.hpp"
#include "potc/generator.hpp"
#include "potc/rng.hpp"
#include "support/corpus.hpp"

using namespace potc;
using potc::test::k4_diagram;

namespace {

const char* kK4Pod =
    "pod 1\n"
    "vertices 4\n"
    "block 4 0 1 2 3\n"
    "edge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\nedge 0 2\nedge 1 3\n";

// Independent crossing oracle: boundary positions on the unit circle,
// proper segment intersection via orientation signs.
bool geometric_cross(int m, int a, int b, int c, int d) {
    auto pt = [&](int p) {
        double t = -2.0 * M_PI * p / m;
        return std::pair<double, double>{std::cos(t), std::sin(t)};
    };
    auto orient = [](std::pair<double, double> p, std::pair<double, double> q, std::pair<double, double> r) {
        double v = (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
        if (v > 1e-12) return 1;
        if (v < -1e-12) return -1;
        return 0;
    };
    auto A = pt(a), B = pt(b), C = pt(c), D = pt(d);
    return orient(A, B, C) * orient(A, B, D) < 0 && orient(C, D, A) * orient(C, D, B) < 0;
}

}  // namespace

TEST_CASE("parse K4 pod") {
    Diagram d = parse_diagram(std::string(kK4Pod));
    CHECK(d.n_vertices == 4);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].boundary == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(d.all_edges().size() == 6);
    CHECK(validate_diagram(d).valid);
}

TEST_CASE("parse single vertex block") {
    Diagram d = parse_diagram(std::string("pod 1\nvertices 1\nblock 1 0\n"));
    CHECK(d.n_vertices == 1);
    CHECK(d.all_edges().empty());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_diagram(std::string("pod 1\nvertices 2\nblock 2 0 1\nedge 0 0\n")), ParseError);
    CHECK_THROWS_AS(parse_diagram(std::string("pod 1\nvertices 2\nblock 2 0 1\nedge 0 1\nedge 1 0\n")),
                    ParseError);  // duplicate under canonicalization
    CHECK_THROWS_AS(parse_diagram(std::string("pod 1\nvertices 3\nblock 2 0 1\nedge 0 2\n")), ParseError);
    CHECK_THROWS_AS(parse_diagram(std::string("pod 1\nvertices 2\nblock 2 0 5\n")), ParseError);
    CHECK_THROWS_AS(parse_diagram(std::string("pod 1\nvertices 2\nblock 2 0 0\n")), ParseError);
    CHECK_THROWS_AS(parse_diagram(std::string("nonsense\n")), ParseError);
    try {
        parse_diagram(std::string("pod 1\nvertices 2\nblock 2 0 1\nedge 0 0\n"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("ambiguous edge needs inblock") {
    // two blocks sharing two vertices: the edge host is ambiguous at parse
    // time (validation rejects the sharing separately)
    std::string pod =
        "pod 1\nvertices 4\nblock 3 0 1 2\nblock 3 0 1 3\nedge 0 1\n";
    CHECK_THROWS_AS(parse_diagram(pod), ParseError);
    Diagram d = parse_diagram(std::string("pod 1\nvertices 4\nblock 3 0 1 2\nblock 3 0 1 3\nedge 0 1 inblock 1\n"));
    CHECK(d.blocks[1].edges.count(make_edge(0, 1)) == 1);
    CHECK_FALSE(validate_diagram(d).valid);
}

TEST_CASE("semicolon separated single-line pod") {
    Diagram d = parse_diagram(std::string("pod 1;vertices 3;block 3 0 1 2;edge 0 1;edge 1 2;edge 0 2"));
    CHECK(d.all_edges().size() == 3);
}

TEST_CASE("chords_cross basics") {
    Diagram d = k4_diagram();
    const Block& b = d.blocks[0];
    CHECK(chords_cross(b, make_edge(0, 2), make_edge(1, 3)));
    CHECK(chords_cross(b, make_edge(1, 3), make_edge(0, 2)));  // symmetry
    CHECK_FALSE(chords_cross(b, make_edge(0, 2), make_edge(0, 1)));  // shared endpoint
    Diagram d5 = potc::test::single_block(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}});
    CHECK_THROWS_AS(chords_cross(d5.blocks[0], make_edge(0, 2), make_edge(1, 4)), std::invalid_argument);
}

TEST_CASE("chords_cross nested and spanning chords") {
    Diagram d = potc::test::single_block(5, {{0, 2}, {3, 4}});
    CHECK_FALSE(chords_cross(d.blocks[0], make_edge(0, 2), make_edge(3, 4)));
    // hexagon diameter against a same-side chord: interleaved positions cross
    Diagram h = potc::test::single_block(6, {{0, 3}, {1, 5}});
    CHECK(chords_cross(h.blocks[0], make_edge(0, 3), make_edge(1, 5)));
    CHECK(geometric_cross(6, 0, 3, 1, 5));
}

TEST_CASE("chords_cross agrees with the geometric oracle") {
    Rng rng(71);
    for (int it = 0; it < 200; ++it) {
        GenParams p;
        p.n_vertices = 5 + rng.below(8);
        p.n_blocks = 1;
        p.chord_density = 0.9;
        p.crossing_density = rng.unit();
        p.boundary_edge_density = 0.5;
        p.seed = 1000 + static_cast<std::uint64_t>(it);
        Diagram d = gen_random_diagram(p);
        const Block& b = d.blocks[0];
        auto chords = b.chords();
        for (size_t i = 0; i < chords.size(); ++i) {
            for (size_t j = i + 1; j < chords.size(); ++j) {
                const EdgeKey &e1 = chords[i], &e2 = chords[j];
                if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
                bool expect = geometric_cross(b.size(), *b.position_of(e1.u), *b.position_of(e1.v),
                                              *b.position_of(e2.u), *b.position_of(e2.v));
                CHECK(chords_cross(b, e1, e2) == expect);
            }
        }
    }
}

TEST_CASE("validate_diagram verdicts") {
    ValidationReport k4 = validate_diagram(k4_diagram());
    CHECK(k4.valid);
    CHECK(k4.crossing_counts.at(make_edge(0, 2)) == 1);
    CHECK(k4.crossing_counts.at(make_edge(1, 3)) == 1);
    CHECK(k4.crossing_counts.at(make_edge(0, 1)) == 0);

    // three pairwise-crossing diameters of a hexagon: each crossed twice
    Diagram bad = potc::test::single_block(6, {{0, 3}, {1, 4}, {2, 5}});
    ValidationReport rep = validate_diagram(bad);
    CHECK_FALSE(rep.valid);
    CHECK(rep.crossing_counts.at(make_edge(0, 3)) == 2);
    CHECK(rep.crossing_counts.at(make_edge(1, 4)) == 2);
    CHECK(rep.crossing_counts.at(make_edge(2, 5)) == 2);

    Diagram chordless = potc::test::c4_diagram();
    ValidationReport ok = validate_diagram(chordless);
    CHECK(ok.valid);
    for (const auto& [e, c] : ok.crossing_counts) CHECK(c == 0);
}

TEST_CASE("to_graph degree sequences") {
    Graph k4 = to_graph(k4_diagram());
    for (VertexId v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    Graph k23 = to_graph(potc::test::k23_diagram());
    std::vector<int> degs;
    for (VertexId v = 0; v < 5; ++v) degs.push_back(k23.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 2, 2, 3, 3});

    Diagram two;
    two.n_vertices = 4;
    potc::test::add_block(two, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    potc::test::add_block(two, {2, 3}, {{2, 3}});
    CHECK(validate_diagram(two).valid);
    CHECK(to_graph(two).degree(2) == 3);
}

TEST_CASE("classify_interval") {
    Diagram d = potc::test::single_block(4, {{0, 1}, {1, 2}, {2, 3}});
    const Block& b = d.blocks[0];
    CHECK(classify_interval(b, 0, 3) == IntervalClass::Path);
    CHECK(classify_interval(b, 3, 0) == IntervalClass::NonEdge);  // edge {3,0} absent
    Diagram d2 = potc::test::single_block(4, {{1, 2}, {2, 3}});
    CHECK(classify_interval(d2.blocks[0], 0, 1) == IntervalClass::NonEdge);
    Diagram d3 = potc::test::single_block(5, {{0, 1}, {2, 3}});
    CHECK(classify_interval(d3.blocks[0], 0, 3) == IntervalClass::Subpath);
    CHECK_THROWS_AS(classify_interval(d3.blocks[0], 0, 9), std::out_of_range);
}

TEST_CASE("chord_contained") {
    Diagram d = potc::test::single_block(6, {{0, 5}, {1, 3}, {0, 3}, {2, 5}});
    const Block& b = d.blocks[0];
    CHECK(chord_contained(b, make_edge(0, 5), make_edge(1, 3)));
    CHECK_FALSE(chord_contained(b, make_edge(1, 3), make_edge(0, 5)));
    CHECK_FALSE(chord_contained(b, make_edge(0, 3), make_edge(2, 5)));
    Diagram d2 = potc::test::single_block(6, {{0, 1}, {1, 3}});
    CHECK_THROWS_AS(chord_contained(d2.blocks[0], make_edge(0, 1), make_edge(1, 3)), std::invalid_argument);
}

TEST_CASE("rotation invariance") {
    Rng rng(5);
    for (int it = 0; it < 60; ++it) {
        GenParams p;
        p.n_vertices = 5 + rng.below(6);
        p.n_blocks = 1;
        p.chord_density = 0.8;
        p.crossing_density = 0.7;
        p.boundary_edge_density = 0.7;
        p.seed = 400 + static_cast<std::uint64_t>(it);
        Diagram d = gen_random_diagram(p);
        int m = d.blocks[0].size();
        int r = 1 + rng.below(m - 1);
        Diagram rot = d;
        std::rotate(rot.blocks[0].boundary.begin(), rot.blocks[0].boundary.begin() + r,
                    rot.blocks[0].boundary.end());

        CHECK(validate_diagram(d).valid == validate_diagram(rot).valid);
        auto chords = d.blocks[0].chords();
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j) {
                const EdgeKey &e1 = chords[i], &e2 = chords[j];
                if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
                CHECK(chords_cross(d.blocks[0], e1, e2) == chords_cross(rot.blocks[0], e1, e2));
            }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                // positions remap by the rotation offset
                CHECK(classify_interval(d.blocks[0], (i + r) % m, (j + r) % m) ==
                      classify_interval(rot.blocks[0], i, j));
            }
    }
}

TEST_CASE("print/parse round trip is canonical") {
    Rng rng(6);
    for (int it = 0; it < 80; ++it) {
        GenParams p;
        p.n_vertices = 4 + rng.below(12);
        p.n_blocks = 1 + rng.below(3);
        p.chord_density = rng.unit();
        p.crossing_density = rng.unit();
        p.boundary_edge_density = rng.unit();
        p.seed = 7000 + static_cast<std::uint64_t>(it);
        Diagram d;
        try {
            d = gen_random_diagram(p);
        } catch (const InfeasibleParams&) {
            continue;
        }
        std::string once = print_diagram(d);
        Diagram back = parse_diagram(once);
        CHECK(print_diagram(back) == once);
        CHECK(validate_diagram(back).valid);
    }
}

TEST_CASE("every edge lives in exactly one block") {
    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        GenParams p;
        p.n_vertices = 6 + rng.below(14);
        p.n_blocks = 1 + rng.below(4);
        p.chord_density = 0.6;
        p.crossing_density = 0.5;
        p.boundary_edge_density = 0.8;
        p.seed = 8100 + static_cast<std::uint64_t>(it);
        Diagram d;
        try {
            d = gen_random_diagram(p);
        } catch (const InfeasibleParams&) {
            continue;
        }
        size_t total = 0;
        for (const Block& b : d.blocks) total += b.edges.size();
        CHECK(total == d.all_edges().size());  // all_edges sorts the union; equality means no duplicates
    }
}

TEST_CASE("interval dichotomy on crossing-free segments") {
    // 2-connected diagrams: a segment whose chords are mutually non-crossing
    // and that no edge leaves is a non-edge or a path
    for (int n = 4; n <= 6; ++n) {
        for (const Diagram& d : enumerate_diagrams(n, true)) {
            Graph g = to_graph(d);
            if (!is_biconnected(g)) continue;
            const Block& b = d.blocks[0];
            int m = b.size();
            auto chords = b.chords();
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    if (i == j) continue;
                    int len = ((j - i) % m + m) % m;
                    auto in_closed = [&](int p) { return ((p - i) % m + m) % m <= len; };
                    std::vector<EdgeKey> seg;
                    for (const EdgeKey& c : chords)
                        if (in_closed(*b.position_of(c.u)) && in_closed(*b.position_of(c.v))) seg.push_back(c);
                    bool crossing_free = true;
                    for (size_t a = 0; a < seg.size() && crossing_free; ++a)
                        for (size_t bb = a + 1; bb < seg.size() && crossing_free; ++bb) {
                            const EdgeKey &e1 = seg[a], &e2 = seg[bb];
                            if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
                            if (chords_cross(b, e1, e2)) crossing_free = false;
                        }
                    if (!crossing_free) continue;
                    bool leak = false;
                    for (const EdgeKey& e : b.edges) {
                        int pu = ((*b.position_of(e.u) - i) % m + m) % m;
                        int pv = ((*b.position_of(e.v) - i) % m + m) % m;
                        bool u_inside = pu > 0 && pu < len;
                        bool v_inside = pv > 0 && pv < len;
                        bool u_outside = pu > len;
                        bool v_outside = pv > len;
                        if ((u_inside && v_outside) || (v_inside && u_outside)) leak = true;
                    }
                    if (leak) continue;
                    IntervalClass cls = classify_interval(b, i, j);
                    CHECK(cls != IntervalClass::Subpath);
                }
            }
        }
    }
}
