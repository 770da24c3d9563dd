#include <doctest.h>

#include "potc/coloring.hpp"
#include "potc/generator.hpp"
#include "potc/io.hpp"
#include "potc/oracle.hpp"
#include "support/corpus.hpp"

using namespace potc;
namespace corpus = potc::test;

TEST_CASE("lst parsing with palette and default") {
    Graph g = to_graph(corpus::single_edge_diagram());
    std::string text =
        "lst 1\n"
        "palette 9\n"
        "default 6\n"
        "v 0 1 2 3 4 5 7\n"
        "e 0 1 2 3 4 5 6 9\n";
    ListAssignment L = parse_lists(text, g);
    CHECK(L.at(Element::vertex(0)) == make_color_set({1, 2, 3, 4, 5, 7}));
    CHECK(L.at(Element::vertex(1)) == color_range(1, 6));  // from default
    CHECK(L.at(Element::edge(0, 1)) == make_color_set({2, 3, 4, 5, 6, 9}));
    CHECK(L.covers(g));
}

TEST_CASE("lst errors") {
    Graph g = to_graph(corpus::single_edge_diagram());
    CHECK_THROWS_AS(parse_lists(std::string("lst 1\nv 0 0 1\n"), g), ParseError);        // color < 1
    CHECK_THROWS_AS(parse_lists(std::string("lst 1\npalette 4\nv 0 5\n"), g), ParseError);
    CHECK_THROWS_AS(parse_lists(std::string("lst 1\ne 0 5 1 2\n"), g), ParseError);      // edge not in graph
    CHECK_THROWS_AS(parse_lists(std::string("lst 1\nv 0 1\nv 0 2\n"), g), ParseError);   // duplicate
    CHECK_THROWS_AS(parse_lists(std::string("nope\n"), g), ParseError);
    ListAssignment no_default = parse_lists(std::string("lst 1\nv 0 1 2\n"), g);
    CHECK_FALSE(no_default.covers(g));
}

TEST_CASE("lst print/parse round trip") {
    Graph g = to_graph(corpus::k4_diagram());
    ListAssignment L = gen_random_lists(g, 6, 9, 99);
    ListAssignment back = parse_lists(print_lists(L, 9), g);
    CHECK(back.lists == L.lists);
}

TEST_CASE("coloring json round trip") {
    Graph g = to_graph(corpus::k4_diagram());
    ListAssignment L = uniform_lists(g, 6);
    OracleResult r = brute_force_l_total(g, L);
    REQUIRE(r.status == OracleResult::Status::Found);
    std::vector<TraceEntry> trace = {{"D", {{"u1", 0}, {"u2", 1}, {"u3", 2}, {"u4", 3}}}, {"low-degree", {{"v", 0}}}};
    std::string json = coloring_to_json(r.coloring, true, trace);
    CHECK(json.find("\"valid\": true") != std::string::npos);
    CHECK(json.find("\"algorithm_trace\"") != std::string::npos);
    CHECK(json.find("\"e:0-1\"") != std::string::npos);
    PartialColoring back = coloring_from_json(json);
    CHECK(back.assigned == r.coloring.assigned);
}

TEST_CASE("dot export structure counts") {
    Diagram d = corpus::k4_diagram();
    Graph g = to_graph(d);
    ListAssignment L = uniform_lists(g, 6);
    OracleResult r = brute_force_l_total(g, L);
    REQUIRE(r.status == OracleResult::Status::Found);
    std::string dot = export_dot(d, &r.coloring);
    size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find("[pos=", pos)) != std::string::npos) {
        ++nodes;
        pos += 5;
    }
    pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++edges;
        pos += 4;
    }
    CHECK(nodes == 4);
    CHECK(edges == 6);
}
