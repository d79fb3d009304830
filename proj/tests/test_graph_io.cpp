#include <doctest.h>

#include <utility>
#include <vector>

#include "trung/construction.hpp"
#include "trung/corpus.hpp"
#include "trung/errors.hpp"
#include "trung/graph_io.hpp"

using namespace trung;

namespace {

struct Graph6Case {
    int n;
    std::vector<std::pair<int, int>> edges;
    const char* graph6;
};

const Graph6Case kGraph6Cases[] = {
#include "fixtures/graph6_cases.inc"
};

}  // namespace

TEST_CASE("edge list parsing") {
    auto c5 = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(c5.graph == trung::c5());
    CHECK_FALSE(c5.duplicate_edges);

    auto k2 = parse_edge_list("2 1\n0 1\n");
    CHECK(k2.graph == Graph::from_edges(2, {{0, 1}}));

    SUBCASE("comments, blank lines, missing trailing newline") {
        auto g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2");
        CHECK(g.graph.edge_count() == 3);
    }
    SUBCASE("duplicate edges set the flag") {
        auto g = parse_edge_list("2 2\n0 1\n1 0\n");
        CHECK(g.graph.edge_count() == 1);
        CHECK(g.duplicate_edges);
    }
    SUBCASE("errors name the line") {
        CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 3\n"), "line 2: index out of range",
                             ParseError);
        CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);       // too few edges
        CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n0 1\n"), ParseError);  // trailing content
        CHECK_THROWS_AS(parse_edge_list("nonsense\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list(""), ParseError);
        CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 7\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("65 0\n"), ParseError);
    }
}

TEST_CASE("edge list writing is canonical") {
    CHECK(write_edge_list(Graph::from_edges(2, {{0, 1}})) == "2 1\n0 1\n");
    CHECK(write_edge_list(Graph(3)) == "3 0\n");
    CHECK(write_edge_list(trung::c5()) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(write_edge_list(Graph(0)) == "0 0\n");
    CHECK(parse_edge_list("0 0\n").graph == Graph(0));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, static_cast<int>(uniform_below(rng, 13)));
        auto round = parse_edge_list(write_edge_list(g));
        CHECK(round.graph == g);
        CHECK_FALSE(round.duplicate_edges);
    }
}

TEST_CASE("graph6 against frozen reference records") {
    for (const auto& fixture : kGraph6Cases) {
        Graph g = Graph::from_edges(fixture.n, fixture.edges);
        CHECK(write_graph6(g) == fixture.graph6);
        CHECK(parse_graph6(fixture.graph6) == g);
    }
}

TEST_CASE("graph6 round-trips") {
    CHECK(parse_graph6("A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(write_graph6(trung::c5()) == "Dhc");
    CHECK(write_graph6(Graph(0)) == "?");

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, static_cast<int>(uniform_below(rng, 20)));
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    CHECK(parse_graph6(write_graph6(tr(trung::c5(), 0).graph)) == tr(trung::c5(), 0).graph);
}

TEST_CASE("graph6 rejects malformed records") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B_?"), ParseError);    // n=3 needs exactly one payload byte
    CHECK_THROWS_AS(parse_graph6("A_x"), ParseError);    // too long
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);      // too short
    CHECK_THROWS_AS(parse_graph6("A\x20"), ParseError);  // byte below 63
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);    // long form marker
    CHECK_THROWS_AS(parse_graph6("Ao"), ParseError);     // nonzero padding for n=2

    // writing above 62 vertices is a capacity error
    CHECK_THROWS_AS(write_graph6(Graph(63)), CapacityError);
}
