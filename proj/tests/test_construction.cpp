#include <doctest.h>

#include "trung/construction.hpp"
#include "trung/corpus.hpp"
#include "trung/errors.hpp"
#include "trung/graph_io.hpp"
#include "trung/poly.hpp"

#include "oracles.hpp"

using namespace trung;

TEST_CASE("c5 basics") {
    Graph g = c5();
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(girth(g) == 5);
    CHECK(independence_number(g) == 2);
}

TEST_CASE("Tr(K2,0) is the 5-cycle") {
    TrungResult t = tr(Graph::from_edges(2, {{0, 1}}), 0);
    CHECK(t.graph.order() == 5);
    CHECK(t.a == 2);
    CHECK(t.b == 3);
    CHECK(t.c == 4);
    CHECK(oracle::brute_force_isomorphic(t.graph, c5()));
}

TEST_CASE("Tr(C5,0)") {
    TrungResult t = tr(c5(), 0);
    CHECK(t.graph.order() == 8);
    CHECK(t.graph.edge_count() == 10);
    CHECK(independence_number(t.graph) == 3);
    CHECK(girth(t.graph) == 4);
    // deleting N[b] recovers H with its original labels
    auto back = subgraph_g_f(t.graph, VertexSet::single(t.b));
    CHECK(back.graph == c5());
    CHECK(back.vertex_map == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("construction shape invariants") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        Graph h = random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 8)));
        int v = random_non_isolated_vertex(rng, h);
        if (v < 0) continue;
        TrungResult t = tr(h, v);
        CHECK(t.graph.edge_count() == h.edge_count() + h.degree(v) + 3);
        CHECK(t.graph.neighbors(t.a) == VertexSet::of({t.v, t.b}));
        CHECK(t.graph.neighbors(t.b) == VertexSet::of({t.a, t.c}));
        CHECK(t.graph.neighbors(t.c) == h.neighbors(v).with(t.b));
        CHECK(induced_subgraph(t.graph, VertexSet::universe(h.order())).graph == h);
        CHECK(independence_number(t.graph) == independence_number(h) + 1);
    }
}

TEST_CASE("construction preconditions") {
    Graph lonely = Graph::from_edges(3, {{0, 1}});  // vertex 2 isolated
    CHECK_THROWS_AS(tr(lonely, 2), std::domain_error);
    CHECK_THROWS_AS(tr(lonely, 3), std::out_of_range);
    std::vector<std::pair<int, int>> path;
    for (int i = 0; i + 1 < 62; ++i) path.emplace_back(i, i + 1);
    CHECK_THROWS_AS(tr(Graph::from_edges(62, path), 0), CapacityError);
}

TEST_CASE("maximal independent sets assembled from those of H") {
    SUBCASE("C5 at 0 gives all 12 sets") {
        auto family = maximal_independent_sets_from_h(c5(), 0);
        CHECK(family.size() == 12);
        CHECK(family == maximal_independent_sets(tr(c5(), 0).graph));
    }
    SUBCASE("K2 at 0 gives the 5 maximal sets of the 5-cycle") {
        auto family = maximal_independent_sets_from_h(Graph::from_edges(2, {{0, 1}}), 0);
        CHECK(family.size() == 5);
        CHECK(family == maximal_independent_sets(tr(Graph::from_edges(2, {{0, 1}}), 0).graph));
    }
    SUBCASE("P4 at 1") {
        Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        CHECK(maximal_independent_sets_from_h(p4, 1) ==
              maximal_independent_sets(tr(p4, 1).graph));
    }
    SUBCASE("random graphs") {
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 100; ++trial) {
            Graph h = random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 8)));
            int v = random_non_isolated_vertex(rng, h);
            if (v < 0) continue;
            CHECK(maximal_independent_sets_from_h(h, v) ==
                  maximal_independent_sets(tr(h, v).graph));
        }
    }
}

TEST_CASE("girth-4 family generation") {
    SUBCASE("one step, first strategy") {
        auto family = generate_girth4_family(1, VertexChoice::First);
        REQUIRE(family.size() == 1);
        CHECK(family[0].graph.order() == 8);
        CHECK(family[0].v == 0);
        CHECK(girth(family[0].graph) == 4);
        CHECK(girth(family[0].graph) == oracle::girth_by_edge_removal(family[0].graph));
    }
    SUBCASE("two steps reach 11 vertices with alpha 4") {
        auto family = generate_girth4_family(2, VertexChoice::First);
        REQUIRE(family.size() == 2);
        CHECK(family[1].graph.order() == 11);
        CHECK(independence_number(family[1].graph) == 4);
    }
    SUBCASE("every intermediate is returned and chains up") {
        auto family = generate_girth4_family(4, VertexChoice::First);
        REQUIRE(family.size() == 4);
        for (std::size_t i = 0; i + 1 < family.size(); ++i) {
            const Graph& h = family[i].graph;
            CHECK(induced_subgraph(family[i + 1].graph, VertexSet::universe(h.order())).graph == h);
        }
    }
    SUBCASE("random strategy is deterministic per seed and picks degree-2 vertices") {
        auto one = generate_girth4_family(3, VertexChoice::Random, 99);
        auto two = generate_girth4_family(3, VertexChoice::Random, 99);
        REQUIRE(one.size() == two.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(one[i].graph == two[i].graph);
            CHECK(one[i].v == two[i].v);
        }
        // all five vertices of the 5-cycle are legal first choices
        bool seen_other = false;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto fam = generate_girth4_family(1, VertexChoice::Random, seed);
            CHECK(c5().degree(fam[0].v) == 2);
            if (fam[0].v != 0) seen_other = true;
        }
        CHECK(seen_other);
    }
    SUBCASE("capacity and step validation") {
        CHECK_THROWS_AS(generate_girth4_family(0, VertexChoice::First), std::domain_error);
        CHECK_THROWS_AS(generate_girth4_family(20, VertexChoice::First), CapacityError);
        CHECK(generate_girth4_family(19, VertexChoice::First).back().graph.order() == 62);
    }
}
