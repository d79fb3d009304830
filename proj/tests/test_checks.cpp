#include <doctest.h>

#include "trung/checks.hpp"
#include "trung/construction.hpp"
#include "trung/corpus.hpp"
#include "trung/errors.hpp"

#include "oracles.hpp"

using namespace trung;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph p4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph k2() { return Graph::from_edges(2, {{0, 1}}); }
Graph two_k2() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("well-covered") {
    CHECK(is_well_covered(c5()).well_covered);
    CHECK(is_well_covered(p4()).well_covered);
    CHECK(is_well_covered(Graph(0)).well_covered);

    auto verdict = is_well_covered(p3());
    CHECK_FALSE(verdict.well_covered);
    CHECK(verdict.short_maximal_set == VertexSet::of({1}));

    SUBCASE("witnesses are genuine: maximal, independent, short") {
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = random_graph(rng, 1 + static_cast<int>(uniform_below(rng, 9)));
            auto v = is_well_covered(g);
            if (v.well_covered) continue;
            REQUIRE(v.short_maximal_set.has_value());
            VertexSet w = *v.short_maximal_set;
            CHECK(is_independent(g, w));
            CHECK(w.size() < independence_number(g));
            for (int u = 0; u < g.order(); ++u)
                if (!w.contains(u)) CHECK_FALSE(is_independent(g, w.with(u)));
        }
    }
}

TEST_CASE("W2") {
    CHECK(is_w2(c5()).status == Ternary::True);
    CHECK(is_w2(k2()).status == Ternary::True);
    CHECK(is_w2(Graph(1)).status == Ternary::NotApplicable);
    CHECK(is_w2(Graph(0)).status == Ternary::NotApplicable);

    SUBCASE("P4 fails with a concrete pair") {
        auto verdict = is_w2(p4());
        CHECK(verdict.status == Ternary::False);
        REQUIRE(verdict.failing_pair.has_value());
        auto [a, b] = *verdict.failing_pair;
        CHECK(a == VertexSet());
        CHECK(b == VertexSet::of({0, 3}));
        CHECK_FALSE(w2_pair_extendable(p4(), a, b));
        // the pair {0},{2} fails as well: the only maximum set through 2 is {0,2}
        CHECK_FALSE(w2_pair_extendable(p4(), VertexSet::of({0}), VertexSet::of({2})));
    }

    SUBCASE("pair extension primitive") {
        CHECK(w2_pair_extendable(c5(), VertexSet::of({0}), VertexSet::of({2})));
        CHECK(w2_pair_extendable(k2(), VertexSet::of({0}), VertexSet::of({1})));
        CHECK(w2_pair_extendable(c5(), VertexSet(), VertexSet()));
        CHECK_THROWS_AS(w2_pair_extendable(c5(), VertexSet::of({0}), VertexSet::of({0})),
                        std::domain_error);
        CHECK_THROWS_AS(w2_pair_extendable(c5(), VertexSet::of({0, 1}), VertexSet()),
                        std::domain_error);
    }

    SUBCASE("agrees with the literal pair scan") {
        std::mt19937_64 rng(52);
        for (int trial = 0; trial < 150; ++trial) {
            Graph g = random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 6)));
            CHECK((is_w2(g).status == Ternary::True) == oracle::w2_by_definition(g));
        }
    }

    SUBCASE("W2 implies well-covered") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 150; ++trial) {
            Graph g = random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 7)));
            if (is_w2(g).status == Ternary::True) CHECK(is_well_covered(g).well_covered);
        }
    }

    SUBCASE("guard above 16 vertices") {
        CHECK_THROWS_AS(is_w2(Graph(17)), CapacityError);
        CHECK(is_w2(Graph(17), true).status == Ternary::False);
    }

    SUBCASE("failing pairs really fail") {
        std::mt19937_64 rng(54);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 7)));
            auto verdict = is_w2(g);
            if (verdict.status != Ternary::False) continue;
            REQUIRE(verdict.failing_pair.has_value());
            CHECK_FALSE(
                w2_pair_extendable(g, verdict.failing_pair->first, verdict.failing_pair->second));
        }
    }
}

TEST_CASE("Eulerian independence complex") {
    CHECK(has_eulerian_independence_complex(c5()).eulerian);
    CHECK(has_eulerian_independence_complex(k2()).eulerian);
    CHECK(has_eulerian_independence_complex(two_k2()).eulerian);

    SUBCASE("P4 fails at F = {} since I(P4,-1) = 0") {
        auto verdict = has_eulerian_independence_complex(p4());
        CHECK_FALSE(verdict.eulerian);
        CHECK(verdict.failing_f == VertexSet());
    }
    SUBCASE("non-well-covered graphs fail with the short maximal set") {
        auto verdict = has_eulerian_independence_complex(p3());
        CHECK_FALSE(verdict.eulerian);
        CHECK(verdict.short_maximal_set == VertexSet::of({1}));
        CHECK_FALSE(verdict.failing_f.has_value());
    }
    SUBCASE("every reported F really violates the identity") {
        std::mt19937_64 rng(55);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = random_graph(rng, 1 + static_cast<int>(uniform_below(rng, 8)));
            auto verdict = has_eulerian_independence_complex(g);
            if (!verdict.failing_f) continue;
            VertexSet f = *verdict.failing_f;
            CHECK(is_independent(g, f));
            IntPoly p = independence_polynomial(subgraph_g_f(g, f).graph);
            BigInt expected = p.degree() % 2 == 0 ? 1 : -1;
            CHECK(p.eval_int(-1) != expected);
        }
    }
}

TEST_CASE("Charney-Davis status") {
    SUBCASE("K2 + K2 holds with value zero") {
        auto cd = charney_davis_check(two_k2());
        CHECK(cd.status == CdStatus::HoldsZero);
        CHECK(cd.alpha == 2);
        CHECK(cd.value_at_minus_half == 0);
    }
    SUBCASE("C5 holds positively with value 1/4") {
        auto cd = charney_davis_check(c5());
        CHECK(cd.status == CdStatus::HoldsPositive);
        CHECK(cd.signed_value == Rational(1, 4));
        CHECK(cd.value_at_minus_half == Rational(-1, 4));
    }
    SUBCASE("odd alpha is not applicable") {
        auto cd = charney_davis_check(k2());
        CHECK(cd.status == CdStatus::NotApplicable);
        CHECK(cd.reason == "alpha odd");
    }
    SUBCASE("isolated vertices are not applicable") {
        auto cd = charney_davis_check(Graph(2));
        CHECK(cd.status == CdStatus::NotApplicable);
        CHECK(cd.reason == "isolated vertex");
    }
}

TEST_CASE("Dehn-Sommerville zero") {
    SUBCASE("K2") {
        auto v = dehn_sommerville_zero(k2());
        CHECK(v.status == Ternary::True);
        CHECK(v.value_at_minus_half == 0);
    }
    SUBCASE("Tr(C5,0) with alpha 3") {
        auto v = dehn_sommerville_zero(tr(c5(), 0).graph);
        CHECK(v.status == Ternary::True);
        CHECK(v.value_at_minus_half == 0);
    }
    SUBCASE("third family member with alpha 5") {
        auto family = generate_girth4_family(3, VertexChoice::First);
        CHECK(independence_number(family[2].graph) == 5);
        CHECK(dehn_sommerville_zero(family[2].graph).status == Ternary::True);
    }
    SUBCASE("not applicable cases") {
        CHECK(dehn_sommerville_zero(c5()).status == Ternary::NotApplicable);  // alpha even
        CHECK(dehn_sommerville_zero(p4()).status == Ternary::NotApplicable);  // not Eulerian
    }
}

TEST_CASE("h-vector palindrome") {
    SUBCASE("C5 gives (1,3,1)") {
        auto v = h_vector_palindrome(c5());
        CHECK(v.status == Ternary::True);
        CHECK(v.h == std::vector<BigInt>{1, 3, 1});
    }
    SUBCASE("K2 gives (1,1)") {
        auto v = h_vector_palindrome(k2());
        CHECK(v.status == Ternary::True);
        CHECK(v.h == std::vector<BigInt>{1, 1});
    }
    SUBCASE("K2 + K2 gives (1,2,1)") {
        auto v = h_vector_palindrome(two_k2());
        CHECK(v.status == Ternary::True);
        CHECK(v.h == std::vector<BigInt>{1, 2, 1});
    }
    SUBCASE("not applicable without an Eulerian complex") {
        CHECK(h_vector_palindrome(p4()).status == Ternary::NotApplicable);
    }
}
