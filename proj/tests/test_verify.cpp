#include <doctest.h>

#include "trung/corpus.hpp"
#include "trung/verify.hpp"

#include "oracles.hpp"

using namespace trung;

TEST_CASE("reference polynomial matches the test oracle") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, static_cast<int>(uniform_below(rng, 11)));
        CHECK(reference_independence_polynomial(g) ==
              oracle::exhaustive_independence_polynomial(g));
    }
}

TEST_CASE("verify suites pass on small corpora") {
    auto recurrence = run_recurrence_suite(SuiteOptions{5, 25, 7});
    CHECK(recurrence.passed);
    CHECK(recurrence.cases > 0);
    CHECK(recurrence.failures.empty());

    auto preservation = run_preservation_suite(SuiteOptions{4, 25, 7});
    CHECK(preservation.passed);
    CHECK(preservation.cases > 0);

    SuiteOptions family_options{14, 3, 7};  // 3 random chains of 3 steps each
    auto cd = run_charney_davis_suite(family_options);
    CHECK(cd.passed);
    CHECK(cd.cases == 12);  // one first-strategy chain plus three random ones
}

TEST_CASE("suites are deterministic for a fixed seed") {
    SuiteOptions options{7, 10, 3};
    auto a = run_recurrence_suite(options);
    auto b = run_recurrence_suite(options);
    CHECK(a.cases == b.cases);
    CHECK(a.passed == b.passed);
}
