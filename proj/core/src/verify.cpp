#include "trung/verify.hpp"

#include <algorithm>

#include "trung/checks.hpp"
#include "trung/construction.hpp"
#include "trung/corpus.hpp"
#include "trung/errors.hpp"
#include "trung/graph_io.hpp"
#include "trung/homology.hpp"

namespace trung {

IntPoly reference_independence_polynomial(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw CapacityError("subset-counting reference capped at 24 vertices");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();

    std::vector<char> independent(std::size_t{1} << n, 0);
    independent[0] = 1;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    counts[0] = 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        int v = std::countr_zero(mask);
        std::uint64_t rest = mask & (mask - 1);
        if (independent[rest] && (adj[static_cast<std::size_t>(v)] & rest) == 0) {
            independent[mask] = 1;
            ++counts[static_cast<std::size_t>(std::popcount(mask))];
        }
    }
    std::vector<BigInt> coeffs;
    for (std::uint64_t c : counts) coeffs.emplace_back(c);
    return IntPoly(std::move(coeffs));
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

void record_failure(SuiteResult& result, const std::string& what, const Graph& g) {
    result.passed = false;
    if (result.failures.size() < kMaxRecordedFailures)
        result.failures.push_back(what + "\n" + write_edge_list(g));
}

std::vector<int> non_isolated_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) out.push_back(v);
    return out;
}

template <typename Fn>
void for_each_corpus_pair(const SuiteOptions& options, int exhaustive_cap, Fn&& fn) {
    for (int n = 2; n <= std::min(options.n_max, exhaustive_cap); ++n)
        for_each_graph(n, [&](const Graph& h) {
            for (int v : non_isolated_vertices(h)) fn(h, v);
        });
    if (options.n_max > exhaustive_cap) {
        std::mt19937_64 rng(options.seed);
        for (int t = 0; t < options.trials; ++t) {
            int n = exhaustive_cap + 1 +
                    static_cast<int>(uniform_below(
                        rng, static_cast<std::uint64_t>(options.n_max - exhaustive_cap)));
            Graph h = random_graph(rng, n);
            int v = random_non_isolated_vertex(rng, h);
            if (v < 0) continue;
            fn(h, v);
        }
    }
}

}  // namespace

SuiteResult run_recurrence_suite(const SuiteOptions& options) {
    SuiteResult result{"recurrence", true, 0, {}};

    // enumeration against subset counting
    for (int n = 0; n <= std::min(options.n_max, 6); ++n)
        for_each_graph(n, [&](const Graph& g) {
            ++result.cases;
            if (independence_polynomial(g) != reference_independence_polynomial(g))
                record_failure(result, "independence polynomial disagrees with subset counting", g);
        });
    if (options.n_max > 6) {
        std::mt19937_64 rng(options.seed);
        for (int t = 0; t < options.trials; ++t) {
            int n = 7 + static_cast<int>(
                            uniform_below(rng, static_cast<std::uint64_t>(options.n_max - 6)));
            Graph g = random_graph(rng, n);
            ++result.cases;
            if (independence_polynomial(g) != reference_independence_polynomial(g))
                record_failure(result, "independence polynomial disagrees with subset counting", g);
        }
    }

    // enumeration on Tr(H,v) against the two-term recurrence
    for_each_corpus_pair(options, 5, [&](const Graph& h, int v) {
        ++result.cases;
        TrungResult t = tr(h, v);
        IntPoly direct = independence_polynomial(t.graph);
        IntPoly via_recurrence = trung_polynomial(
            independence_polynomial(h),
            independence_polynomial(subgraph_g_f(h, VertexSet::single(v)).graph));
        if (direct != via_recurrence)
            record_failure(result,
                           "recurrence mismatch at v=" + std::to_string(v) + ": " +
                               direct.to_string() + " vs " + via_recurrence.to_string(),
                           h);
    });
    return result;
}

SuiteResult run_preservation_suite(const SuiteOptions& options) {
    SuiteResult result{"preservation", true, 0, {}};
    for_each_corpus_pair(options, 5, [&](const Graph& h, int v) {
        ++result.cases;
        TrungResult t = tr(h, v);

        if (independence_number(t.graph) != independence_number(h) + 1)
            record_failure(result, "alpha did not increase by one at v=" + std::to_string(v), h);

        if (is_well_covered(t.graph).well_covered != is_well_covered(h).well_covered)
            record_failure(result, "well-covered not preserved at v=" + std::to_string(v), h);

        auto assembled = maximal_independent_sets_from_h(h, v);
        if (assembled != maximal_independent_sets(t.graph))
            record_failure(result, "assembled family differs from enumeration at v=" + std::to_string(v),
                           h);

        if (subgraph_g_f(t.graph, VertexSet::single(t.b)).graph != h)
            record_failure(result, "G_b is not H at v=" + std::to_string(v), h);

        if (is_w2(t.graph, true).status != is_w2(h, true).status)
            record_failure(result, "W2 not preserved at v=" + std::to_string(v), h);

        if (is_gorenstein_over_q(t.graph).status != is_gorenstein_over_q(h).status)
            record_failure(result, "Gorenstein not preserved at v=" + std::to_string(v), h);
    });
    return result;
}

SuiteResult run_charney_davis_suite(const SuiteOptions& options) {
    SuiteResult result{"charney-davis", true, 0, {}};
    int steps = std::clamp((options.n_max - 5) / 3, 1, 19);

    auto check_member = [&](const TrungResult& member) {
        ++result.cases;
        const Graph& g = member.graph;
        if (girth(g) != std::optional<int>(4))
            record_failure(result, "family member does not have girth 4", g);
        if (is_gorenstein_over_q(g).status != Ternary::True)
            record_failure(result, "family member is not Gorenstein over Q", g);
        if (is_w2(g, true).status != Ternary::True)
            record_failure(result, "family member is not W2", g);

        auto cd = charney_davis_check(g);
        if (cd.alpha % 2 == 0) {
            if (cd.status != CdStatus::HoldsZero && cd.status != CdStatus::HoldsPositive)
                record_failure(result, "Charney-Davis sign is negative", g);
        } else if (cd.value_at_minus_half != 0) {
            record_failure(result, "I(G,-1/2) nonzero despite odd alpha", g);
        }
    };

    for (const auto& member : generate_girth4_family(steps, VertexChoice::First)) check_member(member);
    for (int chain = 0; chain < options.trials; ++chain)
        for (const auto& member :
             generate_girth4_family(steps, VertexChoice::Random, options.seed + static_cast<std::uint64_t>(chain)))
            check_member(member);
    return result;
}

}  // namespace trung
