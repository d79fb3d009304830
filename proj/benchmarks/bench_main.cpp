#include <benchmark/benchmark.h>

#include "trung/checks.hpp"
#include "trung/construction.hpp"
#include "trung/corpus.hpp"
#include "trung/homology.hpp"
#include "trung/poly.hpp"

namespace {

using namespace trung;

const Graph& family_member(int steps) {
    static const auto family = generate_girth4_family(5, VertexChoice::First);
    return family[static_cast<std::size_t>(steps - 1)].graph;
}

void BM_IndependencePolynomial(benchmark::State& state) {
    const Graph& g = family_member(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial(g));
    state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_IndependencePolynomial)->DenseRange(1, 5);

void BM_MaximalIndependentSets(benchmark::State& state) {
    const Graph& g = family_member(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximal_independent_sets(g));
}
BENCHMARK(BM_MaximalIndependentSets)->DenseRange(1, 5);

void BM_IndependentSetEnumeration(benchmark::State& state) {
    const Graph& g = family_member(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        long count = 0;
        for_each_independent_set(g, [&](VertexSet) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_IndependentSetEnumeration)->DenseRange(1, 5);

void BM_BettiNumbers(benchmark::State& state) {
    const Graph& g = family_member(static_cast<int>(state.range(0)));
    auto complex = independence_complex(g);
    for (auto _ : state) benchmark::DoNotOptimize(betti_over_q(complex));
    state.SetLabel(std::to_string(complex.face_count()) + " faces");
}
BENCHMARK(BM_BettiNumbers)->DenseRange(1, 4);

void BM_W2Check(benchmark::State& state) {
    const Graph& g = family_member(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_w2(g, true));
}
BENCHMARK(BM_W2Check)->DenseRange(1, 5);

void BM_EulerianCheck(benchmark::State& state) {
    const Graph& g = family_member(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(has_eulerian_independence_complex(g));
}
BENCHMARK(BM_EulerianCheck)->DenseRange(1, 5);

void BM_RandomGraphPolynomial(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Graph g = random_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial(g));
}
BENCHMARK(BM_RandomGraphPolynomial)->Arg(16)->Arg(24)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
