#ifndef TRUNG_CORPUS_HPP
#define TRUNG_CORPUS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "trung/errors.hpp"
#include "trung/graph.hpp"

namespace trung {

// Hand-rolled sampling helpers: std::uniform_int_distribution is not pinned
// across standard libraries, and corpora must reproduce bit-for-bit from a
// seed on any platform.

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Each of the C(n,2) edges present independently with the given probability.
Graph random_graph(std::mt19937_64& rng, int n, double edge_probability = 0.5);

// Resamples until no vertex is isolated (requires n != 1).
Graph random_graph_without_isolated(std::mt19937_64& rng, int n,
                                    double edge_probability = 0.5);

// Uniform choice among non-isolated vertices; -1 when there is none.
int random_non_isolated_vertex(std::mt19937_64& rng, const Graph& g);

// All 2^C(n,2) graphs on n labeled vertices, ascending edge-mask order.
// Guarded at n <= 11 (beyond that the edge mask would overflow a word, and
// the sweep is hopeless anyway).
template <typename Fn>
void for_each_graph(int n, Fn&& fn) {
    if (n > 11) throw CapacityError("exhaustive graph sweep capped at 11 vertices");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1) edges.push_back(slots[k]);
        fn(Graph::from_edges(n, edges));
    }
}

}  // namespace trung

#endif  // TRUNG_CORPUS_HPP
