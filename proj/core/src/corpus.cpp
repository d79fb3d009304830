#include "trung/corpus.hpp"

#include <stdexcept>

namespace trung {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("uniform_below needs a positive bound");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_probability) {
    // compare against a fixed-point threshold so the stream of draws is
    // platform-independent
    std::uint64_t threshold =
        edge_probability >= 1.0
            ? ~std::uint64_t{0}
            : static_cast<std::uint64_t>(edge_probability * 18446744073709551616.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_graph_without_isolated(std::mt19937_64& rng, int n, double edge_probability) {
    if (n == 1) throw std::domain_error("a single vertex is always isolated");
    for (;;) {
        Graph g = random_graph(rng, n, edge_probability);
        if (!has_isolated_vertex(g)) return g;
    }
}

int random_non_isolated_vertex(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> candidates;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) candidates.push_back(v);
    if (candidates.empty()) return -1;
    return candidates[uniform_below(rng, candidates.size())];
}

}  // namespace trung
