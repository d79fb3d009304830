#include "trung/construction.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "trung/errors.hpp"
#include "trung/graph_io.hpp"

namespace trung {

Graph c5() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

TrungResult tr(const Graph& h, int v) {
    const int n = h.order();
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (h.degree(v) == 0)
        throw std::domain_error("chosen vertex " + std::to_string(v) + " is isolated");
    if (n + 3 > kMaxVertices)
        throw CapacityError("construction would exceed " + std::to_string(kMaxVertices) +
                            " vertices");

    const int a = n;
    const int b = n + 1;
    const int c = n + 2;
    auto edges = h.edges();
    edges.emplace_back(v, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
    for (int w : h.neighbors(v)) edges.emplace_back(w, c);
    return TrungResult{Graph::from_edges(n + 3, edges), a, b, c, v};
}

std::vector<VertexSet> maximal_independent_sets_from_h(const Graph& h, int v) {
    TrungResult t = tr(h, v);  // validates preconditions, fixes labels
    std::vector<VertexSet> out;
    for (VertexSet m : maximal_independent_sets(h)) {
        if (m.contains(v)) {
            out.push_back(m.with(t.c));
            out.push_back(m.with(t.b));
            out.push_back(m.without(v).with(t.a).with(t.c));
        } else {
            out.push_back(m.with(t.a));
            out.push_back(m.with(t.b));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Rejection-sampled uniform index; implementation-pinned so results are
// reproducible across platforms, unlike std::uniform_int_distribution.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

std::vector<TrungResult> generate_girth4_family(int steps, VertexChoice choice,
                                                std::uint64_t seed) {
    if (steps < 1) throw std::domain_error("steps must be at least 1");
    if (5 + 3 * steps > kMaxVertices)
        throw CapacityError("a " + std::to_string(steps) + "-step family exceeds " +
                            std::to_string(kMaxVertices) + " vertices (max 19 steps)");

    std::mt19937_64 rng(seed);
    std::vector<TrungResult> out;
    out.reserve(static_cast<std::size_t>(steps));
    Graph current = c5();
    for (int step = 0; step < steps; ++step) {
        std::vector<int> degree_two;
        for (int v = 0; v < current.order(); ++v)
            if (current.degree(v) == 2) degree_two.push_back(v);
        if (degree_two.empty())
            throw std::domain_error("no degree-2 vertex available in\n" +
                                    write_edge_list(current));
        int v = choice == VertexChoice::First
                    ? degree_two.front()
                    : degree_two[uniform_index(rng, degree_two.size())];
        out.push_back(tr(current, v));
        current = out.back().graph;
    }
    return out;
}

}  // namespace trung
