#ifndef TRUNG_CONSTRUCTION_HPP
#define TRUNG_CONSTRUCTION_HPP

#include <cstdint>
#include <vector>

#include "trung/graph.hpp"

namespace trung {

// Tr(H,v): H plus three new vertices a, b, c with edges a-v, a-b, b-c and
// c-w for every neighbor w of v. New vertices are appended as n, n+1, n+2.
struct TrungResult {
    Graph graph;
    int a = 0;
    int b = 0;
    int c = 0;
    // the chosen vertex, same index as in H
    int v = 0;
};

// The 5-cycle 0-1-2-3-4-0.
Graph c5();

// Throws std::out_of_range for a bad index, std::domain_error when v is
// isolated, CapacityError when the result would exceed 64 vertices.
TrungResult tr(const Graph& h, int v);

// The maximal independent sets of Tr(H,v) assembled from those of H:
// A+{a}, A+{b} for maximal A avoiding v; B+{c}, B+{b}, (B-{v})+{a,c} for
// maximal B containing v. Returned deduplicated in ascending order.
std::vector<VertexSet> maximal_independent_sets_from_h(const Graph& h, int v);

enum class VertexChoice {
    First,   // smallest-index degree-2 vertex
    Random,  // uniform over degree-2 vertices, seeded
};

// Applies the construction `steps` times starting from C5, choosing a
// degree-2 vertex each round, and returns every intermediate result.
// Throws CapacityError when 5 + 3*steps > 64 and std::domain_error when no
// degree-2 vertex is available (the message carries the offending graph).
std::vector<TrungResult> generate_girth4_family(int steps, VertexChoice choice,
                                                std::uint64_t seed = 0);

}  // namespace trung

#endif  // TRUNG_CONSTRUCTION_HPP
