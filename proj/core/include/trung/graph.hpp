#ifndef TRUNG_GRAPH_HPP
#define TRUNG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trung/vertex_set.hpp"

namespace trung {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on vertices 0..n-1, adjacency stored as one bitset
// per vertex. Values are immutable after construction; every operation below
// is a pure function and safe to call concurrently on shared graphs.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(int n);

    // Throws std::out_of_range for a bad index, std::domain_error for a
    // self-loop, CapacityError for n outside 0..64. Duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    VertexSet neighbors(int v) const;
    VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
    int degree(int v) const { return neighbors(v).size(); }
    VertexSet vertices() const { return VertexSet::universe(n_); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
    friend Graph graph_from_adjacency(int n, std::vector<std::uint64_t> adj);
};

// Internal fast-path constructor; callers must pass valid symmetric rows.
Graph graph_from_adjacency(int n, std::vector<std::uint64_t> adj);

struct InducedSubgraph {
    Graph graph;
    // vertex_map[new index] = original index, ascending.
    std::vector<int> vertex_map;
};

// N[F]: F together with every vertex adjacent to a member of F.
VertexSet closed_neighborhood(const Graph& g, VertexSet f);

// Induced subgraph on `keep`, surviving vertices relabeled in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

// The graph G_F = G minus N[F]. F need not be independent; the definition
// reads the same way, though everything downstream only uses independent F.
InducedSubgraph subgraph_g_f(const Graph& g, VertexSet f);

Graph delete_vertex(const Graph& g, int v);

bool is_independent(const Graph& g, VertexSet s);

// All independent sets (including the empty set) in ascending bitset-value
// order. The visitor form emits in the same order.
std::vector<VertexSet> independent_sets(const Graph& g);

std::uint64_t neighbors_word(const Graph& g, int v);

template <typename Fn>
void for_each_independent_set(const Graph& g, Fn&& fn) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    auto rec = [&](auto&& self, int v, std::uint64_t current) -> void {
        if (v < 0) {
            fn(VertexSet(current));
            return;
        }
        self(self, v - 1, current);
        if ((adj[static_cast<std::size_t>(v)] & current) == 0)
            self(self, v - 1, current | (std::uint64_t{1} << v));
    };
    rec(rec, g.order() - 1, 0);
}

// Inclusion-maximal independent sets via pivoted Bron-Kerbosch on the
// complement, sorted by bitset value.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Same, restricted to the induced subgraph on `within` (labels kept).
std::vector<VertexSet> maximal_independent_sets_in(const Graph& g, VertexSet within);

int independence_number(const Graph& g);

std::vector<InducedSubgraph> connected_components(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

bool has_isolated_vertex(const Graph& g);

}  // namespace trung

#endif  // TRUNG_GRAPH_HPP
