#include "trung/graph.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "trung/errors.hpp"

namespace trung {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range 0.." +
                                std::to_string(n_ - 1));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::domain_error("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return g;
}

Graph graph_from_adjacency(int n, std::vector<std::uint64_t> adj) {
    Graph g(n);
    g.adj_ = std::move(adj);
    return g;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return VertexSet(adj_[static_cast<std::size_t>(v)]);
}

std::uint64_t neighbors_word(const Graph& g, int v) { return g.neighbors(v).bits(); }

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[static_cast<std::size_t>(u)]))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet f) {
    if (!f.subset_of(g.vertices()))
        throw std::out_of_range("vertex set contains indices outside the graph");
    std::uint64_t bits = f.bits();
    for (int v : f) bits |= g.neighbors(v).bits();
    return VertexSet(bits);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
    if (!keep.subset_of(g.vertices()))
        throw std::out_of_range("vertex set contains indices outside the graph");
    std::vector<int> old_of_new = keep.to_vector();
    std::array<int, kMaxVertices> new_of_old{};
    for (std::size_t i = 0; i < old_of_new.size(); ++i)
        new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);

    std::vector<std::uint64_t> adj(old_of_new.size(), 0);
    for (std::size_t i = 0; i < old_of_new.size(); ++i) {
        for (int w : g.neighbors(old_of_new[i]) & keep)
            adj[i] |= std::uint64_t{1} << new_of_old[static_cast<std::size_t>(w)];
    }
    return InducedSubgraph{graph_from_adjacency(static_cast<int>(old_of_new.size()), std::move(adj)),
                           std::move(old_of_new)};
}

InducedSubgraph subgraph_g_f(const Graph& g, VertexSet f) {
    return induced_subgraph(g, g.vertices() - closed_neighborhood(g, f));
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v));
    return induced_subgraph(g, g.vertices().without(v)).graph;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

std::vector<VertexSet> independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_independent_set(g, [&](VertexSet s) { out.push_back(s); });
    return out;
}

namespace {

// Bron-Kerbosch with Tomita pivoting over complement adjacency (maximal
// cliques of the complement are exactly the maximal independent sets).
void bron_kerbosch(const std::vector<std::uint64_t>& cadj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<VertexSet>& out) {
    if (p == 0 && x == 0) {
        out.push_back(VertexSet(r));
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1;
    int best = -1;
    for (int u : VertexSet(px)) {
        int c = std::popcount(p & cadj[static_cast<std::size_t>(u)]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    std::uint64_t candidates = p & ~cadj[static_cast<std::size_t>(pivot)];
    for (int v : VertexSet(candidates)) {
        std::uint64_t vbit = std::uint64_t{1} << v;
        bron_kerbosch(cadj, r | vbit, p & cadj[static_cast<std::size_t>(v)],
                      x & cadj[static_cast<std::size_t>(v)], out);
        p &= ~vbit;
        x |= vbit;
    }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets_in(const Graph& g, VertexSet within) {
    if (!within.subset_of(g.vertices()))
        throw std::out_of_range("vertex set contains indices outside the graph");
    std::vector<std::uint64_t> cadj(static_cast<std::size_t>(g.order()), 0);
    for (int v : within)
        cadj[static_cast<std::size_t>(v)] =
            within.bits() & ~g.neighbors(v).bits() & ~(std::uint64_t{1} << v);
    std::vector<VertexSet> out;
    bron_kerbosch(cadj, 0, within.bits(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_independent_sets_in(g, g.vertices());
}

namespace {

int alpha_of_mask(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    int count = 0;
    // vertices with no neighbor inside the mask always join
    std::uint64_t isolated = 0;
    for (int v : VertexSet(mask))
        if ((adj[static_cast<std::size_t>(v)] & mask) == 0) isolated |= std::uint64_t{1} << v;
    count += std::popcount(isolated);
    mask &= ~isolated;
    if (mask == 0) return count;

    // split off one connected chunk; recurse on the rest separately
    std::uint64_t comp = 0;
    std::uint64_t frontier = mask & (~mask + 1);  // lowest vertex
    while (frontier) {
        comp |= frontier;
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= adj[static_cast<std::size_t>(v)] & mask;
        frontier = next & ~comp;
    }
    if (comp != mask) return count + alpha_of_mask(adj, comp) + alpha_of_mask(adj, mask & ~comp);

    int pick = -1;
    int best_deg = -1;
    for (int v : VertexSet(mask)) {
        int d = std::popcount(adj[static_cast<std::size_t>(v)] & mask);
        if (d > best_deg) {
            best_deg = d;
            pick = v;
        }
    }
    std::uint64_t vbit = std::uint64_t{1} << pick;
    int without = alpha_of_mask(adj, mask & ~vbit);
    int with = 1 + alpha_of_mask(adj, mask & ~(adj[static_cast<std::size_t>(pick)] | vbit));
    return count + std::max(without, with);
}

}  // namespace

int independence_number(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    return alpha_of_mask(adj, g.vertices().bits());
}

std::vector<InducedSubgraph> connected_components(const Graph& g) {
    std::vector<InducedSubgraph> out;
    std::uint64_t remaining = g.vertices().bits();
    while (remaining) {
        std::uint64_t comp = 0;
        std::uint64_t frontier = remaining & (~remaining + 1);
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            for (int v : VertexSet(frontier)) next |= g.neighbors(v).bits() & remaining;
            frontier = next & ~comp;
        }
        out.push_back(induced_subgraph(g, VertexSet(comp)));
        remaining &= ~comp;
    }
    return out;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        int head = 0;
        int tail = 0;
        dist[static_cast<std::size_t>(root)] = 0;
        queue[tail++] = root;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue[tail++] = w;
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    best = std::min(best,
                                    dist[static_cast<std::size_t>(u)] +
                                        dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

}  // namespace trung
