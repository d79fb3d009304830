#include "trung/homology.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "trung/exact_rank.hpp"

namespace trung {

namespace {

// Lexicographic order on ascending vertex sequences of equal-size sets: the
// smallest vertex in the symmetric difference decides.
bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    return (a.bits() & (d & (~d + 1))) != 0;
}

}  // namespace

std::size_t FaceComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& level : faces_by_dim) total += level.size();
    return total;
}

FaceComplex independence_complex(const Graph& g) {
    FaceComplex complex;
    complex.faces_by_dim.resize(1);
    for_each_independent_set(g, [&](VertexSet f) {
        std::size_t level = static_cast<std::size_t>(f.size());
        if (complex.faces_by_dim.size() <= level) complex.faces_by_dim.resize(level + 1);
        complex.faces_by_dim[level].push_back(f);
    });
    for (auto& level : complex.faces_by_dim) std::sort(level.begin(), level.end(), lex_less);
    return complex;
}

namespace {

// Boundary of each d-face as a signed column over the (d-1)-faces.
SparseColumns boundary_columns(const std::vector<VertexSet>& facets,
                               const std::vector<VertexSet>& faces) {
    std::unordered_map<std::uint64_t, int> facet_index;
    facet_index.reserve(facets.size() * 2);
    for (std::size_t i = 0; i < facets.size(); ++i)
        facet_index.emplace(facets[i].bits(), static_cast<int>(i));

    SparseColumns columns(faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j) {
        int sign = 1;
        auto& column = columns[j];
        for (int v : faces[j]) {
            column.emplace_back(facet_index.at(faces[j].without(v).bits()), sign);
            sign = -sign;
        }
        std::sort(column.begin(), column.end());
    }
    return columns;
}

}  // namespace

BettiVector betti_over_q(const FaceComplex& complex) {
    const int dim = complex.dim();
    std::vector<int> rank(static_cast<std::size_t>(dim) + 2, 0);  // rank[d+1] = rank of boundary_d
    for (int d = 0; d <= dim; ++d) {
        const auto& faces = complex.faces_of_dim(d);
        const auto& facets = complex.faces_of_dim(d - 1);
        rank[static_cast<std::size_t>(d) + 1] =
            exact_rank(static_cast<int>(facets.size()), boundary_columns(facets, faces));
    }

    BettiVector betti;
    betti.values.resize(static_cast<std::size_t>(dim) + 2, 0);
    std::int64_t betti_alternating = 0;
    std::int64_t face_alternating = 0;
    for (int d = -1; d <= dim; ++d) {
        std::int64_t faces = static_cast<std::int64_t>(complex.faces_of_dim(d).size());
        std::int64_t above = d < dim ? rank[static_cast<std::size_t>(d) + 2] : 0;
        std::int64_t value = faces - rank[static_cast<std::size_t>(d) + 1] - above;
        betti.values[static_cast<std::size_t>(d) + 1] = value;
        std::int64_t sign = (d % 2 == 0) ? 1 : -1;  // d = -1 gets sign -1
        betti_alternating += sign * value;
        face_alternating += sign * faces;
    }
    if (betti_alternating != face_alternating)
        throw std::logic_error("Betti alternating sum disagrees with face counts");
    return betti;
}

namespace {

struct AdjacencyKeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const {
        std::size_t h = key.size();
        for (std::uint64_t word : key) h = h * 1099511628211ull + word;
        return h;
    }
};

// Betti vectors of independence complexes recur heavily across link
// computations, so cache them by adjacency rows.
BettiVector betti_of_graph_cached(const Graph& g) {
    static std::mutex mutex;
    static std::unordered_map<std::vector<std::uint64_t>, BettiVector, AdjacencyKeyHash> cache;

    std::vector<std::uint64_t> key(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) key[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BettiVector betti = betti_over_q(independence_complex(g));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(betti)).first->second;
}

}  // namespace

CmVerdict is_cm_over_q(const Graph& g) {
    CmVerdict verdict{true, std::nullopt, 0};
    std::set<std::uint64_t> seen_survivors;
    for_each_independent_set(g, [&](VertexSet f) {
        if (!verdict.cohen_macaulay) return;
        VertexSet survivors = g.vertices() - closed_neighborhood(g, f);
        if (!seen_survivors.insert(survivors.bits()).second) return;
        const Graph link_graph = induced_subgraph(g, survivors).graph;
        BettiVector betti = betti_of_graph_cached(link_graph);
        int link_dim = betti.max_dim();
        for (int d = -1; d < link_dim; ++d)
            if (betti.at(d) != 0) {
                verdict = CmVerdict{false, f, d};
                return;
            }
    });
    return verdict;
}

GorensteinVerdict is_gorenstein_over_q(const Graph& g) {
    if (g.order() > 0 && has_isolated_vertex(g))
        return GorensteinVerdict{Ternary::NotApplicable, "isolated vertex"};
    if (!has_eulerian_independence_complex(g).eulerian)
        return GorensteinVerdict{Ternary::False, "independence complex is not Eulerian"};
    if (!is_cm_over_q(g).cohen_macaulay)
        return GorensteinVerdict{Ternary::False, "not Cohen-Macaulay over Q"};
    return GorensteinVerdict{Ternary::True, ""};
}

}  // namespace trung
