#ifndef TRUNG_HOMOLOGY_HPP
#define TRUNG_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trung/checks.hpp"
#include "trung/graph.hpp"

namespace trung {

// Simplicial complex graded by dimension. faces_by_dim[d + 1] holds the
// d-dimensional faces; index 0 holds the empty face. Within a dimension the
// faces are sorted lexicographically by ascending vertex sequence, which
// fixes the column order of every boundary matrix.
struct FaceComplex {
    std::vector<std::vector<VertexSet>> faces_by_dim;

    int dim() const { return static_cast<int>(faces_by_dim.size()) - 2; }
    std::size_t face_count() const;
    const std::vector<VertexSet>& faces_of_dim(int d) const {
        return faces_by_dim[static_cast<std::size_t>(d + 1)];
    }
};

// All independent sets of G graded by dimension |F| - 1.
FaceComplex independence_complex(const Graph& g);

// Reduced rational Betti numbers, indices -1..dim.
struct BettiVector {
    std::vector<std::int64_t> values;  // values[d + 1] = betti in dimension d

    std::int64_t at(int d) const {
        std::size_t i = static_cast<std::size_t>(d + 1);
        return i < values.size() ? values[i] : 0;
    }
    int max_dim() const { return static_cast<int>(values.size()) - 2; }
};

// Ranks of the boundary maps of the reduced chain complex (augmentation map
// included) via exact integer elimination. Verifies the alternating-sum
// identity between Betti numbers and face counts before returning.
BettiVector betti_over_q(const FaceComplex& complex);

struct CmVerdict {
    bool cohen_macaulay = false;
    std::optional<VertexSet> failing_f;  // link of this face has homology below its dimension
    int failing_dim = 0;
};

// Reisner's criterion over Q: for every independent F the link of F, which
// is the independence complex of G_F, must have vanishing reduced homology
// below its dimension.
CmVerdict is_cm_over_q(const Graph& g);

struct GorensteinVerdict {
    Ternary status = Ternary::NotApplicable;
    std::string reason;
};

// Gorenstein over Q for graphs without isolated vertices: Eulerian
// independence complex plus Cohen-Macaulay over Q.
GorensteinVerdict is_gorenstein_over_q(const Graph& g);

}  // namespace trung

#endif  // TRUNG_HOMOLOGY_HPP
