#ifndef TRUNG_CHECKS_HPP
#define TRUNG_CHECKS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trung/graph.hpp"
#include "trung/poly.hpp"

namespace trung {

enum class Ternary { False, True, NotApplicable };

struct WellCoveredVerdict {
    bool well_covered = false;
    // a maximal independent set smaller than alpha, first in value order
    std::optional<VertexSet> short_maximal_set;
};

WellCoveredVerdict is_well_covered(const Graph& g);

struct W2Verdict {
    Ternary status = Ternary::False;
    // disjoint independent pair with no disjoint maximum extensions
    std::optional<std::pair<VertexSet, VertexSet>> failing_pair;
    std::string reason;  // set when not applicable
};

// Definitional check: every pair of disjoint independent sets (empty sets
// included) must extend to two disjoint maximum independent sets. Scanning
// is reduced to pairs (A, B) with B maximal among the independent sets
// disjoint from A, which decides exactly the same property because failures
// are inherited upward. Guarded to 16 vertices unless `force`.
W2Verdict is_w2(const Graph& g, bool force = false);

// Whether one pair of disjoint independent sets has the required disjoint
// maximum extensions (throws std::domain_error if the inputs overlap or are
// not independent).
bool w2_pair_extendable(const Graph& g, VertexSet a, VertexSet b);

struct EulerianVerdict {
    bool eulerian = false;
    // whichever failed first: well-coveredness...
    std::optional<VertexSet> short_maximal_set;
    // ...or the Euler identity I(G_F,-1) = (-1)^alpha(G_F) at this F
    std::optional<VertexSet> failing_f;
};

EulerianVerdict has_eulerian_independence_complex(const Graph& g);

enum class CdStatus { HoldsZero, HoldsPositive, Fails, NotApplicable };

struct CharneyDavisVerdict {
    CdStatus status = CdStatus::NotApplicable;
    std::string reason;  // set when not applicable
    int alpha = 0;
    Rational value_at_minus_half;          // I(G,-1/2), always computed
    std::optional<Rational> signed_value;  // (-1)^(alpha/2) I(G,-1/2), alpha even
};

CharneyDavisVerdict charney_davis_check(const Graph& g);

struct DehnSommervilleVerdict {
    Ternary status = Ternary::NotApplicable;
    std::string reason;
    Rational value_at_minus_half;
};

// I(G,-1/2) = 0 whenever G has an Eulerian independence complex and odd
// alpha; not applicable otherwise.
DehnSommervilleVerdict dehn_sommerville_zero(const Graph& g);

struct PalindromeVerdict {
    Ternary status = Ternary::NotApplicable;
    std::string reason;
    std::vector<BigInt> h;  // h-vector padded to alpha+1 entries
};

// h_i = h_(alpha-i) for graphs with an Eulerian independence complex.
PalindromeVerdict h_vector_palindrome(const Graph& g);

}  // namespace trung

#endif  // TRUNG_CHECKS_HPP
