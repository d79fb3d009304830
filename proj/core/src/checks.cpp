#include "trung/checks.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "trung/errors.hpp"

namespace trung {

WellCoveredVerdict is_well_covered(const Graph& g) {
    auto maximal = maximal_independent_sets(g);
    int alpha = 0;
    for (VertexSet m : maximal) alpha = std::max(alpha, m.size());
    for (VertexSet m : maximal)
        if (m.size() < alpha) return WellCoveredVerdict{false, m};
    return WellCoveredVerdict{true, std::nullopt};
}

namespace {

struct MaximumSetIndex {
    std::vector<std::uint64_t> sets;          // maximum independent sets, value order
    std::vector<std::vector<std::uint64_t>> disjoint;  // bitset rows over set indices
    std::size_t words = 0;

    explicit MaximumSetIndex(const Graph& g) {
        auto maximal = maximal_independent_sets(g);
        int alpha = 0;
        for (VertexSet m : maximal) alpha = std::max(alpha, m.size());
        for (VertexSet m : maximal)
            if (m.size() == alpha) sets.push_back(m.bits());
        words = (sets.size() + 63) / 64;
        disjoint.assign(sets.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j)
                if (i != j && (sets[i] & sets[j]) == 0) disjoint[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }

    // indices j such that some maximum set containing `a` is disjoint from sets[j]
    std::vector<std::uint64_t> partners_of_supersets(std::uint64_t a) const {
        std::vector<std::uint64_t> row(words, 0);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if ((a & ~sets[i]) != 0) continue;
            for (std::size_t w = 0; w < words; ++w) row[w] |= disjoint[i][w];
        }
        return row;
    }

    bool any_superset(const std::vector<std::uint64_t>& row, std::uint64_t b) const {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                if ((b & ~sets[j]) == 0) return true;
                bits &= bits - 1;
            }
        }
        return false;
    }
};

}  // namespace

bool w2_pair_extendable(const Graph& g, VertexSet a, VertexSet b) {
    if (a.intersects(b)) throw std::domain_error("sets are not disjoint");
    if (!is_independent(g, a) || !is_independent(g, b))
        throw std::domain_error("sets are not independent");
    MaximumSetIndex index(g);
    return index.any_superset(index.partners_of_supersets(a.bits()), b.bits());
}

W2Verdict is_w2(const Graph& g, bool force) {
    if (g.order() < 2) return W2Verdict{Ternary::NotApplicable, std::nullopt, "fewer than two vertices"};
    if (g.order() > 16 && !force)
        throw CapacityError("W2 check on " + std::to_string(g.order()) +
                            " vertices needs force (guarded above 16)");

    MaximumSetIndex index(g);
    // For each independent A (ascending value), every independent B disjoint
    // from A must have disjoint maximum extensions. B's failures are
    // inherited by the maximal independent supersets of B inside G - A, so
    // scanning those maximal sets decides every pair with this A.
    W2Verdict verdict{Ternary::True, std::nullopt, ""};
    for_each_independent_set(g, [&](VertexSet a) {
        if (verdict.status != Ternary::True) return;
        auto row = index.partners_of_supersets(a.bits());
        for (VertexSet b : maximal_independent_sets_in(g, g.vertices() - a)) {
            if (!index.any_superset(row, b.bits())) {
                verdict = W2Verdict{Ternary::False, std::make_pair(a, b), ""};
                return;
            }
        }
    });
    return verdict;
}

EulerianVerdict has_eulerian_independence_complex(const Graph& g) {
    auto wc = is_well_covered(g);
    if (!wc.well_covered) return EulerianVerdict{false, wc.short_maximal_set, std::nullopt};

    EulerianVerdict verdict{true, std::nullopt, std::nullopt};
    std::set<std::uint64_t> seen_survivors;
    for_each_independent_set(g, [&](VertexSet f) {
        if (!verdict.eulerian) return;
        VertexSet survivors = g.vertices() - closed_neighborhood(g, f);
        if (!seen_survivors.insert(survivors.bits()).second) return;
        IntPoly p = independence_polynomial(induced_subgraph(g, survivors).graph);
        BigInt expected = (p.degree() % 2 == 0) ? 1 : -1;  // degree is alpha(G_F)
        if (p.eval_int(-1) != expected) verdict = EulerianVerdict{false, std::nullopt, f};
    });
    return verdict;
}

CharneyDavisVerdict charney_davis_check(const Graph& g) {
    CharneyDavisVerdict out;
    out.alpha = independence_number(g);
    out.value_at_minus_half = independence_polynomial(g).eval(Rational(-1, 2));
    if (out.alpha % 2 != 0) {
        out.status = CdStatus::NotApplicable;
        out.reason = "alpha odd";
        return out;
    }
    if (has_isolated_vertex(g)) {
        out.status = CdStatus::NotApplicable;
        out.reason = "isolated vertex";
        return out;
    }
    Rational sign = (out.alpha / 2) % 2 == 0 ? 1 : -1;
    out.signed_value = sign * out.value_at_minus_half;
    if (*out.signed_value == 0)
        out.status = CdStatus::HoldsZero;
    else if (*out.signed_value > 0)
        out.status = CdStatus::HoldsPositive;
    else
        out.status = CdStatus::Fails;
    return out;
}

DehnSommervilleVerdict dehn_sommerville_zero(const Graph& g) {
    DehnSommervilleVerdict out;
    out.value_at_minus_half = independence_polynomial(g).eval(Rational(-1, 2));
    if (!has_eulerian_independence_complex(g).eulerian) {
        out.reason = "independence complex is not Eulerian";
        return out;
    }
    if (independence_number(g) % 2 == 0) {
        out.reason = "alpha even";
        return out;
    }
    out.status = out.value_at_minus_half == 0 ? Ternary::True : Ternary::False;
    return out;
}

PalindromeVerdict h_vector_palindrome(const Graph& g) {
    PalindromeVerdict out;
    if (!has_eulerian_independence_complex(g).eulerian) {
        out.reason = "independence complex is not Eulerian";
        return out;
    }
    IntPoly p = independence_polynomial(g);
    int alpha = p.degree();
    IntPoly h = h_polynomial(p, alpha);
    out.h.assign(static_cast<std::size_t>(alpha) + 1, 0);
    for (int i = 0; i <= h.degree(); ++i) out.h[static_cast<std::size_t>(i)] = h.coeff(i);
    out.status = Ternary::True;
    for (int i = 0; i <= alpha; ++i)
        if (out.h[static_cast<std::size_t>(i)] != out.h[static_cast<std::size_t>(alpha - i)]) {
            out.status = Ternary::False;
            break;
        }
    return out;
}

}  // namespace trung
