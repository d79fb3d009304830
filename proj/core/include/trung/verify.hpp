#ifndef TRUNG_VERIFY_HPP
#define TRUNG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trung/graph.hpp"
#include "trung/poly.hpp"

namespace trung {

struct SuiteOptions {
    int n_max = 8;
    int trials = 200;
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    // counterexample descriptions, each carrying the graph as an edge list
    std::vector<std::string> failures;
};

// I(G,x) by direct subset counting; a reference route kept deliberately
// independent of the deletion-recurrence implementation.
IntPoly reference_independence_polynomial(const Graph& g);

// Enumeration vs. subset counting, and enumeration on Tr(H,v) vs. the
// (2x+1)I(H) + (x+x^2)I(H_v) recurrence.
SuiteResult run_recurrence_suite(const SuiteOptions& options);

// alpha increment, well-covered / W2 / Gorenstein equivalences across the
// construction, the assembled maximal-set family, and H = G_b.
SuiteResult run_preservation_suite(const SuiteOptions& options);

// Degree-2 chains from C5: girth 4, Gorenstein, W2, and the sign conditions
// at x = -1/2.
SuiteResult run_charney_davis_suite(const SuiteOptions& options);

}  // namespace trung

#endif  // TRUNG_VERIFY_HPP
