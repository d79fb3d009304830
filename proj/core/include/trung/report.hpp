#ifndef TRUNG_REPORT_HPP
#define TRUNG_REPORT_HPP

#include <optional>
#include <string>

#include "trung/checks.hpp"
#include "trung/homology.hpp"

namespace trung {

struct CheckSelection {
    bool well_covered = false;
    bool w2 = false;
    bool eulerian = false;
    bool cm = false;
    bool gorenstein = false;
    bool charney_davis = false;

    static CheckSelection all() { return {true, true, true, true, true, true}; }
    bool any() const { return well_covered || w2 || eulerian || cm || gorenstein || charney_davis; }
};

struct CheckReport {
    int n = 0;
    int alpha = 0;
    std::optional<WellCoveredVerdict> well_covered;
    std::optional<W2Verdict> w2;
    std::optional<EulerianVerdict> eulerian;
    std::optional<CmVerdict> cm;
    std::optional<GorensteinVerdict> gorenstein;
    std::optional<CharneyDavisVerdict> charney_davis;
};

CheckReport run_checks(const Graph& g, const CheckSelection& selection, bool force = false);

std::string report_to_text(const CheckReport& report);

// Exact values serialize as strings: integers in decimal, rationals as
// "num/den", vertex sets as arrays of indices.
std::string report_to_json(const CheckReport& report);

}  // namespace trung

#endif  // TRUNG_REPORT_HPP
