#include "trung/report.hpp"

#include <json.hpp>

namespace trung {

CheckReport run_checks(const Graph& g, const CheckSelection& selection, bool force) {
    CheckReport report;
    report.n = g.order();
    report.alpha = independence_number(g);
    if (selection.well_covered) report.well_covered = is_well_covered(g);
    if (selection.w2) report.w2 = is_w2(g, force);
    if (selection.eulerian) report.eulerian = has_eulerian_independence_complex(g);
    if (selection.cm) report.cm = is_cm_over_q(g);
    if (selection.gorenstein) report.gorenstein = is_gorenstein_over_q(g);
    if (selection.charney_davis) report.charney_davis = charney_davis_check(g);
    return report;
}

namespace {

const char* ternary_name(Ternary t) {
    switch (t) {
        case Ternary::True: return "true";
        case Ternary::False: return "false";
        default: return "not_applicable";
    }
}

const char* cd_name(CdStatus s) {
    switch (s) {
        case CdStatus::HoldsZero: return "holds_zero";
        case CdStatus::HoldsPositive: return "holds_positive";
        case CdStatus::Fails: return "fails";
        default: return "not_applicable";
    }
}

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

nlohmann::json set_json(VertexSet s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

}  // namespace

std::string report_to_text(const CheckReport& r) {
    std::string out;
    out += "n = " + std::to_string(r.n) + "\n";
    out += "alpha = " + std::to_string(r.alpha) + "\n";
    if (r.well_covered) {
        out += std::string("well-covered: ") + (r.well_covered->well_covered ? "true" : "false");
        if (r.well_covered->short_maximal_set)
            out += "  witness: maximal set " + set_text(*r.well_covered->short_maximal_set) +
                   " smaller than alpha";
        out += "\n";
    }
    if (r.w2) {
        out += std::string("W2: ") + ternary_name(r.w2->status);
        if (r.w2->failing_pair)
            out += "  witness: pair " + set_text(r.w2->failing_pair->first) + ", " +
                   set_text(r.w2->failing_pair->second) + " has no disjoint maximum extensions";
        if (!r.w2->reason.empty()) out += "  (" + r.w2->reason + ")";
        out += "\n";
    }
    if (r.eulerian) {
        out += std::string("Eulerian independence complex: ") +
               (r.eulerian->eulerian ? "true" : "false");
        if (r.eulerian->short_maximal_set)
            out += "  witness: not well-covered at " + set_text(*r.eulerian->short_maximal_set);
        if (r.eulerian->failing_f)
            out += "  witness: Euler identity fails at F = " + set_text(*r.eulerian->failing_f);
        out += "\n";
    }
    if (r.cm) {
        out += std::string("Cohen-Macaulay over Q: ") + (r.cm->cohen_macaulay ? "true" : "false");
        if (r.cm->failing_f)
            out += "  witness: link of " + set_text(*r.cm->failing_f) + " has homology in dim " +
                   std::to_string(r.cm->failing_dim);
        out += "\n";
    }
    if (r.gorenstein) {
        out += std::string("Gorenstein over Q: ") + ternary_name(r.gorenstein->status);
        if (!r.gorenstein->reason.empty()) out += "  (" + r.gorenstein->reason + ")";
        out += "\n";
    }
    if (r.charney_davis) {
        const auto& cd = *r.charney_davis;
        out += std::string("Charney-Davis: ") + cd_name(cd.status);
        if (!cd.reason.empty()) out += "  (" + cd.reason + ")";
        out += "  I(G,-1/2) = " + rational_pretty(cd.value_at_minus_half);
        if (cd.signed_value)
            out += "  signed value = " + rational_pretty(*cd.signed_value);
        out += "\n";
    }
    return out;
}

std::string report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    if (r.well_covered) {
        nlohmann::json v;
        v["verdict"] = r.well_covered->well_covered;
        if (r.well_covered->short_maximal_set)
            v["witness"] = set_json(*r.well_covered->short_maximal_set);
        j["well_covered"] = v;
    }
    if (r.w2) {
        nlohmann::json v;
        v["verdict"] = ternary_name(r.w2->status);
        if (r.w2->failing_pair) {
            v["witness"] = {{"a", set_json(r.w2->failing_pair->first)},
                            {"b", set_json(r.w2->failing_pair->second)}};
        }
        if (!r.w2->reason.empty()) v["reason"] = r.w2->reason;
        j["w2"] = v;
    }
    if (r.eulerian) {
        nlohmann::json v;
        v["verdict"] = r.eulerian->eulerian;
        if (r.eulerian->short_maximal_set)
            v["witness_short_maximal_set"] = set_json(*r.eulerian->short_maximal_set);
        if (r.eulerian->failing_f) v["witness_f"] = set_json(*r.eulerian->failing_f);
        j["eulerian"] = v;
    }
    if (r.cm) {
        nlohmann::json v;
        v["verdict"] = r.cm->cohen_macaulay;
        if (r.cm->failing_f) {
            v["witness_f"] = set_json(*r.cm->failing_f);
            v["witness_dim"] = r.cm->failing_dim;
        }
        j["cm_over_q"] = v;
    }
    if (r.gorenstein) {
        nlohmann::json v;
        v["verdict"] = ternary_name(r.gorenstein->status);
        if (!r.gorenstein->reason.empty()) v["reason"] = r.gorenstein->reason;
        j["gorenstein_over_q"] = v;
    }
    if (r.charney_davis) {
        const auto& cd = *r.charney_davis;
        nlohmann::json v;
        v["status"] = cd_name(cd.status);
        if (!cd.reason.empty()) v["reason"] = cd.reason;
        v["alpha"] = cd.alpha;
        v["value_at_minus_half"] = rational_fraction(cd.value_at_minus_half);
        if (cd.signed_value) v["signed_value"] = rational_fraction(*cd.signed_value);
        j["charney_davis"] = v;
    }
    return j.dump(2);
}

}  // namespace trung
