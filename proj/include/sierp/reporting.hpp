#pragma once
// Machine-readable output formats.  The schemas here are a stable contract
// of the command-line surface; tests parse them back.

#include <string>

#include "json.hpp"
#include "sierp/boundary.hpp"
#include "sierp/metrics.hpp"
#include "sierp/verifier.hpp"

namespace sierp {

using json = nlohmann::json;

inline std::string profile_csv(const ProfileTable& t) {
    std::string out = "ell,theta\n";
    for (size_t ell = 0; ell < t.values.size(); ++ell) {
        out += std::to_string(ell);
        out += ',';
        out += std::to_string(t.values[ell]);
        out += '\n';
    }
    return out;
}

inline json profile_json(const ProfileTable& t) {
    return json{{"n", t.params.n}, {"m", t.params.m}, {"values", t.values}};
}

inline json subadd_report_json(const SubaddReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"la", v.ell_a}, {"lb", v.ell_b}, {"sigma_gap", v.gap}});
    json cases = json::object();
    for (int i = 0; i < 16; ++i)
        cases[CaseId{static_cast<std::uint8_t>(i)}.label()] = r.case_counts[i];
    return json{{"n", r.n},
                {"m", r.m},
                {"pairs", r.pairs_checked},
                {"violations", violations},
                {"cases", cases},
                {"min_slack", r.min_slack}};
}

inline json optimality_report_json(const OptimalityReport& r) {
    json mism = json::array();
    for (const auto& x : r.mismatches)
        mism.push_back({{"ell", x.ell}, {"brute", x.brute}, {"lex", x.lex}});
    return json{{"n", r.n},
                {"m", r.m},
                {"sampled", r.sampled},
                {"ells_checked", r.ells_checked.size()},
                {"mismatches", mism},
                {"pass", r.pass()}};
}

inline json lemma_report_json(const LemmaReport& r) {
    return json{{"n", r.n},
                {"m", r.m},
                {"pairs", r.pairs_checked},
                {"k_additivity_failures", r.k_additivity_failures},
                {"q_additivity_failures", r.q_additivity_failures},
                {"duality_failures", r.duality_failures},
                {"sandwich_failures", r.sandwich_failures},
                {"agreement_failures", r.agreement_failures},
                {"pass", r.pass()}};
}

inline json metrics_json(const Metrics& me) {
    return json{{"bisection_width", me.bisection_width},
                {"bw_formula_agrees", me.bw_formula_agrees},
                {"max_profile", me.max_profile},
                {"max_formula_agrees", me.max_formula_agrees},
                {"cheeger", {{"num", me.cheeger.num}, {"den", me.cheeger.den}}},
                {"cheeger_formula_agrees", me.cheeger_formula_agrees},
                {"cheeger_argmin", me.cheeger_argmin}};
}

}  // namespace sierp
