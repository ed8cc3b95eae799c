#pragma once

// Suite registry and the frozen known-suspect list. A suite passes when every
// entry's verdict agrees with its expectation: match by default, mismatch for
// the relations the audit placed on the suspect list (those are catalog
// defects the recomputation corrects; several notes below carry the corrected
// forms). An unexpected match on a suspect-listed entry fails the suite too,
// so drift in either direction is caught.

#include "glpq/rmatrix.hpp"

#include <functional>

namespace glpq {

struct Suspect {
    const char* entry_id;
    const char* why;
};

// Frozen after the audit. Every entry here mismatches by exact recomputation
// from the axiom tables; everything not listed must match.
inline const std::vector<Suspect>& known_suspects() {
    static const std::vector<Suspect> list = {
        {"(33).10", "corrected: dLg*B = B*dLg + (p*q - 1)*D*dLd (printed sign flipped)"},
        {"(34).5", "corrected: u1*dLa = p*dLa*u1 + (p - q^-1)*(dLb*th1 - dLb*th2) "
                   "(printed leading coefficient q^-1)"},
        {"(51).8", "corrected: D*dRg = q*dRg*D + (q - p^-1)*dRa*C (printed (p - p^-1))"},
        {"(52).2", "corrected: w1*dRg = dRg*w1 + (p^-1 - q)*dRa*v2"},
        {"(52).3", "corrected: w1*dRb = dRb*w1"},
        {"(52).4", "corrected: w1*dRd = -dRd*w1 + (p^-1 - q)*dRb*v2"},
        {"(52).5", "corrected: v1*dRa = p*dRa*v1"},
        {"(52).6", "corrected: v1*dRb = p*dRb*v1"},
        {"(52).7", "corrected: v1*dRg = p*dRg*v1 + (p*q - 1)*dRa*(w1 - w2)"},
        {"(52).8", "corrected: v1*dRd = p*dRd*v1 - (p*q - 1)*dRb*(w1 - w2)"},
        {"(52).9", "corrected: v2*dRa = p^-1*dRa*v2"},
        {"(52).10", "corrected: v2*dRg = p^-1*dRg*v2"},
        {"(52).11", "corrected: v2*dRb = p^-1*dRb*v2"},
        {"(52).12", "corrected: v2*dRd = p^-1*dRd*v2"},
        {"(52).14", "corrected: w2*dRb = dRb*w2"},
        {"(52).15", "corrected: w2*dRg = dRg*w2 + (p^-1 - q)*dRa*v2"},
        {"(52).16", "corrected: w2*dRd = -dRd*w2 + (p^-1 - q)*dRb*v2"},
        {"mc.u1.(40)-vs-direct",
         "the older two-form list gives the off-diagonal entries with the opposite sign; "
         "the sigma3 form and the explicit structure matrix agree with the direct route"},
        {"mc.u2.(40)-vs-direct", "see mc.u1.(40)-vs-direct"},
        {"(42).5", "corrected: NLp*NLm + p*q*NLm*NLp = TL1 + TL2 + (p*q - 1)*TL1*(TL1 + TL2)"},
        {"(43).8", "corrected: NLp*NLm + p*q*NLm*NLp = XL + 1/2*(p*q - 1)*XL*(XL + YL)"},
        {"(63).3", "corrected: T1*g = g*T1 + (q - p^-1)*a*Np (printed sign flipped)"},
        {"(27).1", "printed coinverse table is computed in the opposite-crossing Leibniz "
                   "convention; the recomputed table (from the defining property) is the one "
                   "that fixes the relation ideals"},
        {"(27).2", "as (27).1, with an additional defect: the printed line repeats the "
                   "trailing factor pattern of line 1"},
        {"(27).3", "see (27).1"},
        {"(27).4", "printed line agrees exactly with the opposite-crossing Leibniz variant"},
        // the partial-derivative co-structure does not fix the derivative
        // exchange relations; the scan finds every witness
        {"inv.Delta.(79).1", "non-invariance witness"},
        {"inv.Delta.(79).2", "non-invariance witness"},
        {"inv.Delta.(79).3", "non-invariance witness"},
        {"inv.Delta.(79).4", "non-invariance witness"},
        {"inv.Delta.(79).5", "non-invariance witness"},
        {"inv.Delta.(79).6", "non-invariance witness"},
        {"inv.Delta.(79).7", "non-invariance witness"},
        {"inv.Delta.(79).8", "non-invariance witness"},
        {"inv.Delta.(79).9", "non-invariance witness"},
        {"inv.Delta.(79).10", "non-invariance witness"},
        {"inv.Delta.(79).11", "non-invariance witness"},
        {"inv.Delta.(79).12", "non-invariance witness"},
        {"inv.Delta.(79).13", "non-invariance witness"},
        {"inv.Delta.(79).14", "non-invariance witness"},
        {"inv.Delta.(79).15", "non-invariance witness"},
        {"inv.Delta.(79).16", "non-invariance witness"},
        {"inv.eps.(79).1", "counit witness: the evaluated relation has eps != 0"},
        {"inv.eps.(79).7", "counit witness"},
        {"inv.eps.(79).11", "counit witness"},
        {"inv.eps.(79).16", "counit witness"},
        {"inv.Delta.(80).1", "the derivative coproduct does not respect this relation"},
        {"inv.Delta.(80).2", "the derivative coproduct does not respect this relation"},
        {"inv.Delta.(80).3", "the derivative coproduct does not respect this relation"},
        {"inv.Delta.(80).4", "the derivative coproduct does not respect this relation"},
        {"inv.Delta.(80).8", "the derivative coproduct does not respect this relation"},
    };
    return list;
}

inline const Suspect* find_suspect(const std::string& entry_id) {
    for (const auto& s : known_suspects())
        if (entry_id == s.entry_id) return &s;
    return nullptr;
}

// Corrected forms recovered by the audit, as testable relations (the
// corrected statements must recompute with zero residual).
inline const std::vector<Relation>& corrected_relations() {
    static const std::vector<Relation> t = {
        {"fix(33).10", "dLg*B", "B*dLg + (p*q - 1)*D*dLd"},
        {"fix(34).5", "u1*dLa", "p*dLa*u1 + (p - q^-1)*dLb*th1 - (p - q^-1)*dLb*th2"},
        {"fix(51).8", "D*dRg", "q*dRg*D + (q - p^-1)*dRa*C"},
        {"fix(52).2", "w1*dRg", "dRg*w1 + (p^-1 - q)*dRa*v2"},
        {"fix(52).3", "w1*dRb", "dRb*w1"},
        {"fix(52).4", "w1*dRd", "-dRd*w1 + (p^-1 - q)*dRb*v2"},
        {"fix(52).5", "v1*dRa", "p*dRa*v1"},
        {"fix(52).6", "v1*dRb", "p*dRb*v1"},
        {"fix(52).7", "v1*dRg", "p*dRg*v1 + (p*q - 1)*dRa*w1 - (p*q - 1)*dRa*w2"},
        {"fix(52).8", "v1*dRd", "p*dRd*v1 - (p*q - 1)*dRb*w1 + (p*q - 1)*dRb*w2"},
        {"fix(52).9", "v2*dRa", "p^-1*dRa*v2"},
        {"fix(52).10", "v2*dRg", "p^-1*dRg*v2"},
        {"fix(52).11", "v2*dRb", "p^-1*dRb*v2"},
        {"fix(52).12", "v2*dRd", "p^-1*dRd*v2"},
        {"fix(52).14", "w2*dRb", "dRb*w2"},
        {"fix(52).15", "w2*dRg", "dRg*w2 + (p^-1 - q)*dRa*v2"},
        {"fix(52).16", "w2*dRd", "-dRd*w2 + (p^-1 - q)*dRb*v2"},
        {"fix(42).5", "NLp*NLm + p*q*NLm*NLp", "TL1 + TL2 + (p*q - 1)*TL1*(TL1 + TL2)"},
        {"fix(43).8", "NLp*NLm + p*q*NLm*NLp", "XL + 1/2*(p*q - 1)*XL*(XL + YL)"},
        {"fix(63).3", "T1*g", "g*T1 + (q - p^-1)*a*Np"},
    };
    return t;
}

// ---------------------------------------------------------------------------

inline Report confluence_report_summary(const RuleSet& rs, int max_len = 4) {
    ConfluenceReport cr = critical_pairs(rs, max_len);
    Report rep;
    rep.suite = "rewrite.confluence/" + cr.rule_set;
    std::size_t nonzero = 0;
    for (const auto& o : cr.entries) {
        if (o.residual.is_zero()) continue;
        ++nonzero;
        rep.entries.push_back({"overlap." + word_string(o.word) + "[" + o.rule1 + "|" + o.rule2 +
                                   "]",
                               "0", o.residual.to_string(), o.residual.to_string(), false});
    }
    rep.entries.push_back({"summary." + cr.rule_set,
                           "all overlaps to length " + std::to_string(max_len) + " resolve",
                           std::to_string(cr.overlaps) + " overlaps, " +
                               std::to_string(nonzero) + " nonzero",
                           nonzero == 0 ? "0" : "nonzero residuals", nonzero == 0});
    return rep;
}

inline std::vector<Report> run_suite(const std::string& id) {
    if (id == "rewrite.confluence") {
        return {confluence_report_summary(rs_a()),
                confluence_report_summary(rs_left_axioms()),
                confluence_report_summary(rs_right_axioms()),
                confluence_report_summary(rs_a().merged(rs_rderiv(), "RS_A+RS_RDERIV")),
                confluence_report_summary(rs_a().merged(rs_lderiv(), "RS_A+RS_LDERIV")),
                confluence_report_summary(rs_lext()),
                confluence_report_summary(rs_rext()),
                confluence_report_summary(rs_plane_full())};
    }
    if (id == "calculus.tables") {
        std::vector<Report> out;
        out.push_back(tt_inverse_check());
        for (const char* t : {"(31)", "(32)", "(33)", "(34)", "(35)", "(50)", "(51)", "(52)",
                              "(53)"})
            out.push_back(verify_table(t));
        out.push_back(oneform_roundtrip_check());
        return out;
    }
    if (id == "calculus.stability") return {ideal_stability_check()};
    if (id == "calculus.mc")
        return {maurer_cartan_check(Side::left), maurer_cartan_check(Side::right)};
    if (id == "calculus.lie")
        return {lie_algebra_check(Side::left), lie_algebra_check(Side::right),
                module_relation_check(Side::left), module_relation_check(Side::right)};
    if (id == "calculus.derivative") return {derivative_table_check()};
    if (id == "hopf.base") return {hopf_axiom_check()};
    if (id == "hopf.extended") return {extended_costructure_check()};
    if (id == "hopf.partial") return {derivative_costructure_check()};
    if (id == "rmatrix.hecke") return {hecke_and_braid_check()};
    if (id == "rmatrix.plane") return {superplane_checks()};
    if (id == "rmatrix.rtt") return {rtt_check()};
    if (id == "rmatrix.calculus") return {calculus_from_r_check()};
    throw std::invalid_argument("unknown suite id: " + id);
}

inline const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {
        "rewrite.confluence", "calculus.tables", "calculus.stability", "calculus.mc",
        "calculus.lie",       "calculus.derivative", "hopf.base",      "hopf.extended",
        "hopf.partial",       "rmatrix.hecke",   "rmatrix.plane",      "rmatrix.rtt",
        "rmatrix.calculus"};
    return ids;
}

struct SuiteOutcome {
    std::string id;
    std::vector<Report> reports;
    std::size_t entries = 0;
    std::size_t mismatches = 0;
    std::size_t expected_mismatches = 0;
    std::size_t unexpected_mismatches = 0;
    std::size_t unexpected_matches = 0;  // suspect-listed entries that now match
    bool pass = false;
};

inline SuiteOutcome evaluate_suite(const std::string& id) {
    SuiteOutcome out;
    out.id = id;
    out.reports = run_suite(id);
    for (const auto& rep : out.reports)
        for (const auto& e : rep.entries) {
            ++out.entries;
            const Suspect* s = find_suspect(e.id);
            if (e.match) {
                if (s) ++out.unexpected_matches;
            } else {
                ++out.mismatches;
                if (s)
                    ++out.expected_mismatches;
                else
                    ++out.unexpected_mismatches;
            }
        }
    out.pass = out.unexpected_mismatches == 0 && out.unexpected_matches == 0;
    return out;
}

}  // namespace glpq
