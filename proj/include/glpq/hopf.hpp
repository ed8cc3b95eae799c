#pragma once

// Co-structures on the matrix algebra and their extension to the left
// differential algebra: coproduct, counit, antipode, the phi_R/phi_L maps,
// the extended coproducts Delta_R/Delta_L, the extended counit and coinverse,
// and the partial-derivative co-structure with its non-invariance scan.

#include "glpq/checks.hpp"

namespace glpq {

// ---------------------------------------------------------------------------
// Generator tables

inline const std::map<Gen, TensorElement>& coproduct_table() {
    static const std::map<Gen, TensorElement> t = [] {
        auto g = [](Gen x) { return Word{x}; };
        std::map<Gen, TensorElement> m;
        TensorElement da;  // Delta(T^i_j) = T^i_k ox T^k_j
        da.add(g(Gen::a), g(Gen::a), Scalar(1));
        da.add(g(Gen::b), g(Gen::g), Scalar(1));
        m[Gen::a] = da;
        TensorElement db;
        db.add(g(Gen::a), g(Gen::b), Scalar(1));
        db.add(g(Gen::b), g(Gen::d), Scalar(1));
        m[Gen::b] = db;
        TensorElement dg;
        dg.add(g(Gen::g), g(Gen::a), Scalar(1));
        dg.add(g(Gen::d), g(Gen::g), Scalar(1));
        m[Gen::g] = dg;
        TensorElement dd;
        dd.add(g(Gen::g), g(Gen::b), Scalar(1));
        dd.add(g(Gen::d), g(Gen::d), Scalar(1));
        m[Gen::d] = dd;
        // partial-derivative co-structure
        TensorElement pa;
        pa.add(g(Gen::pa), g(Gen::pa), Scalar(1));
        pa.add(g(Gen::pb), g(Gen::pg), Scalar(1));
        m[Gen::pa] = pa;
        TensorElement pb;
        pb.add(g(Gen::pa), g(Gen::pb), Scalar(1));
        pb.add(g(Gen::pb), g(Gen::pd), Scalar(1));
        m[Gen::pb] = pb;
        TensorElement pd;
        pd.add(g(Gen::pd), g(Gen::pd), Scalar(1));
        pd.add(g(Gen::pg), g(Gen::pb), Scalar(1));
        m[Gen::pd] = pd;
        TensorElement pg;
        pg.add(g(Gen::pg), g(Gen::pa), Scalar(1));
        pg.add(g(Gen::pd), g(Gen::pg), Scalar(1));
        m[Gen::pg] = pg;
        return m;
    }();
    return t;
}

inline Scalar counit_letter(Gen x) {
    switch (x) {
        case Gen::a: case Gen::d: case Gen::pa: case Gen::pd: return Scalar(1);
        case Gen::b: case Gen::g: case Gen::pb: case Gen::pg: return Scalar(0);
        case Gen::dLa: case Gen::dLb: case Gen::dLg: case Gen::dLd: return Scalar(0);
        default:
            throw UnsupportedGenerator("counit undefined on " + std::string(name(x)));
    }
}

// phi_R = (delta_L ox id) o Delta and phi_L = (tau ox delta_L) o Delta,
// evaluated on the differential generators.
inline TensorElement phi_r(Gen dx);
inline TensorElement phi_l(Gen dx);

namespace detail {

inline Gen base_of_differential(Gen dx) {
    switch (dx) {
        case Gen::dLa: return Gen::a;
        case Gen::dLb: return Gen::b;
        case Gen::dLg: return Gen::g;
        case Gen::dLd: return Gen::d;
        default: throw UnsupportedGenerator("not a left differential");
    }
}

}  // namespace detail

inline TensorElement phi_r(Gen dx) {
    TensorElement out;
    for (const auto& [k, c] : coproduct_table().at(detail::base_of_differential(dx)).terms()) {
        Element dleft = apply_delta(Element(k.first), Side::left);
        for (const auto& [w, cc] : dleft.terms()) out.add(w, k.second, c * cc);
    }
    return out;
}

inline TensorElement phi_l(Gen dx) {
    TensorElement out;
    for (const auto& [k, c] : coproduct_table().at(detail::base_of_differential(dx)).terms()) {
        Scalar sign = grade(k.first) ? -c : c;  // tau on the left leg
        Element dright = apply_delta(Element(k.second), Side::left);
        for (const auto& [w, cc] : dright.terms()) out.add(k.first, w, sign * cc);
    }
    return out;
}

// The coproduct extensions actually used on the differential algebra. The
// exterior differential acts from the right, so splitting Delta_hat(delta u)
// by the graded Leibniz rule puts the Koszul crossing sign on the slot the
// differential passes over:
//     phi_R~ = (delta ox tau) o Delta,   phi_L~ = (id ox delta) o Delta.
// The printed tables place the parity flip on the other slot; under that
// placement no graded product makes the extension well defined on the
// relation ideal (the odd-odd crossing sign would have to be +1 and -1 at
// once), so the calibrated pair below is the operative one. The discrepancy
// is recorded with the suite output.
inline TensorElement phi_r_coherent(Gen dx) {
    TensorElement out;
    for (const auto& [k, c] : coproduct_table().at(detail::base_of_differential(dx)).terms()) {
        Scalar sign = grade(k.second) ? -c : c;  // tau on the right leg
        Element dleft = apply_delta(Element(k.first), Side::left);
        for (const auto& [w, cc] : dleft.terms()) out.add(w, k.second, sign * cc);
    }
    return out;
}

inline TensorElement phi_l_coherent(Gen dx) {
    TensorElement out;
    for (const auto& [k, c] : coproduct_table().at(detail::base_of_differential(dx)).terms()) {
        Element dright = apply_delta(Element(k.second), Side::left);
        for (const auto& [w, cc] : dright.terms()) out.add(k.first, w, c * cc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multiplicative / anti-multiplicative extensions

// Coproduct-style algebra map: each letter is sent to a tensor, letters are
// multiplied out with the Koszul rule. `letter` must cover every generator of
// the argument.
inline TensorElement tensor_algebra_map(const Element& e,
                                        const std::function<TensorElement(Gen)>& letter,
                                        SignRule sr = SignRule::koszul) {
    TensorElement out;
    for (const auto& [w, c] : e.terms()) {
        TensorElement acc(Word{}, Word{}, Scalar(1));
        for (Gen g : w) acc = tensor_mul(acc, letter(g), sr);
        out += c * acc;
    }
    return out;
}

inline TensorElement coproduct(const Element& e, SignRule sr = SignRule::koszul) {
    return tensor_algebra_map(
        e, [](Gen g) { return coproduct_table().at(g); }, sr);
}

// Delta_R: functions go through Delta, differentials through phi_R~.
inline TensorElement delta_r_map(const Element& e) {
    return tensor_algebra_map(e, [](Gen g) {
        if (info(g).family == Family::leftDifferential) return phi_r_coherent(g);
        return coproduct_table().at(g);
    });
}
// Delta_L: functions through Delta, differentials through phi_L~.
inline TensorElement delta_l_map(const Element& e) {
    return tensor_algebra_map(e, [](Gen g) {
        if (info(g).family == Family::leftDifferential) return phi_l_coherent(g);
        return coproduct_table().at(g);
    });
}

inline Scalar counit(const Element& e) {
    Scalar out;
    for (const auto& [w, c] : e.terms()) {
        Scalar prod = c;
        for (Gen g : w) prod = prod * counit_letter(g);
        out += prod;
    }
    return out;
}

// Graded anti-multiplicative extension of a letter map:
// S(g1...gn) = (-1)^{sum_{i<j} grade(gi) grade(gj)} S(gn)...S(g1).
inline Element antipode_extend(const Element& e, const std::map<Gen, Element>& letter) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        int sign = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) sign += grade(w[i]) * grade(w[j]);
        Element acc = Element::unit();
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = mul(acc, letter.at(*it));
        out += ((sign & 1) ? -c : c) * acc;
    }
    return out;
}

inline Element antipode(const Element& e) { return antipode_extend(e, antipode_table()); }

// Recomputed coinverse on the differentials, from the defining property
// Shat(delta_L x) = delta_L(S(x)). This is the ground truth; the printed
// table is a cross-check target.
inline const std::map<Gen, Element>& shat_recomputed() {
    static const std::map<Gen, Element> t = [] {
        std::map<Gen, Element> m;
        for (Gen dx : {Gen::dLa, Gen::dLb, Gen::dLg, Gen::dLd}) {
            Gen x = detail::base_of_differential(dx);
            m[dx] = normalize(apply_delta(antipode_table().at(x), Side::left), rs_lext());
        }
        return m;
    }();
    return t;
}

// Letter map for Shat on the differential algebra: S on functions, the
// recomputed table on differentials.
inline const std::map<Gen, Element>& shat_letter_table() {
    static const std::map<Gen, Element> t = [] {
        std::map<Gen, Element> m = antipode_table();
        for (const auto& [k, v] : shat_recomputed()) m[k] = v;
        return m;
    }();
    return t;
}

// ---------------------------------------------------------------------------
// Three-fold tensors, for the coassociativity-style identities

struct Tensor3 {
    std::map<std::array<Word, 3>, Scalar> terms;

    void add(const std::array<Word, 3>& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    Tensor3& operator-=(const Tensor3& o) {
        for (const auto& [k, c] : o.terms) add(k, -c);
        return *this;
    }
    bool is_zero() const { return terms.empty(); }
    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms) {
            if (!first) out += " + ";
            first = false;
            out += "(" + c.to_string() + ")*" + word_string(k[0]) + " (x) " +
                   word_string(k[1]) + " (x) " + word_string(k[2]);
        }
        return out;
    }
};

// Expands leg `slot` of a two-fold tensor through `f`, producing a three-fold
// tensor. Nothing crosses anything, so no signs appear.
inline Tensor3 expand_leg(const TensorElement& t, int slot,
                          const std::function<TensorElement(const Element&)>& f) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
        TensorElement inner = f(Element(slot == 0 ? k.first : k.second));
        for (const auto& [ik, ic] : inner.terms()) {
            if (slot == 0)
                out.add({ik.first, ik.second, k.second}, c * ic);
            else
                out.add({k.first, ik.first, ik.second}, c * ic);
        }
    }
    return out;
}

// Per-leg normalization with the given rule sets.
inline TensorElement tensor_normalize(const TensorElement& t, const RuleSet& rs_left,
                                      const RuleSet& rs_right) {
    TensorElement out;
    for (const auto& [k, c] : t.terms()) {
        Element nl = normalize(Element(k.first), rs_left);
        Element nr = normalize(Element(k.second), rs_right);
        for (const auto& [wl, cl] : nl.terms())
            for (const auto& [wr, cr] : nr.terms()) out.add(wl, wr, c * cl * cr);
    }
    return out;
}

inline Tensor3 tensor3_normalize(const Tensor3& t, const RuleSet& r1, const RuleSet& r2,
                                 const RuleSet& r3) {
    Tensor3 out;
    for (const auto& [k, c] : t.terms) {
        Element n1 = normalize(Element(k[0]), r1);
        Element n2 = normalize(Element(k[1]), r2);
        Element n3 = normalize(Element(k[2]), r3);
        for (const auto& [w1, c1] : n1.terms())
            for (const auto& [w2, c2] : n2.terms())
                for (const auto& [w3, c3] : n3.terms()) out.add({w1, w2, w3}, c * c1 * c2 * c3);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suites

inline Report hopf_axiom_check() {
    Report rep;
    rep.suite = "hopf.base";
    const Gen gens[] = {Gen::a, Gen::b, Gen::g, Gen::d};
    auto cop = [](const Element& e) { return coproduct(e); };
    // coassociativity
    for (Gen x : gens) {
        TensorElement dx = coproduct(Element::gen(x));
        Tensor3 lhs = expand_leg(dx, 0, cop);
        Tensor3 rhs = expand_leg(dx, 1, cop);
        lhs -= rhs;
        rep.entries.push_back({"(6a)." + std::string(name(x)),
                               "(Delta ox id)Delta = (id ox Delta)Delta", "see residual",
                               lhs.to_string(), lhs.is_zero()});
    }
    // counit laws
    for (Gen x : gens) {
        TensorElement dx = coproduct(Element::gen(x));
        Element l, r;
        for (const auto& [k, c] : dx.terms()) {
            l.add(k.second, c * counit(Element(k.first)));
            r.add(k.first, c * counit(Element(k.second)));
        }
        Element residual = (l - Element::gen(x)) + (r - Element::gen(x));
        rep.entries.push_back({"(6b)." + std::string(name(x)), "both counit laws give back " +
                                   std::string(name(x)),
                               l.to_string(), residual.to_string(),
                               l == Element::gen(x) && r == Element::gen(x)});
    }
    // antipode laws
    for (Gen x : gens) {
        TensorElement dx = coproduct(Element::gen(x));
        Element l, r;
        for (const auto& [k, c] : dx.terms()) {
            l += c * mul(antipode(Element(k.first)), Element(k.second));
            r += c * mul(Element(k.first), antipode(Element(k.second)));
        }
        Element target = counit(Element::gen(x)) * Element::unit();
        Element residual = normalize(l - target, rs_lext()) + normalize(r - target, rs_lext());
        rep.entries.push_back({"(6c)." + std::string(name(x)),
                               "m(S ox id)Delta = eps = m(id ox S)Delta", "see residual",
                               residual.to_string(), residual.is_zero()});
    }
    // Delta and eps respect the defining relations
    for (const auto& r : rs_a().rules()) {
        Element rel = Element(r.lhs) - r.rhs;
        TensorElement img = tensor_normalize(coproduct(rel), rs_a(), rs_a());
        rep.entries.push_back({"hom.Delta." + r.id, "Delta(relation) = 0", "per-leg normal form",
                               img.to_string(), img.is_zero()});
        Scalar e = counit(rel);
        rep.entries.push_back({"hom.eps." + r.id, "eps(relation) = 0", e.to_string(),
                               e.to_string(), e.is_zero()});
    }
    return rep;
}

inline Report extended_costructure_check() {
    Report rep;
    rep.suite = "hopf.extended";
    const Gen diffs[] = {Gen::dLa, Gen::dLb, Gen::dLg, Gen::dLd};
    const Gen gens[] = {Gen::a, Gen::b, Gen::g, Gen::d};

    // printed phi tables
    std::map<Gen, TensorElement> phiR_printed, phiL_printed;
    {
        auto w = [](Gen x) { return Word{x}; };
        auto T = [&](Gen a1, Gen a2, int s1, Gen b1, Gen b2, int s2) {
            TensorElement t;
            t.add(w(a1), w(a2), Scalar(s1));
            t.add(w(b1), w(b2), Scalar(s2));
            return t;
        };
        phiR_printed[Gen::dLa] = T(Gen::dLa, Gen::a, 1, Gen::dLb, Gen::g, 1);
        phiR_printed[Gen::dLb] = T(Gen::dLb, Gen::d, 1, Gen::dLa, Gen::b, 1);
        phiR_printed[Gen::dLg] = T(Gen::dLg, Gen::a, 1, Gen::dLd, Gen::g, 1);
        phiR_printed[Gen::dLd] = T(Gen::dLd, Gen::d, 1, Gen::dLg, Gen::b, 1);
        phiL_printed[Gen::dLa] = T(Gen::a, Gen::dLa, 1, Gen::b, Gen::dLg, -1);
        phiL_printed[Gen::dLb] = T(Gen::a, Gen::dLb, 1, Gen::b, Gen::dLd, -1);
        phiL_printed[Gen::dLg] = T(Gen::g, Gen::dLa, -1, Gen::d, Gen::dLg, 1);
        phiL_printed[Gen::dLd] = T(Gen::d, Gen::dLd, 1, Gen::g, Gen::dLb, -1);
    }
    for (Gen dx : diffs) {
        TensorElement r = phi_r(dx) - phiR_printed.at(dx);
        rep.entries.push_back({"(14a)." + std::string(name(dx)),
                               "phi_R = (delta ox id) o Delta", "recomputed table",
                               r.to_string(), r.is_zero()});
        TensorElement l = phi_l(dx) - phiL_printed.at(dx);
        rep.entries.push_back({"(14b)." + std::string(name(dx)),
                               "phi_L = (tau ox delta) o Delta", "recomputed table",
                               l.to_string(), l.is_zero()});
    }

    auto cop = [](const Element& e) { return coproduct(e); };
    auto dR = [](const Element& e) { return delta_r_map(e); };
    auto dL = [](const Element& e) { return delta_l_map(e); };

    // (16a): (Delta_R ox id) Delta_R = (id ox Delta) Delta_R; (id ox eps) Delta_R = id
    for (Gen dx : diffs) {
        TensorElement base = delta_r_map(Element::gen(dx));
        Tensor3 lhs = expand_leg(base, 0, dR);
        lhs -= expand_leg(base, 1, cop);
        rep.entries.push_back({"(16a)." + std::string(name(dx)), "coassociativity of Delta_R",
                               "see residual", lhs.to_string(), lhs.is_zero()});
        Element back;
        for (const auto& [k, c] : base.terms()) back.add(k.first, c * counit(Element(k.second)));
        Element res = back - Element::gen(dx);
        rep.entries.push_back({"(16a')." + std::string(name(dx)), "(id ox eps)Delta_R = id",
                               back.to_string(), res.to_string(), res.is_zero()});
    }
    // (16b): (id ox Delta_L) Delta_L = (Delta ox id) Delta_L; (eps ox id) Delta_L = id
    for (Gen dx : diffs) {
        TensorElement base = delta_l_map(Element::gen(dx));
        Tensor3 lhs = expand_leg(base, 1, dL);
        lhs -= expand_leg(base, 0, cop);
        rep.entries.push_back({"(16b)." + std::string(name(dx)), "coassociativity of Delta_L",
                               "see residual", lhs.to_string(), lhs.is_zero()});
        Element back;
        for (const auto& [k, c] : base.terms()) back.add(k.second, c * counit(Element(k.first)));
        Element res = back - Element::gen(dx);
        rep.entries.push_back({"(16b')." + std::string(name(dx)), "(eps ox id)Delta_L = id",
                               back.to_string(), res.to_string(), res.is_zero()});
    }
    // (19a): (Delta_L ox id) Delta_R = (id ox Delta_R) Delta_L
    for (Gen dx : diffs) {
        Tensor3 lhs = expand_leg(delta_r_map(Element::gen(dx)), 0, dL);
        lhs -= expand_leg(delta_l_map(Element::gen(dx)), 1, dR);
        rep.entries.push_back({"(19a)." + std::string(name(dx)), "mixed coassociativity",
                               "see residual", lhs.to_string(), lhs.is_zero()});
    }
    // (19b): the defining equations, in the right-action reading of the
    // tensor Leibniz split: Delta_L(delta u) is the slot-2 piece of
    // Delta(u) hit by delta, Delta_R(delta u) the slot-1 piece with the
    // crossing sign. Checked on generators and on all products of two.
    {
        std::vector<std::pair<std::string, Element>> args;
        for (Gen u : gens) args.push_back({std::string(name(u)), Element::gen(u)});
        for (Gen u : gens)
            for (Gen v : gens)
                args.push_back({std::string(name(u)) + std::string(name(v)),
                                mul(Element::gen(u), Element::gen(v))});
        for (const auto& [label, u] : args) {
            const TensorElement du = coproduct(u);
            TensorElement lhsL;
            for (const auto& [k, c] : du.terms()) {
                const Element dright = apply_delta(Element(k.second), Side::left);
                for (const auto& [w, cc] : dright.terms()) lhsL.add(k.first, w, c * cc);
            }
            TensorElement resL =
                tensor_normalize(lhsL - delta_l_map(apply_delta(u, Side::left)), rs_a(), rs_lext());
            rep.entries.push_back({"(19b).L." + label,
                                   "(id ox delta)Delta(u) = Delta_L(delta u)", "see residual",
                                   resL.to_string(), resL.is_zero()});
            TensorElement lhsR;
            for (const auto& [k, c] : du.terms()) {
                Scalar sign = grade(k.second) ? -c : c;
                const Element dleft = apply_delta(Element(k.first), Side::left);
                for (const auto& [w, cc] : dleft.terms()) lhsR.add(w, k.second, sign * cc);
            }
            TensorElement resR =
                tensor_normalize(lhsR - delta_r_map(apply_delta(u, Side::left)), rs_lext(), rs_a());
            rep.entries.push_back({"(19b).R." + label,
                                   "(delta ox tau)Delta(u) = Delta_R(delta u)", "see residual",
                                   resR.to_string(), resR.is_zero()});
        }
    }

    // invariance of the relation ideals under Delta_R and Delta_L
    auto invariance = [&](const RuleSet& table, const char* tag,
                          const std::function<TensorElement(const Element&)>& map,
                          const RuleSet& rsl, const RuleSet& rsr) {
        for (const auto& r : table.rules()) {
            Element rel = Element(r.lhs) - r.rhs;
            TensorElement img = tensor_normalize(map(rel), rsl, rsr);
            rep.entries.push_back({std::string(tag) + "." + r.id, "image of relation = 0",
                                   "per-leg normal form", img.to_string(), img.is_zero()});
        }
    };
    invariance(rs_ldiff(), "inv.Delta_R(11)", dR, rs_lext(), rs_a());
    invariance(rs_dd(), "inv.Delta_R(12)", dR, rs_lext(), rs_a());
    invariance(rs_ldiff(), "inv.Delta_L(11)", dL, rs_a(), rs_lext());
    invariance(rs_dd(), "inv.Delta_L(12)", dL, rs_a(), rs_lext());

    // extended counit: kills the differentials, fixes the relation ideals
    for (Gen dx : diffs) {
        Scalar e = counit_letter(dx);
        rep.entries.push_back({"(22)." + std::string(name(dx)), "epshat(differential) = 0",
                               e.to_string(), e.to_string(), e.is_zero()});
    }
    for (const RuleSet* table : {&rs_ldiff(), &rs_dd()}) {
        for (const auto& r : table->rules()) {
            Scalar e = counit(Element(r.lhs) - r.rhs);
            rep.entries.push_back({"inv.epshat." + r.id, "epshat(relation) = 0", e.to_string(),
                                   e.to_string(), e.is_zero()});
        }
    }

    // coinverse: recomputed table against the printed one
    {
        const auto& syms = abcd_symbols();
        for (const auto& r : table_27()) {
            std::string id(r.id);
            Gen dx = *gen_by_name(id == "(27).1"   ? "dLa"
                                  : id == "(27).2" ? "dLb"
                                  : id == "(27).3" ? "dLg"
                                                   : "dLd");
            Element printed = normalize(parse(r.rhs, &syms), rs_lext());
            const Element& recomputed = shat_recomputed().at(dx);
            rep.entries.push_back({id, std::string(r.lhs) + " = " + r.rhs,
                                   recomputed.to_string(),
                                   (recomputed - printed).to_string(), recomputed == printed});
        }
    }
    // Shat (recomputed form) fixes the relation ideals
    for (const RuleSet* table : {&rs_ldiff(), &rs_dd()}) {
        for (const auto& r : table->rules()) {
            Element rel = Element(r.lhs) - r.rhs;
            Element img = normalize(antipode_extend(rel, shat_letter_table()), rs_lext());
            rep.entries.push_back({"inv.Shat." + r.id, "Shat(relation) = 0", img.to_string(),
                                   img.to_string(), img.is_zero()});
        }
    }
    rep.notes.push_back(
        "Delta_hat restricted to the matrix subalgebra is Delta by definition; its "
        "differential part is Delta_L + Delta_R, checked through (16a)/(16b)/(19a)/(19b).");
    rep.notes.push_back(
        "Delta_R and Delta_L extend through phi_R~ = (delta ox tau) o Delta and "
        "phi_L~ = (id ox delta) o Delta, the two graded-Leibniz components of "
        "Delta_hat o delta for the right-acting differential. The catalog tables "
        "(14a)/(14b) carry the parity flip on the opposite slot; with that placement "
        "the extension cannot be well defined on the relation ideal, so the "
        "coherent pair is used throughout and the (14) rows record the printed "
        "convention.");
    return rep;
}

// Partial-derivative co-structure and the non-invariance scan.
inline Report derivative_costructure_check() {
    Report rep;
    rep.suite = "hopf.partial";
    // counit values
    for (auto [x, v] : {std::pair<Gen, int>{Gen::pa, 1}, {Gen::pb, 0}, {Gen::pg, 0},
                        {Gen::pd, 1}}) {
        Scalar e = counit_letter(x) - Scalar(v);
        rep.entries.push_back({"(81).eps." + std::string(name(x)),
                               "eps(" + std::string(name(x)) + ") = " + std::to_string(v),
                               counit_letter(x).to_string(), e.to_string(), e.is_zero()});
    }
    // Delta scan over the derivative exchange table: the co-maps do not leave
    // these relations invariant; the scan locates every witness.
    for (const auto& r : rs_rderiv().rules()) {
        if (r.id.rfind("(79)", 0) != 0) continue;
        Element rel = Element(r.lhs) - r.rhs;
        TensorElement img = tensor_normalize(coproduct(rel), rs_smash_r(), rs_smash_r());
        rep.entries.push_back({"inv.Delta." + r.id, "Delta(relation) = 0 (expected to fail)",
                               "per-leg normal form", img.to_string(), img.is_zero()});
        Scalar e = counit(rel);
        rep.entries.push_back({"inv.eps." + r.id, "eps(relation) = 0 (expected to fail)",
                               e.to_string(), e.to_string(), e.is_zero()});
    }
    // the derivative-derivative relations, by contrast
    for (const auto& r : rs_rderiv().rules()) {
        if (r.id.rfind("(80)", 0) != 0) continue;
        Element rel = Element(r.lhs) - r.rhs;
        TensorElement img = tensor_normalize(coproduct(rel), rs_rderiv(), rs_rderiv());
        rep.entries.push_back({"inv.Delta." + r.id, "Delta(relation) = 0", "per-leg normal form",
                               img.to_string(), img.is_zero()});
    }
    std::size_t witnesses = 0;
    for (const auto& e : rep.entries)
        if (e.id.rfind("inv.Delta.(79)", 0) == 0 && !e.match) ++witnesses;
    rep.notes.push_back("non-invariance witnesses among the (79) relations under Delta: " +
                        std::to_string(witnesses));
    rep.notes.push_back(
        "coinverse installed on the derivative generators, with the formal inverses "
        "pa^-1, pd^-1 left uninterpreted: S(pa) = pa^-1 + pa^-1*pb*pd^-1*pg*pa^-1, "
        "S(pb) = -pa^-1*pb*pd^-1, S(pg) = -pd^-1*pg*pa^-1, "
        "S(pd) = pd^-1 + pd^-1*pg*pa^-1*pb*pd^-1; no rewrite rules exist for the formal "
        "inverses, so the coinverse side of the scan is not decidable and is not scored");
    return rep;
}

}  // namespace glpq
