#pragma once

// Left and right exterior differentials and the composite dictionaries:
// the superinverse entries A, B, C, D, the Cartan-Maurer one-forms on both
// sides, and the vector-field realizations of the quantum Lie algebra
// generators in terms of partial derivatives.

#include "glpq/parse.hpp"
#include "glpq/rulesets.hpp"

#include <map>

namespace glpq {

enum class Side { left, right };

// delta of a single letter, as an element (used by the Leibniz expansion).
inline Element delta_letter(Gen g, Side side) {
    switch (g) {
        case Gen::a: return Element::gen(side == Side::left ? Gen::dLa : Gen::dRa);
        case Gen::b: return Element::gen(side == Side::left ? Gen::dLb : Gen::dRb);
        case Gen::g: return Element::gen(side == Side::left ? Gen::dLg : Gen::dRg);
        case Gen::d: return Element::gen(side == Side::left ? Gen::dLd : Gen::dRd);
        // delta(y^-1) = -y^-1 delta(y) y^-1, from delta(y y^-1) = 0
        case Gen::ai:
            return Scalar(-1) *
                   mul(Element::gen(Gen::ai),
                       mul(Element::gen(side == Side::left ? Gen::dLa : Gen::dRa),
                           Element::gen(Gen::ai)));
        case Gen::di:
            return Scalar(-1) *
                   mul(Element::gen(Gen::di),
                       mul(Element::gen(side == Side::left ? Gen::dLd : Gen::dRd),
                           Element::gen(Gen::di)));
        case Gen::dLa: case Gen::dLb: case Gen::dLg: case Gen::dLd:
            if (side == Side::left) return Element::zero();  // nilpotency
            break;
        case Gen::dRa: case Gen::dRb: case Gen::dRg: case Gen::dRd:
            if (side == Side::right) return Element::zero();
            break;
        default:
            break;
    }
    throw UnsupportedGenerator("delta is not defined on generator " + std::string(name(g)));
}

// Graded Leibniz rule. Left convention: delta(fg) = f (delta g) +
// (-1)^{grade(g)} (delta f) g, so differentiating a letter crosses everything
// to its right. Right convention mirrors it.
inline Element apply_delta(const Element& e, Side side) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            int crossed = 0;
            if (side == Side::left) {
                for (std::size_t j = i + 1; j < w.size(); ++j) crossed += grade(w[j]);
            } else {
                for (std::size_t j = 0; j < i; ++j) crossed += grade(w[j]);
            }
            Element d = delta_letter(w[i], side);
            if (d.is_zero()) continue;
            Element piece(Word(w.begin(), w.begin() + i), (crossed & 1) ? -c : c);
            piece = mul(piece, d);
            piece = mul(piece, Element(Word(w.begin() + i + 1, w.end())));
            out += piece;
        }
    }
    return out;
}

// Replace composite letters by their defining expansions, multiplying out.
inline Element expand(const Element& e, const std::map<Gen, Element>& dict) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element acc(Scalar(1));
        for (Gen g : w) {
            auto it = dict.find(g);
            acc = mul(acc, it == dict.end() ? Element::gen(g) : it->second);
        }
        out += c * acc;
    }
    return out;
}

// Entries of the superinverse T^-1 as words in the inverse units.
inline const Parser::SymbolTable& abcd_symbols() {
    static const Parser::SymbolTable tab = {
        {"A", parse("ai + ai*b*di*g*ai")},
        {"B", parse("-ai*b*di")},
        {"C", parse("-di*g*ai")},
        {"D", parse("di + di*g*ai*b*di")},
    };
    return tab;
}

// Left Cartan-Maurer one-forms Omega_L = T^-1 delta_L T.
inline const std::map<Gen, Element>& left_oneform_expansion() {
    static const std::map<Gen, Element> dict = [] {
        const auto& s = abcd_symbols();
        return std::map<Gen, Element>{
            {Gen::th1, parse("A*dLa + B*dLg", &s)},
            {Gen::u1, parse("A*dLb + B*dLd", &s)},
            {Gen::th2, parse("D*dLd + C*dLb", &s)},
            {Gen::u2, parse("C*dLa + D*dLg", &s)},
        };
    }();
    return dict;
}

// Right Cartan-Maurer one-forms Omega_R = delta_R T T^-1.
inline const std::map<Gen, Element>& right_oneform_expansion() {
    static const std::map<Gen, Element> dict = [] {
        const auto& s = abcd_symbols();
        return std::map<Gen, Element>{
            {Gen::w1, parse("dRa*A + dRb*C", &s)},
            {Gen::v1, parse("dRa*B + dRb*D", &s)},
            {Gen::w2, parse("dRg*B + dRd*D", &s)},
            {Gen::v2, parse("dRg*A + dRd*C", &s)},
        };
    }();
    return dict;
}

// Inverse dictionaries: the differentials written in terms of the one-forms.
inline const std::map<Gen, Element>& left_differential_via_oneforms() {
    static const std::map<Gen, Element> dict = {
        {Gen::dLa, parse("a*th1 + b*u2")},
        {Gen::dLb, parse("a*u1 + b*th2")},
        {Gen::dLd, parse("d*th2 + g*u1")},
        {Gen::dLg, parse("g*th1 + d*u2")},
    };
    return dict;
}
inline const std::map<Gen, Element>& right_differential_via_oneforms() {
    static const std::map<Gen, Element> dict = {
        {Gen::dRa, parse("w1*a + v1*g")},
        {Gen::dRb, parse("w1*b + v1*d")},
        {Gen::dRd, parse("w2*d + v2*b")},
        {Gen::dRg, parse("w2*g + v2*a")},
    };
    return dict;
}

// Vector-field realizations of the quantum Lie algebra generators.
inline const std::map<Gen, Element>& right_vector_field_expansion() {
    static const std::map<Gen, Element> dict = {
        {Gen::T1, parse("a*pa + b*pb")},
        {Gen::Np, parse("g*pa + d*pb")},
        {Gen::T2, parse("d*pd + g*pg")},
        {Gen::Nm, parse("a*pg + b*pd")},
    };
    return dict;
}
inline const std::map<Gen, Element>& left_vector_field_expansion() {
    static const std::map<Gen, Element> dict = {
        {Gen::TL1, parse("pLa*a + pLg*g")},
        {Gen::NLp, parse("pLb*a + pLd*g")},
        {Gen::TL2, parse("pLb*b + pLd*d")},
        {Gen::NLm, parse("pLa*b + pLg*d")},
    };
    return dict;
}

// Antipode images of the matrix generators (superinverse entries).
inline const std::map<Gen, Element>& antipode_table() {
    static const std::map<Gen, Element> dict = [] {
        const auto& s = abcd_symbols();
        return std::map<Gen, Element>{
            {Gen::a, s.at("A")},
            {Gen::b, s.at("B")},
            {Gen::g, s.at("C")},
            {Gen::d, s.at("D")},
        };
    }();
    return dict;
}

}  // namespace glpq
