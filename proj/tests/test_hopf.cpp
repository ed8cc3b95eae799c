#include "glpq/suites.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace glpq;

TEST_CASE("co-structure generator tables") {
    auto w = [](Gen g) { return Word{g}; };
    TensorElement db;
    db.add(w(Gen::a), w(Gen::b), Scalar(1));
    db.add(w(Gen::b), w(Gen::d), Scalar(1));
    CHECK(coproduct(Element::gen(Gen::b)) == db);
    CHECK(counit(Element::gen(Gen::g)).is_zero());
    CHECK(counit(Element::gen(Gen::a)) == Scalar(1));
    CHECK(antipode(Element::gen(Gen::b)) == parse("-ai*b*di"));
    CHECK(normalize(antipode(parse("a")) - parse("ai + ai*b*di*g*ai"), rs_lext()).is_zero());
}

TEST_CASE("hopf axioms and relation preservation") {
    Report rep = hopf_axiom_check();
    for (const auto& e : rep.entries) {
        INFO(e.id << " residual " << e.residual);
        CHECK(e.match);
    }
    // the antipode law on d, spelled out: m(S ox id)Delta(d) = eps(d) 1
    TensorElement dd = coproduct(Element::gen(Gen::d));
    Element out;
    for (const auto& [k, c] : dd.terms())
        out += c * mul(antipode(Element(k.first)), Element(k.second));
    CHECK(normalize(out, rs_lext()) == Element::unit());
}

TEST_CASE("flipping the Koszul rule breaks the homomorphism property") {
    std::size_t broken = 0;
    for (const auto& r : rs_a().rules()) {
        Element rel = Element(r.lhs) - r.rhs;
        TensorElement img = coproduct(rel, SignRule::plain);
        TensorElement n = tensor_normalize(img, rs_a(), rs_a());
        if (!n.is_zero()) ++broken;
    }
    CHECK(broken >= 1);
}

TEST_CASE("extended co-structures") {
    Report rep = extended_costructure_check();
    for (const auto& e : rep.entries) {
        const Suspect* s = find_suspect(e.id);
        INFO(rep.suite << " entry " << e.id << " residual " << e.residual);
        CHECK(e.match == (s == nullptr));
    }
    // the printed phi tables agree with their defining formulas
    auto w = [](Gen g) { return Word{g}; };
    TensorElement phira;
    phira.add(w(Gen::dLa), w(Gen::a), Scalar(1));
    phira.add(w(Gen::dLb), w(Gen::g), Scalar(1));
    CHECK(phi_r(Gen::dLa) == phira);
    TensorElement phila;
    phila.add(w(Gen::a), w(Gen::dLa), Scalar(1));
    phila.add(w(Gen::b), w(Gen::dLg), Scalar(-1));
    CHECK(phi_l(Gen::dLa) == phila);
    // extended counit kills the differentials
    for (Gen dx : {Gen::dLa, Gen::dLb, Gen::dLg, Gen::dLd}) CHECK(counit_letter(dx).is_zero());
}

TEST_CASE("recomputed coinverse satisfies the extended antipode law") {
    // m(Shat ox id)Delta_hat(dx) = epshat(dx) = 0, and the mirrored law
    for (Gen dx : {Gen::dLa, Gen::dLb, Gen::dLg, Gen::dLd}) {
        TensorElement dhat = delta_l_map(Element::gen(dx)) + delta_r_map(Element::gen(dx));
        Element left, right;
        for (const auto& [k, c] : dhat.terms()) {
            left += c * mul(antipode_extend(Element(k.first), shat_letter_table()),
                            Element(k.second));
            right += c * mul(Element(k.first),
                             antipode_extend(Element(k.second), shat_letter_table()));
        }
        INFO(name(dx));
        CHECK(normalize(left, rs_lext()).is_zero());
        CHECK(normalize(right, rs_lext()).is_zero());
    }
    // and the table comparison marks all four printed lines as suspects
    Report rep = extended_costructure_check();
    std::size_t marked = 0;
    for (const auto& e : rep.entries)
        if (e.id.rfind("(27).", 0) == 0 && !e.match) ++marked;
    CHECK(marked == 4);
}

TEST_CASE("derivative co-structure and the non-invariance scan") {
    Report rep = derivative_costructure_check();
    for (const auto& e : rep.entries) {
        const Suspect* s = find_suspect(e.id);
        INFO(e.id << " residual " << e.residual);
        CHECK(e.match == (s == nullptr));
    }
    std::size_t witnesses = 0;
    for (const auto& e : rep.entries)
        if (e.id.rfind("inv.Delta.(79)", 0) == 0 && !e.match) ++witnesses;
    CHECK(witnesses >= 1);  // the scan must exhibit a witness
    CHECK(witnesses == 16);  // and in fact none of the relations survive
    // the installed coproduct values
    auto w = [](Gen g) { return Word{g}; };
    TensorElement dpb;
    dpb.add(w(Gen::pa), w(Gen::pb), Scalar(1));
    dpb.add(w(Gen::pb), w(Gen::pd), Scalar(1));
    CHECK(coproduct(Element::gen(Gen::pb)) == dpb);
    CHECK(counit(Element::gen(Gen::pa)) == Scalar(1));
}
