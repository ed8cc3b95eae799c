#include "glpq/rulesets.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace glpq;

TEST_CASE("normalization examples") {
    CHECK(normalize(parse("a*b"), rs_a()) == parse("q*b*a"));
    CHECK(normalize(parse("b*b"), rs_a()).is_zero());
    CHECK(normalize(parse("a*d"), rs_a()) == parse("d*a + (p - q^-1)*g*b"));
    CHECK(normalize(parse("dLa*a"), rs_ldiff()) == parse("p*q*a*dLa"));
    CHECK(normalize(parse("dLb*b"), rs_ldiff()) == parse("b*dLb"));
}

TEST_CASE("step limit is a hard error") {
    CHECK_THROWS_AS(normalize(parse("a*d*a*d*a*d"), rs_a(), 2), StepLimitExceeded);
}

TEST_CASE("rule set constructor enforces its invariants") {
    RuleSet rs("bad");
    // inhomogeneous rhs
    CHECK_THROWS_AS(rs.add("x1", Word{Gen::a, Gen::b}, parse("b*a + a")), BadRule);
    // rhs not rank-sorted
    CHECK_THROWS_AS(rs.add("x2", Word{Gen::a, Gen::b}, parse("a*b - a*b + b*a + a*b")), BadRule);
    // ascending lhs with same-length rhs
    CHECK_THROWS_AS(rs.add("x3", Word{Gen::b, Gen::a}, parse("q*b*a")), BadRule);
    // lhs of length 3
    CHECK_THROWS_AS(rs.add("x4", Word{Gen::a, Gen::b, Gen::g}, Element::zero()), BadRule);
    // a healthy rule is accepted
    CHECK_NOTHROW(rs.add("ok", Word{Gen::a, Gen::b}, parse("q*b*a")));
}

TEST_CASE("normalize is idempotent and respects products") {
    test::Rng rng(0x1D3);
    for (const RuleSet* rs : {&rs_a(), &rs_lext(), &rs_rext(), &rs_smash_r()}) {
        auto alpha = test::scope_vector(*rs);
        for (int i = 0; i < 40; ++i) {
            Element e = test::random_element(rng, alpha, 3, 4);
            Element n = normalize(e, *rs);
            CHECK(normalize(n, *rs) == n);
            Element f = test::random_element(rng, alpha, 2, 3);
            CHECK(normalize(mul(e, f), *rs) ==
                  normalize(mul(normalize(e, *rs), normalize(f, *rs)), *rs));
        }
    }
}

TEST_CASE("randomized-strategy oracle agrees on confluent sets") {
    test::Rng data_rng(0xAB1E), strat_rng(0x7A57);
    for (const RuleSet* rs : {&rs_a(), &rs_dd(), &rs_lext(), &rs_rext(), &rs_smash_l()}) {
        auto alpha = test::scope_vector(*rs);
        for (int i = 0; i < 200; ++i) {
            Element e = test::random_element(data_rng, alpha, 3, 5);
            CHECK(normalize(e, *rs) == test::normalize_random_strategy(e, *rs, strat_rng));
        }
    }
}

TEST_CASE("classical limit of the calculus rule sets is graded commutativity") {
    for (const RuleSet* rs :
         {&rs_a(), &rs_dd(), &rs_ddr(), &rs_ldiff(), &rs_rdiff(), &rs_plane()}) {
        for (const auto& r : rs->rules()) {
            Element rhs_cl = r.rhs.substitute(Scalar(1), Scalar(1));
            if (r.lhs[0] == r.lhs[1]) {
                // square-zero rules: the square of an odd letter vanishes
                INFO(r.id);
                CHECK(grade(r.lhs[0]) == 1);
                CHECK(rhs_cl.is_zero());
                continue;
            }
            Element expect(Word{r.lhs[1], r.lhs[0]},
                           Scalar((grade(r.lhs[0]) & grade(r.lhs[1])) ? -1 : 1));
            INFO(r.id);
            CHECK(rhs_cl == expect);
        }
    }
}
