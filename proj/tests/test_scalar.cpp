#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace glpq;
using test::oracle_mul;

TEST_CASE("ring examples") {
    Scalar one(1), pq = Scalar::p() * Scalar::q();
    CHECK((one - pq) + (pq - one) == Scalar(0));
    CHECK(((one - pq) + (pq - one)).is_zero());

    // expected values frozen from the dense brute-force multiplier
    Scalar lhs1 = oracle_mul(Scalar::p() - Scalar::q(-1), Scalar::q() * Scalar::p(-1));
    CHECK(lhs1 == Scalar::q() - Scalar::p(-1));
    CHECK((Scalar::p() - Scalar::q(-1)) * (Scalar::q() * Scalar::p(-1)) == lhs1);

    Scalar f = pq - one;
    Scalar lhs2 = oracle_mul(Scalar::p(-1) * Scalar::q(-1), oracle_mul(f, f));
    CHECK(lhs2 == pq - Scalar(2) + Scalar::p(-1) * Scalar::q(-1));
    CHECK(Scalar::p(-1) * Scalar::q(-1) * f * f == lhs2);
}

TEST_CASE("canonical text form") {
    CHECK(Scalar(0).to_string() == "0");
    CHECK((Scalar(1) - Scalar::p() * Scalar::q()).to_string() == "1 - p*q");
    CHECK((Scalar::p(-1) * Scalar::q(-1)).to_string() == "p^-1*q^-1");
    CHECK((Scalar::p() - Scalar::q(-1)).to_string() == "p - q^-1");
    CHECK(Scalar(Rational(1, 2)).to_string() == "1/2");
}

TEST_CASE("substitution") {
    Scalar pq = Scalar::p() * Scalar::q();
    CHECK((Scalar(1) - pq).classical_limit().is_zero());
    // p := q renames the symbol
    Scalar r = (Scalar::p() - Scalar::q(-1)).substitute(Scalar::q(), std::nullopt);
    CHECK(r == Scalar::q() - Scalar::q(-1));
    // zero of the squared factor
    Scalar f = Scalar::p(-1) * Scalar::q(-1) * (pq - Scalar(1)) * (pq - Scalar(1));
    CHECK(f.classical_limit().is_zero());
    CHECK_THROWS_AS(Scalar(1).substitute(Scalar(1) + Scalar::p(), std::nullopt),
                    NonUnitSubstitution);
    CHECK_THROWS_AS((Scalar::p() + Scalar::q()).inverse(), NonUnitSubstitution);
}

TEST_CASE("ring axioms on random scalars") {
    test::Rng rng(0xC0FFEE);
    for (int i = 0; i < 300; ++i) {
        Scalar a = test::random_scalar(rng), b = test::random_scalar(rng),
               c = test::random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == oracle_mul(a, b));
    }
}

TEST_CASE("classical substitution is a ring homomorphism") {
    test::Rng rng(0xBEEF);
    for (int i = 0; i < 200; ++i) {
        Scalar a = test::random_scalar(rng), b = test::random_scalar(rng);
        CHECK((a * b).classical_limit() == a.classical_limit() * b.classical_limit());
        CHECK((a + b).classical_limit() == a.classical_limit() + b.classical_limit());
    }
}

TEST_CASE("exact division") {
    test::Rng rng(0xD1CE);
    for (int i = 0; i < 200; ++i) {
        Scalar a = test::random_nonzero_scalar(rng), b = test::random_nonzero_scalar(rng);
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK_FALSE(exact_divide(Scalar::p(), Scalar::p() + Scalar(1)).has_value());
    CHECK(exact_divide(Scalar::q(-1), Scalar::p() * Scalar::q(-1)).value() == Scalar::p(-1));
}
