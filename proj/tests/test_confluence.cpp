#include "glpq/suites.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace glpq;

namespace {

void check_confluent(const RuleSet& rs) {
    ConfluenceReport rep = critical_pairs(rs, 4);
    std::size_t nonzero = 0;
    for (const auto& o : rep.entries)
        if (!o.residual.is_zero()) {
            ++nonzero;
            UNSCOPED_INFO("overlap " << word_string(o.word) << " [" << o.rule1 << " vs "
                                     << o.rule2 << "] -> " << o.residual.to_string());
        }
    INFO("rule set " << rs.name() << ", " << rep.overlaps << " overlaps");
    CHECK(nonzero == 0);
    CHECK(rep.confluent);
}

}  // namespace

TEST_CASE("hand-picked overlaps resolve") {
    // the two reductions of a*d*b meet after full normalization
    Word w = {Gen::a, Gen::d, Gen::b};
    const RewriteRule* ad = rs_a().find_lhs(Word{Gen::a, Gen::d});
    const RewriteRule* db = rs_a().find_lhs(Word{Gen::d, Gen::b});
    REQUIRE(ad);
    REQUIRE(db);
    Element left = normalize(rewrite_once(w, 0, *ad, Scalar(1)), rs_a());
    Element right = normalize(rewrite_once(w, 1, *db, Scalar(1)), rs_a());
    CHECK(left == right);

    // both routes through a*b*b die on the square-zero rule
    Word v = {Gen::a, Gen::b, Gen::b};
    const RewriteRule* ab = rs_a().find_lhs(Word{Gen::a, Gen::b});
    const RewriteRule* bb = rs_a().find_lhs(Word{Gen::b, Gen::b});
    Element l2 = normalize(rewrite_once(v, 0, *ab, Scalar(1)), rs_a());
    Element r2 = normalize(rewrite_once(v, 1, *bb, Scalar(1)), rs_a());
    CHECK(l2 == r2);
    CHECK(l2.is_zero());
}

TEST_CASE("maxLen below 3 is rejected") {
    CHECK_THROWS_AS(critical_pairs(rs_a(), 2), std::invalid_argument);
}

TEST_CASE("axiom sets are locally confluent to length 4") {
    check_confluent(rs_a());
    check_confluent(rs_left_axioms());
    check_confluent(rs_right_axioms());
    check_confluent(rs_a().merged(rs_rderiv(), "RS_A+RS_RDERIV"));
    check_confluent(rs_a().merged(rs_lderiv(), "RS_A+RS_LDERIV"));
}

TEST_CASE("completed and combined sets stay confluent") {
    check_confluent(rs_lext());
    check_confluent(rs_rext());
    check_confluent(rs_plane_full());
}
