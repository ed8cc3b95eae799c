#include "glpq/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace glpq;

TEST_CASE("suite registry covers every advertised id") {
    for (const auto& id : suite_ids()) {
        auto reports = run_suite(id);
        CHECK_FALSE(reports.empty());
    }
    CHECK_THROWS_AS(run_suite("no.such.suite"), std::invalid_argument);
}

TEST_CASE("reports are byte-stable across runs") {
    for (const auto& id : {"calculus.tables", "calculus.mc", "hopf.extended", "rmatrix.rtt"}) {
        auto a = run_suite(id), b = run_suite(id);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].to_text() == b[i].to_text());
            CHECK(a[i].to_json().dump() == b[i].to_json().dump());
        }
    }
}

TEST_CASE("json shape") {
    Report rep = verify_table("(31)");
    auto j = rep.to_json();
    REQUIRE(j.contains("entries"));
    CHECK(j["entries"].size() == 16);
    CHECK(j["entries"][0].contains("id"));
    CHECK(j["entries"][0].contains("expected"));
    CHECK(j["entries"][0].contains("got"));
    CHECK(j["entries"][0].contains("residual"));
    CHECK(j["entries"][0].contains("verdict"));
    CHECK(j["summary"]["mismatches"] == 0);
}

TEST_CASE("suite evaluation applies the frozen expectations") {
    SuiteOutcome tables = evaluate_suite("calculus.tables");
    CHECK(tables.pass);
    CHECK(tables.unexpected_mismatches == 0);
    CHECK(tables.unexpected_matches == 0);
    CHECK(tables.expected_mismatches == 17);  // (33).10, (34).5, (51).8, 14 in (52)
    SuiteOutcome partial = evaluate_suite("hopf.partial");
    CHECK(partial.pass);
    CHECK(partial.expected_mismatches == 25);
}
