#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"

#include "clic/complexity.hpp"

using namespace clic;
using doctest::Approx;

TEST_CASE("case-study complexities") {
    CHECK(hybrid_complexity({2, 2, 1, 0}, 10) == Approx(2.0 / 14 + 2.0 / 20 + 1.0 / 20));
    CHECK(round_half_up(hybrid_complexity({2, 2, 1, 0}, 10), 2) == Approx(0.29));
    CHECK(hybrid_complexity({0, 1, 1, 2}, 6) == Approx(0.3125));
    CHECK(hybrid_complexity({0, 1, 2, 1}, 8) == Approx(1.0 / 10 + 1.0 / 13 + 2.0 / 28));
    CHECK(round_half_up(hybrid_complexity({0, 1, 2, 1}, 8), 2) == Approx(0.25));
    CHECK(hybrid_complexity({0, 1, 2, 0}, 15) == Approx(1.0 / 17 + 2.0 / 35));
    CHECK(round_half_up(hybrid_complexity({0, 1, 2, 0}, 15), 2) == Approx(0.12));
    CHECK(round_half_up(hybrid_complexity({1, 2, 2, 2}, 10), 2) == Approx(0.38));
}

TEST_CASE("lean-season retail window") {
    CHECK(hybrid_complexity({0, 2, 3, 0}, 10) == Approx(2.0 / 14 + 3.0 / 40));
    CHECK(round_half_up(hybrid_complexity({0, 2, 3, 0}, 10), 2) == Approx(0.22));
}

TEST_CASE("zero counts contribute exactly zero") {
    CHECK(hybrid_complexity({0, 0, 0, 0}, 10) == 0.0);
    CHECK(hybrid_complexity({0, 0, 0, 0}, 0.001) == 0.0);
    const auto t = complexity_terms({0, 3, 0, 0}, 6);
    CHECK(t.q1 == 0.0);
    CHECK(t.q3 == 0.0);
    CHECK(t.q4 == 0.0);
    CHECK(t.q2 == Approx(3.0 / 12));
}

TEST_CASE("H is the sum of its terms") {
    const QuadrantCounts c{4, 3, 5, 2};
    const auto t = complexity_terms(c, 6);
    CHECK(hybrid_complexity(c, 6) == t.sum());
    CHECK(t.q1 == Approx(4.0 / 26));
    CHECK(t.q2 == Approx(3.0 / 12));
    CHECK(t.q3 == Approx(5.0 / 56));
    CHECK(t.q4 == Approx(2.0 / 16));
}

TEST_CASE("multipliers and asymptotes") {
    const auto m = term_multipliers();
    CHECK(m.q1 == 5);
    CHECK(m.q2 == 2);
    CHECK(m.q3 == 10);
    CHECK(m.q4 == 5);
    const auto a = term_asymptotes();
    CHECK(a.q1 == Approx(0.2));
    CHECK(a.q2 == Approx(0.5));
    CHECK(a.q3 == Approx(0.1));
    CHECK(a.q4 == Approx(0.2));
    CHECK(a.sum() == Approx(1.0));
}

TEST_CASE("custom weights change the multipliers") {
    const QuadrantWeights w{1, 1, 1, 1};
    const auto m = term_multipliers(w);
    CHECK(m.q1 == 4);
    CHECK(term_asymptotes(w).q2 == Approx(0.25));
    CHECK(hybrid_complexity({1, 0, 0, 0}, 1, w) == Approx(1.0 / 5));
}

TEST_CASE("non-positive delta and negative counts are domain errors") {
    for (double d : {0.0, -1.0}) {
        try {
            hybrid_complexity({1, 1, 1, 1}, d);
            FAIL("expected domain error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::domain);
        }
    }
    CHECK_THROWS_AS(hybrid_complexity({-1, 0, 0, 0}, 10), Error);
}

TEST_CASE("timeline over the retail plan") {
    const auto plan = build_plan(fixtures::portfolio("retail_portfolio.json"), IndustryRegistry::defaults());
    const auto rep = hybrid_complexity_timeline(plan, 10, "retail");
    CHECK(rep.industry == "retail");
    CHECK(rep.delta_w == 10);
    REQUIRE(rep.windows.size() == 2);
    CHECK(rep.windows[0].label == "Apr-Dec");
    CHECK(round_half_up(rep.windows[0].h, 2) == Approx(0.29));
    CHECK(rep.windows[1].label == "Jan-Mar");
    CHECK(round_half_up(rep.windows[1].h, 2) == Approx(0.22));
    CHECK(rep.windows[1].h - rep.windows[0].h == Approx(-0.0750).epsilon(1e-3));
    for (const auto& w : rep.windows) CHECK(w.h == w.terms.sum());
}

TEST_CASE("single-window timeline equals hybrid_complexity") {
    const auto plan = build_plan(fixtures::portfolio("banking_portfolio.json"), IndustryRegistry::defaults());
    const auto rep = hybrid_complexity_timeline(plan, 6, "finance");
    REQUIRE(rep.windows.size() == 1);
    CHECK(rep.windows[0].h == hybrid_complexity(rep.windows[0].counts, 6));
}

TEST_CASE("identical windows give identical H") {
    Portfolio p = fixtures::portfolio("healthcare_portfolio.json");
    p.schedule = {"a", "b", "c"};
    const auto rep = hybrid_complexity_timeline(build_plan(p, IndustryRegistry::defaults()), 8);
    REQUIRE(rep.windows.size() == 3);
    CHECK(rep.windows[0].h == rep.windows[1].h);
    CHECK(rep.windows[1].h == rep.windows[2].h);
}

TEST_CASE("timeline propagates domain errors") {
    const auto plan = build_plan(fixtures::portfolio("retail_portfolio.json"), IndustryRegistry::defaults());
    CHECK_THROWS_AS(hybrid_complexity_timeline(plan, 0), Error);
}

TEST_CASE("H matches the oracle on small grids") {
    for (int w1 = 0; w1 < 4; ++w1)
        for (int w2 = 0; w2 < 4; ++w2)
            for (int w3 = 0; w3 < 4; ++w3)
                for (int w4 = 0; w4 < 4; ++w4)
                    for (double d : {1.0, 6.0, 15.0})
                        CHECK(hybrid_complexity({w1, w2, w3, w4}, d) ==
                              Approx(oracle::hybrid_complexity(w1, w2, w3, w4, d)).epsilon(1e-12));
}

TEST_CASE("properties") {
    const auto s = props::kDefaultSeed;
    for (const auto& r : {props::h_in_unit_interval(s), props::h_strictly_increasing_in_counts(s + 1),
                          props::h_strictly_decreasing_in_delta(s + 2), props::terms_below_asymptotes(s + 3),
                          props::h_scale_invariant(s + 4), props::h_matches_oracle(s + 5)}) {
        INFO(r.name << ": " << r.first_failure);
        CHECK(r.cases >= 1000);
        CHECK(r.ok());
    }
}
