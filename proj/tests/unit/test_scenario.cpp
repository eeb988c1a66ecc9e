#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "clic/scenario.hpp"

using namespace clic;
using doctest::Approx;

namespace {

EvaluationSettings settings(double y) {
    EvaluationSettings s;
    s.engagement.y = y;
    return s;
}

const WindowOutcome& window(const GroupOutcome& g, const std::string& label) {
    for (const auto& w : g.windows)
        if (w.label == label) return w;
    throw std::runtime_error("no window " + label);
}

} // namespace

TEST_CASE("group_by_industry") {
    const auto mixed = group_by_industry(fixtures::portfolio("ecommerce_mixed_portfolio.json"));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].industry == "retail");
    CHECK(mixed[0].portfolio.workloads.size() == 3);
    CHECK(mixed[1].industry == "finance");
    CHECK(mixed[1].portfolio.workloads.size() == 2);

    CHECK(group_by_industry(fixtures::portfolio("retail_portfolio.json")).size() == 1);
    CHECK(group_by_industry(Portfolio{}).empty());
}

TEST_CASE("groups share the parent schedule and keep every workload once") {
    auto p = fixtures::portfolio("ecommerce_mixed_portfolio.json");
    p.workloads[1].industry = "Retail";
    p.schedule = {"h1", "h2"};
    const auto groups = group_by_industry(p);
    std::size_t n = 0;
    for (const auto& g : groups) {
        CHECK(g.portfolio.schedule == p.schedule);
        n += g.portfolio.workloads.size();
    }
    CHECK(n == p.workloads.size());
}

TEST_CASE("group_delta_w prefers a workload override") {
    auto p = fixtures::portfolio("retail_portfolio.json");
    const auto reg = IndustryRegistry::defaults();
    CHECK(group_delta_w(group_by_industry(p)[0], reg) == 10);
    p.workloads[2].delta_w = 12;
    CHECK(group_delta_w(group_by_industry(p)[0], reg) == 12);
}

TEST_CASE("retail Q1 workload moved to Q3 for the lean season stays left of the CLIC") {
    const auto p = fixtures::portfolio("retail_portfolio.json");
    const auto r = apply_move(p, {"ecommerce-frontend", "Apr-Dec", Quadrant::Q3});
    CHECK(r.from == Quadrant::Q1);
    CHECK_FALSE(r.crossed_clic);
    CHECK(r.warnings.empty());
    CHECK(r.portfolio.find("ecommerce-frontend")->override_for("Apr-Dec")->pinned_quadrant == Quadrant::Q3);
}

TEST_CASE("moving a Q3 workload to Q2 crosses the CLIC") {
    const auto r = apply_move(fixtures::portfolio("retail_portfolio.json"), {"dev-test", "Jan-Mar", Quadrant::Q2});
    CHECK(r.from == Quadrant::Q3);
    CHECK(r.crossed_clic);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].code == "crosses_clic");
}

TEST_CASE("apply_move leaves the input untouched") {
    const auto p = fixtures::portfolio("retail_portfolio.json");
    const auto copy = p;
    (void)apply_move(p, {"dev-test", "Jan-Mar", Quadrant::Q2});
    CHECK(p == copy);
}

TEST_CASE("apply_move reference errors") {
    const auto p = fixtures::portfolio("retail_portfolio.json");
    for (const Move& m : {Move{"nope", "Jan-Mar", Quadrant::Q3}, Move{"dev-test", "Jul", Quadrant::Q3}}) {
        try {
            (void)apply_move(p, m);
            FAIL("expected reference error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::reference);
        }
    }
}

TEST_CASE("retail evaluation per window") {
    const auto s = evaluate_scenario(fixtures::portfolio("retail_portfolio.json"), IndustryRegistry::defaults(),
                                     ProviderProfile::defaults(), settings(0.2));
    REQUIRE(s.groups.size() == 1);
    const auto& g = s.groups[0];
    CHECK(g.industry == "retail");
    CHECK(g.delta_w == 10);
    CHECK(g.x == Approx(0.8));
    CHECK(window(g, "Apr-Dec").h == Approx(oracle::hybrid_complexity(2, 2, 1, 0, 10)));
    CHECK(window(g, "Jan-Mar").h == Approx(oracle::hybrid_complexity(0, 2, 3, 0, 10)));
    CHECK(window(g, "Apr-Dec").effort_pm == Approx(174));
    CHECK(window(g, "Jan-Mar").effort_pm == Approx(0.22 * 150 * 0.8 / 0.2));
    CHECK(window(g, "Apr-Dec").relative_cost == 15);
    CHECK(g.peak_window == "Apr-Dec");
    CHECK(g.peak_effort_pm == Approx(174));
    CHECK(s.peak_window == "Apr-Dec");
    CHECK(s.peak_effort_pm == Approx(174));
}

TEST_CASE("exact H basis feeds unrounded H") {
    auto st = settings(0.2);
    st.conventions.h_basis = HBasis::exact;
    const auto s = evaluate_scenario(fixtures::portfolio("banking_portfolio.json"), IndustryRegistry::defaults(),
                                     ProviderProfile::defaults(), st);
    CHECK(s.peak_effort_pm == Approx(0.3125 * 150 * 0.6 / 0.2));
}

TEST_CASE("mixed portfolio keeps one H per group and sums efforts") {
    const auto s = evaluate_scenario(fixtures::portfolio("ecommerce_mixed_portfolio.json"),
                                     IndustryRegistry::defaults(), ProviderProfile::defaults(), settings(0.5));
    REQUIRE(s.groups.size() == 2);
    const auto& retail = s.groups[0].windows[0];
    const auto& finance = s.groups[1].windows[0];
    CHECK(retail.h == Approx(oracle::hybrid_complexity(1, 1, 1, 0, 10)));
    CHECK(finance.h == Approx(oracle::hybrid_complexity(0, 1, 0, 1, 6)));
    REQUIRE(s.totals.size() == 1);
    CHECK(s.totals[0].effort_pm == Approx(retail.effort_pm + finance.effort_pm));
    CHECK(s.totals[0].counts == QuadrantCounts{1, 2, 1, 1});
    CHECK(s.totals[0].relative_cost == Approx(retail.relative_cost + finance.relative_cost));
}

TEST_CASE("what_if on the retail lean season") {
    const auto p = fixtures::portfolio("retail_portfolio.json");
    Portfolio peak_all_year = p;
    for (auto& w : peak_all_year.workloads) w.overrides.clear();
    const std::vector<Move> moves{{"ecommerce-frontend", "Jan-Mar", Quadrant::Q3},
                                  {"recommendations", "Jan-Mar", Quadrant::Q3}};
    const auto d = what_if(peak_all_year, IndustryRegistry::defaults(), ProviderProfile::defaults(), settings(0.2),
                           moves);
    CHECK(window(d.before.groups[0], "Jan-Mar").h == Approx(oracle::hybrid_complexity(2, 2, 1, 0, 10)));
    CHECK(window(d.after.groups[0], "Jan-Mar").h == Approx(oracle::hybrid_complexity(0, 2, 3, 0, 10)));
    CHECK(d.groups[0].windows[1].h == Approx(-0.0750).epsilon(1e-3));
    CHECK(d.groups[0].windows[0].h == 0);
    CHECK(d.moves.size() == 2);
    for (const auto& m : d.moves) {
        CHECK(m.from == Quadrant::Q1);
        CHECK_FALSE(m.crossed_clic);
    }
}

TEST_CASE("what_if with no moves changes nothing") {
    const auto d = what_if(fixtures::portfolio("retail_portfolio.json"), IndustryRegistry::defaults(),
                           ProviderProfile::defaults(), settings(0.2), {});
    CHECK(d.before == d.after);
    for (const auto& g : d.groups)
        for (const auto& w : g.windows) {
            CHECK(w.h == 0);
            CHECK(w.effort_pm == 0);
        }
    CHECK(d.peak_effort_pm == 0);
}

TEST_CASE("move to the current quadrant is a no-op downstream") {
    const std::vector<Move> moves{{"dev-test", "Apr-Dec", Quadrant::Q3}};
    const auto d = what_if(fixtures::portfolio("retail_portfolio.json"), IndustryRegistry::defaults(),
                           ProviderProfile::defaults(), settings(0.2), moves);
    CHECK(d.before.groups == d.after.groups);
    CHECK(d.before.totals == d.after.totals);
}

TEST_CASE("last move wins per workload and window") {
    const auto p = fixtures::portfolio("retail_portfolio.json");
    const auto reg = IndustryRegistry::defaults();
    const auto prov = ProviderProfile::defaults();
    const std::vector<Move> cancel{{"ecommerce-frontend", "Apr-Dec", Quadrant::Q3},
                                   {"ecommerce-frontend", "Apr-Dec", Quadrant::Q1}};
    const std::vector<Move> single{{"ecommerce-frontend", "Apr-Dec", Quadrant::Q1}};
    const auto a = what_if(p, reg, prov, settings(0.2), cancel);
    const auto b = what_if(p, reg, prov, settings(0.2), single);
    CHECK(a.after.groups == b.after.groups);
    CHECK(a.after.totals == b.after.totals);
}

TEST_CASE("after-state equals a fresh evaluation of the mutated portfolio") {
    const auto p = fixtures::portfolio("ecommerce_mixed_portfolio.json");
    const auto reg = IndustryRegistry::defaults();
    const auto prov = ProviderProfile::defaults();
    const std::vector<Move> moves{{"catalog", "default", Quadrant::Q2}, {"payments", "default", Quadrant::Q4}};
    const auto d = what_if(p, reg, prov, settings(0.4), moves);
    CHECK(d.after == evaluate_scenario(d.mutated, reg, prov, settings(0.4)));
    CHECK(d.before == evaluate_scenario(p, reg, prov, settings(0.4)));
    CHECK(d.moves[0].crossed_clic);
    CHECK(d.moves[1].crossed_clic);
}

TEST_CASE("evaluation errors carry their stage") {
    auto p = fixtures::portfolio("retail_portfolio.json");
    p.workloads[0].isolation_demand = 3;
    try {
        (void)evaluate_scenario(p, IndustryRegistry::defaults(), ProviderProfile::defaults(), settings(0.2));
        FAIL("expected validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::validation);
        CHECK(e.stage() == "validate");
    }
    try {
        (void)evaluate_scenario(fixtures::portfolio("retail_portfolio.json"), IndustryRegistry::defaults(),
                                ProviderProfile::defaults(), settings(0));
        FAIL("expected domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
        CHECK(e.stage() == "effort");
    }
}
