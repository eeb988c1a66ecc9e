#include "doctest.h"

#include "fixtures.hpp"

#include "clic/io.hpp"

#include "json.hpp"

#include <filesystem>

using namespace clic;

namespace {

Error parse_error(std::string_view doc) {
    try {
        (void)load_portfolio(doc);
    } catch (const Error& e) {
        return e;
    }
    return Error(ErrorKind::internal, "no error");
}

} // namespace

TEST_CASE("retail fixture loads with five workloads") {
    const auto p = fixtures::portfolio("retail_portfolio.json");
    CHECK(p.workloads.size() == 5);
    CHECK(p.schedule == std::vector<std::string>{"Apr-Dec", "Jan-Mar"});
    CHECK(p.find("ecommerce-frontend")->overrides.size() == 1);
}

TEST_CASE("portfolio round-trip") {
    for (const char* name : {"retail_portfolio.json", "banking_portfolio.json", "ecommerce_mixed_portfolio.json"}) {
        CAPTURE(name);
        const auto p = fixtures::portfolio(name);
        const auto again = load_portfolio(save_portfolio(p));
        CHECK(again == p);
        CHECK(save_portfolio(again) == save_portfolio(p));
    }
}

TEST_CASE("portfolio defaults") {
    const auto p = load_portfolio(R"({"workloads": []})");
    CHECK(p.schedule == std::vector<std::string>{"default"});
    CHECK(p.clic.isolation_threshold == 0.5);
}

TEST_CASE("missing industry names the field") {
    const auto e = parse_error(R"({"workloads": [{"id": "a", "isolation_demand": 0.1, "control_demand": 0.2}]})");
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(e.path() == "/workloads/0/industry");
    CHECK(std::string(e.what()).find("industry") != std::string::npos);
}

TEST_CASE("wrong types name the field") {
    const auto e = parse_error(
        R"({"workloads": [{"id": "a", "industry": "retail", "isolation_demand": "high", "control_demand": 0.2}]})");
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(e.path() == "/workloads/0/isolation_demand");
}

TEST_CASE("syntax errors report line and column") {
    const auto e = parse_error("{\n  \"workloads\": [\n    {\"id\": }\n]}");
    CHECK(e.kind() == ErrorKind::parse);
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("unknown quadrant in a pin") {
    const auto e = parse_error(R"({"workloads": [{"id": "a", "industry": "retail", "isolation_demand": 0.1,
                                  "control_demand": 0.2, "pinned_quadrant": "Q7"}]})");
    CHECK(e.path() == "/workloads/0/pinned_quadrant");
}

TEST_CASE("registry and provider documents") {
    const auto r = load_registry(R"({"entries": {"Retail": 10, "mining": 7}})");
    CHECK(r.delta_w("retail") == 10);
    CHECK(r.delta_w("mining") == 7);
    CHECK(load_registry(save_registry(r)) == r);

    const auto p = load_provider(R"({"k": 120, "x_by_industry": {"retail": 0.5}})");
    CHECK(p.k == 120);
    CHECK(p.x_for("retail") == 0.5);
    CHECK(p.default_x == 1.0);
    CHECK(load_provider(save_provider(p)) == p);

    CHECK_THROWS_AS(load_registry(R"({"retail": 10})"), Error);
    CHECK_THROWS_AS(load_provider(R"({"x_by_industry": {}})"), Error);
}

TEST_CASE("records document in both shapes") {
    const auto a = load_records(R"({"records": [{"industry": "retail", "h": 0.29, "observed_effort": 174,
                                                 "x": 0.8, "y": 0.2}]})");
    const auto b = load_records(R"([{"industry": "retail", "h": 0.29, "observed_effort": 174, "x": 0.8, "y": 0.2}])");
    REQUIRE(a.size() == 1);
    CHECK(a == b);
    CHECK(*a[0].h == 0.29);
}

TEST_CASE("curve points normalize raw observations") {
    const auto c = load_curve(R"({"industry": "retail", "points": [
        {"workload_count": 1, "observed_effort": 50, "custom_effort": 10, "x": 0.8},
        {"workload_count": 2, "normalized_effort": 60}]})");
    REQUIRE(c.points.size() == 2);
    CHECK(c.points[0].normalized_effort == doctest::Approx(50));
    CHECK(c.points[1].normalized_effort == 60);
    CHECK(c.industry == "retail");
}

TEST_CASE("nfr table in both shapes") {
    const auto t = load_nfr_table(fixtures::read("nfr_profiles.json"));
    CHECK(t.size() == 6);
    CHECK(t[0].industry == "airline");
    CHECK(*t[0].delta_w == 15);
    const auto single = load_nfr_table(R"({"availability": "M", "business_continuity": "M", "security": "L",
                                            "compliance": "L", "performance": "M"})");
    REQUIRE(single.size() == 1);
    CHECK(single[0].nfr.security == NfrLevel::L);
}

TEST_CASE("moves document") {
    const auto m = load_moves(R"([{"workload_id": "a", "window_label": "w", "target_quadrant": "Q2"}])");
    REQUIRE(m.size() == 1);
    CHECK(m[0] == Move{"a", "w", Quadrant::Q2});
}

TEST_CASE("report formats") {
    CHECK(parse_report_format("json") == ReportFormat::json);
    CHECK(parse_report_format("text") == ReportFormat::text);
    CHECK_FALSE(parse_report_format("yaml"));
}

TEST_CASE("quotient document flags violations") {
    const auto entries = load_nfr_table(R"({"profiles": [
        {"industry": "a", "nfr": {"availability": "L", "business_continuity": "L", "security": "L",
                                  "compliance": "L", "performance": "L"}, "delta_w": 5},
        {"industry": "b", "nfr": {"availability": "H", "business_continuity": "H", "security": "H",
                                  "compliance": "H", "performance": "H"}, "delta_w": 9}]})");
    const auto j = nlohmann::json::parse(save_quotients(entries));
    CHECK(j["quotients"][0]["complexity_quotient"] == 5);
    CHECK(j["quotients"][1]["complexity_quotient"] == 15);
    CHECK(j["consistent"] == false);
    CHECK(j["violations"].size() == 1);
}

TEST_CASE("atomic writes") {
    const auto dir = std::filesystem::temp_directory_path() / "clic_io_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "out.json";
    write_file_atomic(file, "first");
    write_file_atomic(file, "second");
    CHECK(read_file(file) == "second");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
    CHECK(entries == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("reading a missing file is an io error") {
    try {
        (void)read_file("/nonexistent/clic.json");
        FAIL("expected io error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::io);
    }
}
