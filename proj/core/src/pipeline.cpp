#include "clic/pipeline.hpp"

#include "clic/io.hpp"

#include <cmath>
#include <cstdio>

namespace clic {

std::string portfolio_digest(const Portfolio& portfolio) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : save_portfolio(portfolio)) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

QuadrantValues rounded(const QuadrantValues& v, int digits) {
    QuadrantValues out;
    for (Quadrant q : kAllQuadrants) out.at(q) = round_half_up(v.at(q), digits);
    return out;
}

} // namespace

EvaluationReport estimate_pipeline(const Portfolio& portfolio, const IndustryRegistry& registry,
                                   const ProviderProfile& provider, const EstimateOptions& options) {
    const auto& settings = options.settings;
    const auto& conv = settings.conventions;

    run_stage("validate", [&] {
        throw_if_errors(validate_portfolio(portfolio, registry), "portfolio");
        throw_if_errors(validate_provider(provider), "provider profile");
        const double y = settings.engagement.y;
        if (!(std::isfinite(y) && y > 0.0 && y <= 1.0))
            throw Error(ErrorKind::domain, "y must lie in (0,1]", "/y");
        if (options.observed_effort &&
            !(std::isfinite(*options.observed_effort) && *options.observed_effort >= 0.0))
            throw Error(ErrorKind::domain, "observed effort must be >= 0", "/observed_effort");
    });

    const ScenarioState state = evaluate_scenario(portfolio, registry, provider, settings);

    EvaluationReport report;
    report.portfolio_digest = portfolio_digest(portfolio);
    report.schedule = portfolio.schedule;

    for (const auto& g : state.groups) {
        ReportGroup rg;
        rg.industry = g.industry;
        rg.delta_w = g.delta_w;
        rg.x = g.x;
        rg.workload_ids = g.workload_ids;
        for (const auto& w : g.windows) {
            ReportWindow rw;
            rw.label = w.label;
            rw.counts = w.counts;
            rw.h = round_half_up(w.h, kInternalHDigits);
            rw.h_presented = round_half_up(w.h, conv.presented_h_digits);
            rw.terms = rounded(w.terms, kInternalHDigits);
            rw.relative_cost = w.relative_cost;
            rw.effort_pm = round_half_up(w.effort_pm, conv.effort_digits);
            rg.windows.push_back(std::move(rw));
        }
        rg.peak_window = g.peak_window;
        rg.peak_effort_pm = round_half_up(g.peak_effort_pm, conv.effort_digits);
        report.provider.x_by_group[g.industry] = g.x;
        report.constants.delta_w[g.industry] = g.delta_w;
        report.groups.push_back(std::move(rg));
    }

    for (std::size_t i = 0; i < portfolio.workloads.size(); ++i) {
        const auto& w = portfolio.workloads[i];
        ReportPlacement rp;
        rp.workload_id = w.id;
        rp.name = w.name;
        rp.industry = canonical_industry(w.industry);
        for (const auto& wp : state.plan.windows) {
            const auto& p = wp.placements[i];
            rp.windows.push_back({wp.label, p.quadrant, p.derived_quadrant, p.pinned, p.options});
        }
        report.placements.push_back(std::move(rp));
    }

    for (const auto& t : state.totals)
        report.totals.push_back(
            {t.label, t.counts, t.relative_cost, round_half_up(t.effort_pm, conv.effort_digits)});
    report.peak_window = state.peak_window;
    report.peak_effort_pm = round_half_up(state.peak_effort_pm, conv.effort_digits);

    report.provider.k = provider.k;
    report.provider.y = settings.engagement.y;

    if (options.observed_effort) {
        ReportVariance v;
        v.observed_effort_pm = *options.observed_effort;
        v.predicted_effort_pm = report.peak_effort_pm;
        v.basis = conv.variance_basis;
        v.variance_pct = run_stage("effort", [&] {
            return round_half_up(variance_pct(v.predicted_effort_pm, v.observed_effort_pm, v.basis), 2);
        });
        report.variance = v;
    }

    report.warnings = state.plan.warnings;

    auto& c = report.constants;
    c.weights = settings.weights;
    c.multipliers = term_multipliers(settings.weights);
    c.asymptotes = term_asymptotes(settings.weights);
    c.h_digits = kInternalHDigits;
    c.presented_h_digits = conv.presented_h_digits;
    c.effort_digits = conv.effort_digits;
    c.effort_h_basis = conv.h_basis;
    c.variance_basis = conv.variance_basis;
    return report;
}

} // namespace clic
