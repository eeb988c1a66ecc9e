#include "clic/scenario.hpp"

#include <algorithm>
#include <map>

namespace clic {

std::vector<IndustryGroup> group_by_industry(const Portfolio& portfolio) {
    std::vector<IndustryGroup> groups;
    std::map<std::string, std::size_t> index;
    for (const auto& w : portfolio.workloads) {
        const std::string key = canonical_industry(w.industry);
        auto [it, inserted] = index.emplace(key, groups.size());
        if (inserted) {
            IndustryGroup g;
            g.industry = key;
            g.portfolio.schedule = portfolio.schedule;
            g.portfolio.clic = portfolio.clic;
            g.portfolio.workloads.clear();
            groups.push_back(std::move(g));
        }
        groups[it->second].portfolio.workloads.push_back(w);
    }
    return groups;
}

double group_delta_w(const IndustryGroup& group, const IndustryRegistry& registry) {
    for (const auto& w : group.portfolio.workloads)
        if (w.delta_w) return *w.delta_w;
    return registry.delta_w(group.industry);
}

MoveResult apply_move(const Portfolio& portfolio, const Move& move) {
    const auto ws = std::find_if(portfolio.workloads.begin(), portfolio.workloads.end(),
                                 [&](const Workload& w) { return w.id == move.workload_id; });
    if (ws == portfolio.workloads.end())
        throw Error(ErrorKind::reference, "unknown workload \"" + move.workload_id + "\"",
                    "/moves/workload_id");
    if (std::find(portfolio.schedule.begin(), portfolio.schedule.end(), move.window_label) ==
        portfolio.schedule.end())
        throw Error(ErrorKind::reference, "unknown window \"" + move.window_label + "\"",
                    "/moves/window_label");

    MoveResult result;
    result.portfolio = portfolio;
    auto& workload = result.portfolio.workloads[static_cast<std::size_t>(ws - portfolio.workloads.begin())];
    result.from = place_workload(workload, move.window_label, portfolio.clic).quadrant;
    result.crossed_clic = crosses_clic(result.from, move.target_quadrant);

    auto it = std::find_if(workload.overrides.begin(), workload.overrides.end(),
                           [&](const DemandOverride& o) { return o.window_label == move.window_label; });
    if (it == workload.overrides.end()) {
        workload.overrides.push_back({move.window_label, workload.isolation_demand,
                                      workload.control_demand, move.target_quadrant});
    } else {
        it->pinned_quadrant = move.target_quadrant;
    }

    if (result.crossed_clic)
        result.warnings.push_back({"crosses_clic", move.workload_id, move.window_label,
                                   "moving \"" + move.workload_id + "\" from " +
                                       std::string(to_string(result.from)) + " to " +
                                       std::string(to_string(move.target_quadrant)) +
                                       " in \"" + move.window_label + "\" crosses the CLIC"});
    return result;
}

namespace {

void pick_peak(const std::vector<WindowOutcome>& windows, std::string& label, double& effort) {
    effort = 0.0;
    label.clear();
    for (const auto& w : windows)
        if (label.empty() || w.effort_pm > effort) {
            label = w.label;
            effort = w.effort_pm;
        }
}

} // namespace

ScenarioState evaluate_scenario(const Portfolio& portfolio, const IndustryRegistry& registry,
                                const ProviderProfile& provider, const EvaluationSettings& settings) {
    run_stage("validate", [&] {
        throw_if_errors(validate_portfolio(portfolio, registry), "portfolio");
        throw_if_errors(validate_provider(provider), "provider profile");
    });
    ScenarioState state;
    state.plan = run_stage("partition", [&] { return build_plan(portfolio, registry); });

    for (const auto& window : state.plan.windows) {
        WindowTotal total;
        total.label = window.label;
        total.counts = window.counts;
        total.relative_cost = relative_cost(window.counts, settings.weights);
        state.totals.push_back(std::move(total));
    }

    for (const auto& group : group_by_industry(portfolio)) {
        GroupOutcome outcome;
        outcome.industry = group.industry;
        outcome.delta_w = run_stage("complexity", [&] { return group_delta_w(group, registry); });
        outcome.x = provider.x_for(group.industry);
        for (const auto& w : group.portfolio.workloads) outcome.workload_ids.push_back(w.id);

        const PlacementPlan group_plan =
            run_stage("partition", [&] { return build_plan(group.portfolio, registry); });
        const ComplexityReport complexity = run_stage("complexity", [&] {
            return hybrid_complexity_timeline(group_plan, outcome.delta_w, group.industry,
                                              settings.weights);
        });

        for (std::size_t t = 0; t < complexity.windows.size(); ++t) {
            const auto& wc = complexity.windows[t];
            WindowOutcome wo;
            wo.label = wc.label;
            wo.counts = wc.counts;
            wo.h = wc.h;
            wo.terms = wc.terms;
            wo.relative_cost = relative_cost(wc.counts, settings.weights);
            wo.effort_pm = run_stage("effort", [&] {
                return predict_effort(settings.conventions.effort_input_h(wc.h), provider.k,
                                      outcome.x, settings.engagement.y);
            });
            state.totals[t].effort_pm += wo.effort_pm;
            outcome.windows.push_back(std::move(wo));
        }
        pick_peak(outcome.windows, outcome.peak_window, outcome.peak_effort_pm);
        state.groups.push_back(std::move(outcome));
    }

    state.peak_effort_pm = 0.0;
    for (const auto& t : state.totals)
        if (state.peak_window.empty() || t.effort_pm > state.peak_effort_pm) {
            state.peak_window = t.label;
            state.peak_effort_pm = t.effort_pm;
        }
    return state;
}

WhatIfDelta what_if(const Portfolio& portfolio, const IndustryRegistry& registry,
                    const ProviderProfile& provider, const EvaluationSettings& settings,
                    std::span<const Move> moves) {
    WhatIfDelta delta;
    delta.before = evaluate_scenario(portfolio, registry, provider, settings);

    delta.mutated = portfolio;
    for (const auto& move : moves) {
        MoveResult r = apply_move(delta.mutated, move);
        delta.moves.push_back({move, r.from, r.crossed_clic});
        delta.warnings.insert(delta.warnings.end(), r.warnings.begin(), r.warnings.end());
        delta.mutated = std::move(r.portfolio);
    }

    delta.after = evaluate_scenario(delta.mutated, registry, provider, settings);
    delta.warnings.insert(delta.warnings.end(), delta.after.plan.warnings.begin(),
                          delta.after.plan.warnings.end());

    for (std::size_t g = 0; g < delta.after.groups.size(); ++g) {
        const auto& b = delta.before.groups[g];
        const auto& a = delta.after.groups[g];
        GroupDelta gd;
        gd.industry = a.industry;
        for (std::size_t t = 0; t < a.windows.size(); ++t)
            gd.windows.push_back({a.windows[t].label, a.windows[t].h - b.windows[t].h,
                                  a.windows[t].effort_pm - b.windows[t].effort_pm});
        gd.peak_effort_pm = a.peak_effort_pm - b.peak_effort_pm;
        delta.groups.push_back(std::move(gd));
    }
    for (std::size_t t = 0; t < delta.after.totals.size(); ++t)
        delta.totals.push_back({delta.after.totals[t].label, 0.0,
                                delta.after.totals[t].effort_pm - delta.before.totals[t].effort_pm});
    delta.peak_effort_pm = delta.after.peak_effort_pm - delta.before.peak_effort_pm;
    return delta;
}

} // namespace clic
