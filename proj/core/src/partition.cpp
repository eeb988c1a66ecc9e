#include "clic/partition.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace clic {

namespace {

constexpr std::array<OptionInfo, 8> kCatalog{{
    {DeploymentOption::PUBLIC_SHARED_VM, Quadrant::Q3, "PUBLIC_SHARED_VM",
     "Public virtual instances on one or more multi-tenant public clouds"},
    {DeploymentOption::PUBLIC_DEDICATED_VM, Quadrant::Q4, "PUBLIC_DEDICATED_VM",
     "Private (single-tenant) virtual machines on a public cloud"},
    {DeploymentOption::HOSTED_PRIVATE_OFFPREM, Quadrant::Q1, "HOSTED_PRIVATE_OFFPREM",
     "Hosted private cloud in the provider's data center"},
    {DeploymentOption::HOSTED_PRIVATE_ONPREM, Quadrant::Q1, "HOSTED_PRIVATE_ONPREM",
     "Hosted private cloud operated by a provider inside the client's data center"},
    {DeploymentOption::HOSTED_PRIVATE_COLO, Quadrant::Q1, "HOSTED_PRIVATE_COLO",
     "Hosted private cloud in a co-location facility"},
    {DeploymentOption::ONPREM_PRIVATE_CLOUD, Quadrant::Q2, "ONPREM_PRIVATE_CLOUD",
     "On-premise private cloud owned and operated by the client"},
    {DeploymentOption::TRADITIONAL_IT, Quadrant::Q2, "TRADITIONAL_IT",
     "Traditional non-cloud IT hosting"},
    {DeploymentOption::BAREMETAL_ON_PUBLIC, Quadrant::Q2, "BAREMETAL_ON_PUBLIC",
     "Single-tenant bare metal servers on demand in a public cloud"},
}};

void check_demand(double value, const char* what) {
    if (!(std::isfinite(value) && value >= 0.0 && value <= 1.0))
        throw Error(ErrorKind::range,
                    std::string(what) + " " + std::to_string(value) + " outside [0,1]");
}

// Position used to break weight ties in cheapest_feasible_quadrant.
constexpr int tie_rank(Quadrant q) noexcept {
    switch (q) {
    case Quadrant::Q3: return 0;
    case Quadrant::Q4: return 1;
    case Quadrant::Q1: return 2;
    case Quadrant::Q2: return 3;
    }
    return 4;
}

} // namespace

std::span<const OptionInfo> option_catalog() noexcept { return kCatalog; }

const OptionInfo& describe(DeploymentOption option) noexcept {
    return kCatalog[static_cast<std::size_t>(option)];
}

std::string_view to_string(DeploymentOption option) noexcept { return describe(option).tag; }

Quadrant assign_quadrant(double isolation_demand, double control_demand, const ClicConfig& clic) {
    check_demand(isolation_demand, "isolation_demand");
    check_demand(control_demand, "control_demand");
    const bool high_iso = isolation_demand >= clic.isolation_threshold;
    const bool high_ctl = control_demand >= clic.control_threshold;
    if (high_iso && high_ctl) return Quadrant::Q2;
    if (high_ctl) return Quadrant::Q1;
    if (high_iso) return Quadrant::Q4;
    return Quadrant::Q3;
}

std::vector<DeploymentOption> recommend_options(Quadrant quadrant) {
    std::vector<DeploymentOption> out;
    for (const auto& info : kCatalog)
        if (info.quadrant == quadrant) out.push_back(info.option);
    return out;
}

double relative_cost(const QuadrantCounts& counts, const QuadrantWeights& weights) {
    double cost = 0.0;
    for (Quadrant q : kAllQuadrants) cost += weights.at(q) * static_cast<double>(counts.at(q));
    return cost;
}

Quadrant cheapest_feasible_quadrant(double isolation_demand, double control_demand,
                                    const ClicConfig& clic, const QuadrantWeights& weights) {
    check_demand(isolation_demand, "isolation_demand");
    check_demand(control_demand, "control_demand");
    const bool need_iso = isolation_demand >= clic.isolation_threshold;
    const bool need_ctl = control_demand >= clic.control_threshold;

    // Q2 provides both and is always feasible.
    Quadrant best = Quadrant::Q2;
    for (Quadrant q : kAllQuadrants) {
        if (need_iso && !provides_high_isolation(q)) continue;
        if (need_ctl && !provides_high_control(q)) continue;
        const double w = weights.at(q);
        const double bw = weights.at(best);
        if (w < bw || (w == bw && tie_rank(q) < tie_rank(best))) best = q;
    }
    return best;
}

const Placement* WindowPlan::find(std::string_view workload_id) const noexcept {
    for (const auto& p : placements)
        if (p.workload_id == workload_id) return &p;
    return nullptr;
}

const WindowPlan* PlacementPlan::window(std::string_view label) const noexcept {
    for (const auto& w : windows)
        if (w.label == label) return &w;
    return nullptr;
}

Placement place_workload(const Workload& workload, std::string_view window, const ClicConfig& clic) {
    double iso = workload.isolation_demand;
    double ctl = workload.control_demand;
    std::optional<Quadrant> pin = workload.pinned_quadrant;
    if (const auto* o = workload.override_for(window)) {
        iso = o->isolation_demand;
        ctl = o->control_demand;
        if (o->pinned_quadrant) pin = o->pinned_quadrant;
    }

    Placement p;
    p.workload_id = workload.id;
    p.derived_quadrant = assign_quadrant(iso, ctl, clic);
    p.pinned = pin.has_value();
    p.quadrant = pin.value_or(p.derived_quadrant);
    p.options = recommend_options(p.quadrant);
    return p;
}

PlacementPlan build_plan(const Portfolio& portfolio, const IndustryRegistry& registry) {
    throw_if_errors(validate_portfolio(portfolio, registry), "portfolio");

    PlacementPlan plan;
    plan.windows.reserve(portfolio.schedule.size());
    for (const auto& label : portfolio.schedule) {
        WindowPlan wp;
        wp.label = label;
        wp.placements.reserve(portfolio.workloads.size());
        for (const auto& w : portfolio.workloads) {
            Placement p = place_workload(w, label, portfolio.clic);
            ++wp.counts.at(p.quadrant);
            // Window-level pins are what-if moves; only a standing pin on the
            // workload is worth flagging.
            const auto* o = w.override_for(label);
            const bool window_pin = o && o->pinned_quadrant;
            if (p.pinned && !window_pin && p.quadrant != p.derived_quadrant)
                plan.warnings.push_back(
                    {"pin_contradicts_demands", w.id, label,
                     "workload \"" + w.id + "\" pinned to " + std::string(to_string(p.quadrant)) +
                         " but its demands place it in " +
                         std::string(to_string(p.derived_quadrant))});
            wp.placements.push_back(std::move(p));
        }
        plan.windows.push_back(std::move(wp));
    }

    for (std::size_t i = 0; i < portfolio.workloads.size(); ++i) {
        const auto& id = portfolio.workloads[i].id;
        for (std::size_t t = 1; t < plan.windows.size(); ++t) {
            const Quadrant from = plan.windows[t - 1].placements[i].quadrant;
            const Quadrant to = plan.windows[t].placements[i].quadrant;
            if (crosses_clic(from, to))
                plan.warnings.push_back(
                    {"crosses_clic", id, plan.windows[t].label,
                     "workload \"" + id + "\" crosses the CLIC between \"" +
                         plan.windows[t - 1].label + "\" (" + std::string(to_string(from)) +
                         ") and \"" + plan.windows[t].label + "\" (" +
                         std::string(to_string(to)) + ")"});
        }
    }
    return plan;
}

} // namespace clic
