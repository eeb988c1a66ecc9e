#pragma once

#include "clic/complexity.hpp"
#include "clic/effort.hpp"
#include "clic/model.hpp"
#include "clic/partition.hpp"

#include <span>
#include <string>
#include <vector>

namespace clic {

/// Workloads of one industry grouping, evaluated as a separate hybrid
/// environment with its own delta_w. Shares the parent's schedule and CLIC.
struct IndustryGroup {
    std::string industry; // canonical key
    Portfolio portfolio;
};

/// Groups in order of first appearance. Every workload lands in exactly one.
std::vector<IndustryGroup> group_by_industry(const Portfolio& portfolio);

/// The group's explicit delta_w override if any workload carries one,
/// otherwise the registry entry.
double group_delta_w(const IndustryGroup& group, const IndustryRegistry& registry);

struct Move {
    std::string workload_id;
    std::string window_label;
    Quadrant target_quadrant = Quadrant::Q3;

    bool operator==(const Move&) const = default;
};

struct MoveResult {
    Portfolio portfolio;
    Quadrant from = Quadrant::Q3;
    bool crossed_clic = false;
    std::vector<PlanWarning> warnings;
};

/// Pins the workload's override for the window to the target quadrant on a
/// copy of the portfolio. Throws ErrorKind::reference for an unknown workload
/// or window.
MoveResult apply_move(const Portfolio& portfolio, const Move& move);

struct WindowOutcome {
    std::string label;
    QuadrantCounts counts;
    double h = 0.0;
    QuadrantValues terms;
    double relative_cost = 0.0;
    double effort_pm = 0.0;

    bool operator==(const WindowOutcome&) const = default;
};

struct GroupOutcome {
    std::string industry;
    double delta_w = 0.0;
    double x = 1.0;
    std::vector<std::string> workload_ids;
    std::vector<WindowOutcome> windows;
    std::string peak_window;
    double peak_effort_pm = 0.0;

    bool operator==(const GroupOutcome&) const = default;
};

struct WindowTotal {
    std::string label;
    QuadrantCounts counts;
    double relative_cost = 0.0;
    double effort_pm = 0.0; // sum over groups

    bool operator==(const WindowTotal&) const = default;
};

struct ScenarioState {
    std::vector<GroupOutcome> groups;
    std::vector<WindowTotal> totals; // schedule order
    std::string peak_window;
    double peak_effort_pm = 0.0;
    PlacementPlan plan; // whole portfolio

    bool operator==(const ScenarioState&) const = default;
};

struct EvaluationSettings {
    EngagementFactors engagement;
    EffortConventions conventions;
    QuadrantWeights weights;
};

/// Full evaluation: partition, grouping, complexity per group and window,
/// effort per group and window. Never mixes H across industry groups.
ScenarioState evaluate_scenario(const Portfolio& portfolio, const IndustryRegistry& registry,
                                const ProviderProfile& provider, const EvaluationSettings& settings);

struct MoveOutcome {
    Move move;
    Quadrant from = Quadrant::Q3;
    bool crossed_clic = false;
};

struct WindowDelta {
    std::string label;
    double h = 0.0;
    double effort_pm = 0.0;
};

struct GroupDelta {
    std::string industry;
    std::vector<WindowDelta> windows;
    double peak_effort_pm = 0.0;
};

struct WhatIfDelta {
    ScenarioState before;
    ScenarioState after;
    Portfolio mutated;
    std::vector<MoveOutcome> moves;
    std::vector<GroupDelta> groups; // after - before
    std::vector<WindowDelta> totals;
    double peak_effort_pm = 0.0;
    std::vector<PlanWarning> warnings;
};

/// Applies the moves in order (last wins per workload and window) and
/// re-evaluates the mutated portfolio from scratch.
WhatIfDelta what_if(const Portfolio& portfolio, const IndustryRegistry& registry,
                    const ProviderProfile& provider, const EvaluationSettings& settings,
                    std::span<const Move> moves);

} // namespace clic
