#pragma once

#include "clic/model.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clic {

enum class DeploymentOption {
    PUBLIC_SHARED_VM,
    PUBLIC_DEDICATED_VM,
    HOSTED_PRIVATE_OFFPREM,
    HOSTED_PRIVATE_ONPREM,
    HOSTED_PRIVATE_COLO,
    ONPREM_PRIVATE_CLOUD,
    TRADITIONAL_IT,
    BAREMETAL_ON_PUBLIC,
};

struct OptionInfo {
    DeploymentOption option;
    Quadrant quadrant;
    std::string_view tag;
    std::string_view description;
};

/// All deployment options in catalog order.
std::span<const OptionInfo> option_catalog() noexcept;
const OptionInfo& describe(DeploymentOption option) noexcept;
std::string_view to_string(DeploymentOption option) noexcept;

/// Demands at or above a threshold count as "high". Throws ErrorKind::range
/// for demands outside [0,1].
Quadrant assign_quadrant(double isolation_demand, double control_demand, const ClicConfig& clic);

/// Deployment options for a quadrant, in catalog order.
std::vector<DeploymentOption> recommend_options(Quadrant quadrant);

/// Weighted sum of the counts; 2*w1 + 5*w2 + 1*w3 + 2*w4 with default weights.
double relative_cost(const QuadrantCounts& counts, const QuadrantWeights& weights = {});

/// Cheapest quadrant that provides at least the demanded isolation and
/// control. Weight ties resolve Q3, then Q4, then Q1, then Q2.
Quadrant cheapest_feasible_quadrant(double isolation_demand, double control_demand,
                                    const ClicConfig& clic, const QuadrantWeights& weights = {});

struct PlanWarning {
    std::string code;
    std::string workload_id;
    std::string window_label;
    std::string message;

    bool operator==(const PlanWarning&) const = default;
};

struct Placement {
    std::string workload_id;
    Quadrant quadrant = Quadrant::Q3;
    /// Quadrant implied by the demands alone, before any pin.
    Quadrant derived_quadrant = Quadrant::Q3;
    bool pinned = false;
    std::vector<DeploymentOption> options;

    bool operator==(const Placement&) const = default;
};

struct WindowPlan {
    std::string label;
    std::vector<Placement> placements; // portfolio order
    QuadrantCounts counts;

    const Placement* find(std::string_view workload_id) const noexcept;

    bool operator==(const WindowPlan&) const = default;
};

struct PlacementPlan {
    std::vector<WindowPlan> windows; // schedule order
    std::vector<PlanWarning> warnings;

    const WindowPlan* window(std::string_view label) const noexcept;

    bool operator==(const PlacementPlan&) const = default;
};

/// Resolves a single workload in one window: override demands and pins apply
/// when present. Does not validate.
Placement place_workload(const Workload& workload, std::string_view window, const ClicConfig& clic);

/// Places every workload in every window. Throws a validation error when the
/// portfolio does not validate against `registry`.
PlacementPlan build_plan(const Portfolio& portfolio, const IndustryRegistry& registry);

} // namespace clic
