#pragma once

// End-to-end estimate: demarcate the CLIC, split the remaining workloads into
// Q1/Q3/Q4, apply each industry grouping's delta_w, compute H per window and
// feed it to the effort model. The report is self-describing: every number in
// it can be recomputed from its inputs plus the constants it records.

#include "clic/calibrate.hpp"
#include "clic/complexity.hpp"
#include "clic/effort.hpp"
#include "clic/model.hpp"
#include "clic/partition.hpp"
#include "clic/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clic {

inline constexpr int kInternalHDigits = 4;

struct ReportWindow {
    std::string label;
    QuadrantCounts counts;
    double h = 0.0;           // kInternalHDigits decimals
    double h_presented = 0.0; // presented_h_digits decimals
    QuadrantValues terms;     // kInternalHDigits decimals
    double relative_cost = 0.0;
    double effort_pm = 0.0; // effort_digits decimals

    bool operator==(const ReportWindow&) const = default;
};

struct ReportGroup {
    std::string industry;
    double delta_w = 0.0;
    double x = 1.0;
    std::vector<std::string> workload_ids;
    std::vector<ReportWindow> windows;
    std::string peak_window;
    double peak_effort_pm = 0.0;

    bool operator==(const ReportGroup&) const = default;
};

struct ReportPlacementWindow {
    std::string label;
    Quadrant quadrant = Quadrant::Q3;
    Quadrant derived_quadrant = Quadrant::Q3;
    bool pinned = false;
    std::vector<DeploymentOption> options;

    bool operator==(const ReportPlacementWindow&) const = default;
};

struct ReportPlacement {
    std::string workload_id;
    std::string name;
    std::string industry;
    std::vector<ReportPlacementWindow> windows;

    bool operator==(const ReportPlacement&) const = default;
};

struct ReportTotal {
    std::string label;
    QuadrantCounts counts;
    double relative_cost = 0.0;
    double effort_pm = 0.0;

    bool operator==(const ReportTotal&) const = default;
};

struct ReportProvider {
    double k = 0.0;
    double y = 1.0;
    std::map<std::string, double> x_by_group;

    bool operator==(const ReportProvider&) const = default;
};

struct ReportVariance {
    double observed_effort_pm = 0.0;
    double predicted_effort_pm = 0.0;
    double variance_pct = 0.0; // 2 decimals
    VarianceBasis basis = VarianceBasis::predicted;

    bool operator==(const ReportVariance&) const = default;
};

struct ReportConstants {
    QuadrantWeights weights;
    QuadrantValues multipliers;
    QuadrantValues asymptotes;
    std::map<std::string, double> delta_w;
    int h_digits = kInternalHDigits;
    int presented_h_digits = 2;
    int effort_digits = 1;
    HBasis effort_h_basis = HBasis::presented;
    VarianceBasis variance_basis = VarianceBasis::predicted;
    std::string rounding = "half_up";

    bool operator==(const ReportConstants&) const = default;
};

struct EvaluationReport {
    std::string portfolio_digest;
    std::vector<std::string> schedule;
    std::vector<ReportGroup> groups;
    std::vector<ReportPlacement> placements;
    std::vector<ReportTotal> totals;
    std::string peak_window;
    double peak_effort_pm = 0.0;
    ReportProvider provider;
    std::optional<ReportVariance> variance;
    std::vector<PlanWarning> warnings;
    ReportConstants constants;

    bool operator==(const EvaluationReport&) const = default;
};

struct EstimateOptions {
    EvaluationSettings settings;
    std::optional<double> observed_effort;
};

/// Runs the whole methodology. Errors escape tagged with the stage that
/// raised them (validate, partition, complexity, effort).
EvaluationReport estimate_pipeline(const Portfolio& portfolio, const IndustryRegistry& registry,
                                   const ProviderProfile& provider, const EstimateOptions& options);

/// 64-bit FNV-1a over the canonical portfolio document, as 16 hex digits.
std::string portfolio_digest(const Portfolio& portfolio);

} // namespace clic
