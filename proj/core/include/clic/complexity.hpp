#pragma once

// Hybrid complexity H of a quadrant distribution. Each quadrant contributes a
// saturating term W / (m*W + delta_w) whose multiplier m = total/weight makes
// the term tend to weight/total: 0.2 (Q1), 0.5 (Q2), 0.1 (Q3), 0.2 (Q4).

#include "clic/model.hpp"
#include "clic/partition.hpp"

#include <string>
#include <vector>

namespace clic {

/// Value per quadrant, used for term contributions, multipliers and asymptotes.
struct QuadrantValues {
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
    double q4 = 0.0;

    double at(Quadrant q) const noexcept;
    double& at(Quadrant q) noexcept;
    double sum() const noexcept { return q2 + q1 + q3 + q4; }

    bool operator==(const QuadrantValues&) const = default;
};

/// Term multipliers total/weight_i; (5, 2, 10, 5) for the default weights.
QuadrantValues term_multipliers(const QuadrantWeights& weights = {});

/// Limit of each term as its count grows; (0.2, 0.5, 0.1, 0.2) by default.
QuadrantValues term_asymptotes(const QuadrantWeights& weights = {});

/// Per-quadrant contributions to H. A zero count contributes exactly 0.
/// Throws ErrorKind::domain for delta_w <= 0 or a negative count.
QuadrantValues complexity_terms(const QuadrantCounts& counts, double delta_w,
                                const QuadrantWeights& weights = {});

double hybrid_complexity(const QuadrantCounts& counts, double delta_w,
                         const QuadrantWeights& weights = {});

struct WindowComplexity {
    std::string label;
    QuadrantCounts counts;
    double h = 0.0;
    QuadrantValues terms;

    bool operator==(const WindowComplexity&) const = default;
};

struct ComplexityReport {
    std::string industry;
    double delta_w = 0.0;
    std::vector<WindowComplexity> windows; // schedule order

    bool operator==(const ComplexityReport&) const = default;
};

/// H for every window of a plan. The plan is expected to cover a single
/// industry group; mixed portfolios are split first (see scenario.hpp).
ComplexityReport hybrid_complexity_timeline(const PlacementPlan& plan, double delta_w,
                                            std::string industry = {},
                                            const QuadrantWeights& weights = {});

} // namespace clic
