#include "clic/complexity.hpp"

#include <cmath>

namespace clic {

double QuadrantValues::at(Quadrant q) const noexcept {
    return const_cast<QuadrantValues*>(this)->at(q);
}

double& QuadrantValues::at(Quadrant q) noexcept {
    switch (q) {
    case Quadrant::Q1: return q1;
    case Quadrant::Q2: return q2;
    case Quadrant::Q3: return q3;
    case Quadrant::Q4: return q4;
    }
    return q3;
}

namespace {

void check_weights(const QuadrantWeights& weights) {
    for (Quadrant q : kAllQuadrants)
        if (!(std::isfinite(weights.at(q)) && weights.at(q) > 0.0))
            throw Error(ErrorKind::domain, "quadrant weight for " + std::string(to_string(q)) +
                                               " must be positive");
}

} // namespace

QuadrantValues term_multipliers(const QuadrantWeights& weights) {
    check_weights(weights);
    QuadrantValues m;
    for (Quadrant q : kAllQuadrants) m.at(q) = weights.total() / weights.at(q);
    return m;
}

QuadrantValues term_asymptotes(const QuadrantWeights& weights) {
    check_weights(weights);
    QuadrantValues a;
    for (Quadrant q : kAllQuadrants) a.at(q) = weights.at(q) / weights.total();
    return a;
}

QuadrantValues complexity_terms(const QuadrantCounts& counts, double delta_w,
                                const QuadrantWeights& weights) {
    if (!(std::isfinite(delta_w) && delta_w > 0.0))
        throw Error(ErrorKind::domain, "delta_w must be positive, got " + std::to_string(delta_w));
    const QuadrantValues m = term_multipliers(weights);
    QuadrantValues terms;
    for (Quadrant q : kAllQuadrants) {
        const std::int64_t n = counts.at(q);
        if (n < 0)
            throw Error(ErrorKind::domain,
                        "count for " + std::string(to_string(q)) + " must be non-negative");
        if (n == 0) continue;
        const double w = static_cast<double>(n);
        terms.at(q) = w / (m.at(q) * w + delta_w);
    }
    return terms;
}

double hybrid_complexity(const QuadrantCounts& counts, double delta_w, const QuadrantWeights& weights) {
    return complexity_terms(counts, delta_w, weights).sum();
}

ComplexityReport hybrid_complexity_timeline(const PlacementPlan& plan, double delta_w,
                                            std::string industry, const QuadrantWeights& weights) {
    if (plan.windows.empty()) throw Error(ErrorKind::domain, "plan has no windows");
    ComplexityReport report;
    report.industry = std::move(industry);
    report.delta_w = delta_w;
    report.windows.reserve(plan.windows.size());
    for (const auto& window : plan.windows) {
        WindowComplexity wc;
        wc.label = window.label;
        wc.counts = window.counts;
        wc.terms = complexity_terms(window.counts, delta_w, weights);
        wc.h = wc.terms.sum();
        report.windows.push_back(std::move(wc));
    }
    return report;
}

} // namespace clic
