#pragma once

// Calibration of the empirical constants from historical deployments:
// the provider constant K, the per-industry CLIC constant delta_w read off an
// effort curve, effort normalization and the NFR complexity quotient.

#include "clic/model.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace clic {

/// H of a record: the supplied value, or hybrid_complexity of its counts with
/// the record's delta_w override or the registry entry.
double record_complexity(const DeploymentRecord& record, const IndustryRegistry& registry);

/// K = (E / H) * (y / x). Throws not_calibratable for H = 0 or zero observed
/// effort, unknown_industry when counts cannot be resolved to a delta_w.
double infer_k(const DeploymentRecord& record, const IndustryRegistry& registry);

struct KCalibration {
    std::vector<double> k_values;    // input order
    std::vector<double> cma_history; // running average after each record
    double cma = 0.0;
    std::size_t count = 0;
};

/// Cumulative moving average of K. Throws empty_dataset for no records.
KCalibration aggregate_k(std::span<const DeploymentRecord> records, const IndustryRegistry& registry);

/// Folds one more K observation into an existing calibration.
void accumulate_k(KCalibration& calibration, double k);

/// (observed - custom) / x.
double normalize_effort(double observed, double custom_effort, double x);

struct PlateauParams {
    double tau = 0.05;
    std::size_t min_tail = 2;
};

/// Smallest workload count W after which the next `min_tail` gaps each grow
/// the effort by less than `tau` relative: E_next / E_curr - 1 < tau.
/// Throws no_plateau when no point qualifies.
double estimate_delta_w(const EffortCurve& curve, const PlateauParams& params = {});

/// Sum of the five grade weights (L=1, M=2, H=3); always in [5,15].
int complexity_quotient(const NfrProfile& nfr);

struct QuotientEntry {
    std::string industry;
    int quotient = 0;
    double delta_w = 0.0;
};

/// Pair where a higher quotient does not come with a smaller-or-equal delta_w.
struct QuotientViolation {
    QuotientEntry higher; // larger quotient
    QuotientEntry lower;
    std::string message;
};

/// Empty iff delta_w is weakly antitone in the quotient across all pairs.
std::vector<QuotientViolation> check_quotient_delta_consistency(std::span<const QuotientEntry> table);

} // namespace clic
