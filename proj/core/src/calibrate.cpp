#include "clic/calibrate.hpp"

#include "clic/complexity.hpp"

#include <cmath>

namespace clic {

double record_complexity(const DeploymentRecord& record, const IndustryRegistry& registry) {
    throw_if_errors(validate_record(record), "deployment record");
    if (record.h) return *record.h;
    const double delta = record.delta_w ? *record.delta_w : registry.delta_w(record.industry);
    return hybrid_complexity(*record.counts, delta);
}

double infer_k(const DeploymentRecord& record, const IndustryRegistry& registry) {
    const double h = record_complexity(record, registry);
    if (h == 0.0)
        throw Error(ErrorKind::not_calibratable, "record has zero hybrid complexity; K undefined");
    if (record.observed_effort <= 0.0)
        throw Error(ErrorKind::not_calibratable, "record has no observed effort; K undefined");
    return (record.observed_effort / h) * (record.y / record.x);
}

void accumulate_k(KCalibration& calibration, double k) {
    calibration.k_values.push_back(k);
    ++calibration.count;
    calibration.cma += (k - calibration.cma) / static_cast<double>(calibration.count);
    calibration.cma_history.push_back(calibration.cma);
}

KCalibration aggregate_k(std::span<const DeploymentRecord> records, const IndustryRegistry& registry) {
    if (records.empty()) throw Error(ErrorKind::empty_dataset, "no deployment records to calibrate K");
    KCalibration out;
    out.k_values.reserve(records.size());
    out.cma_history.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        try {
            accumulate_k(out, infer_k(records[i], registry));
        } catch (const Error& e) {
            throw Error(e.kind(), "record " + std::to_string(i) + ": " + e.what(),
                        "/records/" + std::to_string(i) + e.path());
        }
    }
    return out;
}

double normalize_effort(double observed, double custom_effort, double x) {
    if (!(std::isfinite(custom_effort) && custom_effort >= 0.0))
        throw Error(ErrorKind::domain, "custom effort must be >= 0");
    if (!(std::isfinite(observed) && observed >= custom_effort))
        throw Error(ErrorKind::domain, "custom effort exceeds observed effort");
    if (!(std::isfinite(x) && x > 0.0 && x <= 1.0))
        throw Error(ErrorKind::domain, "x must lie in (0,1]");
    return (observed - custom_effort) / x;
}

namespace {

// A gap landing on tau up to rounding noise is not flat.
constexpr double kGapSlack = 1e-9;

bool gap_is_flat(double current, double next, double tau) {
    if (current == 0.0) return next <= 0.0;
    return next / current - 1.0 < tau - kGapSlack;
}

} // namespace

double estimate_delta_w(const EffortCurve& curve, const PlateauParams& params) {
    if (!(params.tau > 0.0 && params.tau < 1.0))
        throw Error(ErrorKind::domain, "tau must lie in (0,1)");
    if (params.min_tail < 1) throw Error(ErrorKind::domain, "min_tail must be at least 1");
    if (curve.points.size() < 4)
        throw Error(ErrorKind::domain, "plateau estimation needs at least 4 curve points");
    throw_if_errors(validate_curve(curve), "effort curve");

    const auto& pts = curve.points;
    std::size_t run = 0; // flat gaps seen consecutively, scanning from the end
    std::optional<std::size_t> best;
    // Walk backwards so each start index knows the length of the flat run that
    // follows it; the smallest qualifying index wins.
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        run = gap_is_flat(pts[i].normalized_effort, pts[i + 1].normalized_effort, params.tau) ? run + 1
                                                                                              : 0;
        if (run >= params.min_tail) best = i;
    }
    if (!best)
        throw Error(ErrorKind::no_plateau,
                    "no plateau within the curve for tau=" + std::to_string(params.tau) +
                        ", min_tail=" + std::to_string(params.min_tail) +
                        "; extend the data or supply delta_w manually");
    return static_cast<double>(pts[*best].workload_count);
}

int complexity_quotient(const NfrProfile& nfr) {
    return weight(nfr.availability) + weight(nfr.business_continuity) + weight(nfr.security) +
           weight(nfr.compliance) + weight(nfr.performance);
}

std::vector<QuotientViolation> check_quotient_delta_consistency(std::span<const QuotientEntry> table) {
    std::vector<QuotientViolation> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            const auto* hi = &table[i];
            const auto* lo = &table[j];
            if (hi->quotient == lo->quotient) continue;
            if (hi->quotient < lo->quotient) std::swap(hi, lo);
            if (hi->delta_w <= lo->delta_w) continue;
            out.push_back({*hi, *lo,
                           hi->industry + " has quotient " + std::to_string(hi->quotient) + " > " +
                               std::to_string(lo->quotient) + " (" + lo->industry +
                               ") but a larger delta_w"});
        }
    }
    return out;
}

} // namespace clic
