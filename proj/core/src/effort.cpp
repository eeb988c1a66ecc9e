#include "clic/effort.hpp"

#include "clic/errors.hpp"
#include "clic/model.hpp"

#include <cmath>
#include <string>

namespace clic {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorKind::domain, message);
}

} // namespace

EffortEstimate estimate_effort(double h, double k, double x, double y) {
    require(std::isfinite(h) && h >= 0.0 && h <= 1.0, "h must lie in [0,1]");
    require(std::isfinite(k) && k > 0.0, "k must be positive");
    require(std::isfinite(x) && x > 0.0 && x <= 1.0, "x must lie in (0,1]");
    require(std::isfinite(y) && y > 0.0 && y <= 1.0, "y must lie in (0,1]");
    return {h, k, x, y, h * k * x / y};
}

double predict_effort(double h, double k, double x, double y) {
    return estimate_effort(h, k, x, y).effort_pm;
}

std::string_view to_string(VarianceBasis basis) noexcept {
    return basis == VarianceBasis::predicted ? "predicted" : "observed";
}

double variance_pct(double predicted, double observed, VarianceBasis basis) {
    require(std::isfinite(predicted) && predicted >= 0.0, "predicted effort must be >= 0");
    require(std::isfinite(observed) && observed >= 0.0, "observed effort must be >= 0");
    const double denom = basis == VarianceBasis::predicted ? predicted : observed;
    const double deviation = std::abs(predicted - observed);
    if (denom == 0.0) {
        if (deviation == 0.0) return 0.0;
        throw Error(ErrorKind::undefined_variance,
                    std::string("variance undefined: ") + std::string(to_string(basis)) +
                        " effort is zero");
    }
    return 100.0 * deviation / denom;
}

std::string_view to_string(HBasis basis) noexcept {
    return basis == HBasis::presented ? "presented" : "exact";
}

double EffortConventions::effort_input_h(double h) const noexcept {
    return h_basis == HBasis::presented ? round_half_up(h, presented_h_digits) : h;
}

} // namespace clic
