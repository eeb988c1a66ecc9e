#pragma once

#include <string_view>

namespace clic {

/// Predicted effort in person-months: h * k * x / y.
struct EffortEstimate {
    double h = 0.0;
    double k = 0.0;
    double x = 1.0;
    double y = 1.0;
    double effort_pm = 0.0;
};

/// Throws ErrorKind::domain unless h in [0,1], k > 0, x and y in (0,1].
EffortEstimate estimate_effort(double h, double k, double x, double y);
double predict_effort(double h, double k, double x, double y);

/// Which value divides the absolute deviation in variance_pct.
enum class VarianceBasis { predicted, observed };

std::string_view to_string(VarianceBasis basis) noexcept;

/// 100 * |predicted - observed| / basis. A zero basis is only allowed when
/// both values are zero (variance 0); otherwise ErrorKind::undefined_variance.
double variance_pct(double predicted, double observed,
                    VarianceBasis basis = VarianceBasis::predicted);

/// Which rendering of H feeds the effort model.
///   presented  H rounded half-up to `presented_h_digits` decimals, the value
///              a planner reads off the report (0.29 -> 174 PM)
///   exact      full double precision
enum class HBasis { presented, exact };

std::string_view to_string(HBasis basis) noexcept;

struct EffortConventions {
    HBasis h_basis = HBasis::presented;
    int presented_h_digits = 2;
    int effort_digits = 1;
    VarianceBasis variance_basis = VarianceBasis::predicted;

    /// H value that enters the effort model under these conventions.
    double effort_input_h(double h) const noexcept;
};

} // namespace clic
