#pragma once

// Domain types shared by every planning stage: quadrants, workloads,
// portfolios, the industry (CLIC constant) registry and provider profiles.

#include "clic/errors.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clic {

/// Cell of the isolation x control plane.
///   Q1  high control, low isolation   (hosted private clouds)
///   Q2  high control, high isolation  (on-premise private / traditional IT)
///   Q3  low control, low isolation    (shared public virtual instances)
///   Q4  low control, high isolation   (dedicated VMs on a public cloud)
/// Q2 is the only quadrant on the far side of the CLIC.
enum class Quadrant { Q1, Q2, Q3, Q4 };

inline constexpr std::array<Quadrant, 4> kAllQuadrants{Quadrant::Q1, Quadrant::Q2, Quadrant::Q3,
                                                       Quadrant::Q4};

std::string_view to_string(Quadrant q) noexcept;
std::optional<Quadrant> parse_quadrant(std::string_view text) noexcept;

constexpr bool is_beyond_clic(Quadrant q) noexcept { return q == Quadrant::Q2; }
constexpr bool provides_high_isolation(Quadrant q) noexcept {
    return q == Quadrant::Q2 || q == Quadrant::Q4;
}
constexpr bool provides_high_control(Quadrant q) noexcept {
    return q == Quadrant::Q1 || q == Quadrant::Q2;
}

/// True when moving between the two quadrants crosses the CLIC boundary.
constexpr bool crosses_clic(Quadrant from, Quadrant to) noexcept {
    return is_beyond_clic(from) != is_beyond_clic(to);
}

enum class NfrLevel { L, M, H };

constexpr int weight(NfrLevel level) noexcept {
    switch (level) {
    case NfrLevel::L: return 1;
    case NfrLevel::M: return 2;
    case NfrLevel::H: return 3;
    }
    return 0;
}

std::string_view to_string(NfrLevel level) noexcept;
std::optional<NfrLevel> parse_nfr_level(std::string_view text) noexcept;

struct NfrProfile {
    NfrLevel availability = NfrLevel::L;
    NfrLevel business_continuity = NfrLevel::L;
    NfrLevel security = NfrLevel::L;
    NfrLevel compliance = NfrLevel::L;
    NfrLevel performance = NfrLevel::L;

    bool operator==(const NfrProfile&) const = default;
};

/// Per-window replacement of a workload's demands. `pinned_quadrant` is set by
/// what-if moves and takes precedence over the demand-derived quadrant.
struct DemandOverride {
    std::string window_label;
    double isolation_demand = 0.0;
    double control_demand = 0.0;
    std::optional<Quadrant> pinned_quadrant;

    bool operator==(const DemandOverride&) const = default;
};

struct Workload {
    std::string id;
    std::string name;
    std::string industry;
    double isolation_demand = 0.0;
    double control_demand = 0.0;
    std::optional<NfrProfile> nfr;
    std::optional<Quadrant> pinned_quadrant;
    /// Explicit CLIC constant; wins over the registry entry for the industry.
    std::optional<double> delta_w;
    std::vector<DemandOverride> overrides;

    const DemandOverride* override_for(std::string_view window) const noexcept;

    bool operator==(const Workload&) const = default;
};

struct ClicConfig {
    double isolation_threshold = 0.5;
    double control_threshold = 0.5;

    bool operator==(const ClicConfig&) const = default;
};

inline constexpr std::string_view kDefaultWindow = "default";

struct Portfolio {
    std::vector<Workload> workloads;
    std::vector<std::string> schedule{std::string(kDefaultWindow)};
    ClicConfig clic;

    const Workload* find(std::string_view id) const noexcept;

    bool operator==(const Portfolio&) const = default;
};

/// Workload tally per quadrant. `w2` holds the components beyond the CLIC.
struct QuadrantCounts {
    std::int64_t w1 = 0;
    std::int64_t w2 = 0;
    std::int64_t w3 = 0;
    std::int64_t w4 = 0;

    std::int64_t& at(Quadrant q) noexcept;
    std::int64_t at(Quadrant q) const noexcept;
    std::int64_t total() const noexcept { return w1 + w2 + w3 + w4; }

    bool operator==(const QuadrantCounts&) const = default;
};

/// Relative deployment-and-management cost weight of each quadrant.
struct QuadrantWeights {
    double q1 = 2.0;
    double q2 = 5.0;
    double q3 = 1.0;
    double q4 = 2.0;

    double at(Quadrant q) const noexcept;
    double total() const noexcept { return q1 + q2 + q3 + q4; }

    bool operator==(const QuadrantWeights&) const = default;
};

/// Lowercases and strips spaces, '-' and '_' so "Health Care" and
/// "healthcare" address the same registry entry.
std::string canonical_industry(std::string_view industry);

/// Industry grouping -> CLIC constant (delta_w).
class IndustryRegistry {
public:
    IndustryRegistry() = default;
    explicit IndustryRegistry(const std::map<std::string, double>& entries);

    /// finance 6, healthcare 8, retail 10, airline 15, manufacturing 10, telecom 6.
    static IndustryRegistry defaults();

    std::optional<double> find(std::string_view industry) const;
    /// Throws ErrorKind::unknown_industry when absent.
    double delta_w(std::string_view industry) const;
    void set(std::string_view industry, double delta_w);

    const std::map<std::string, double>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    bool operator==(const IndustryRegistry&) const = default;

private:
    std::map<std::string, double> entries_;
};

/// Provider-specific constants of the effort model.
struct ProviderProfile {
    double k = 150.0;
    std::map<std::string, double> x_by_industry;
    double default_x = 1.0;

    /// K = 150 with x: retail 0.8, finance 0.6, healthcare 0.8, airline 0.7.
    static ProviderProfile defaults();

    double x_for(std::string_view industry) const;

    bool operator==(const ProviderProfile&) const = default;
};

struct EngagementFactors {
    double y = 1.0;

    bool operator==(const EngagementFactors&) const = default;
};

/// One historical deployment used to calibrate K. Exactly one of `counts`
/// and `h` is supplied.
struct DeploymentRecord {
    std::string industry;
    std::optional<QuadrantCounts> counts;
    std::optional<double> h;
    std::optional<double> delta_w;
    double observed_effort = 0.0;
    double x = 1.0;
    double y = 1.0;
    std::optional<double> custom_effort;

    bool operator==(const DeploymentRecord&) const = default;
};

struct CurvePoint {
    std::int64_t workload_count = 0;
    double normalized_effort = 0.0;

    bool operator==(const CurvePoint&) const = default;
};

struct EffortCurve {
    std::string industry;
    std::vector<CurvePoint> points;

    bool operator==(const EffortCurve&) const = default;
};

std::vector<Finding> validate_portfolio(const Portfolio& portfolio, const IndustryRegistry& registry);
std::vector<Finding> validate_registry(const IndustryRegistry& registry);
std::vector<Finding> validate_provider(const ProviderProfile& provider);
std::vector<Finding> validate_record(const DeploymentRecord& record, std::string_view path = "");
std::vector<Finding> validate_curve(const EffortCurve& curve);

/// Half-up rounding to `digits` decimals. Presentation only.
double round_half_up(double value, int digits) noexcept;

} // namespace clic
