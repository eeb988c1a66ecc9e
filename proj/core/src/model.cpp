#include "clic/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace clic {

std::string_view to_string(Quadrant q) noexcept {
    switch (q) {
    case Quadrant::Q1: return "Q1";
    case Quadrant::Q2: return "Q2";
    case Quadrant::Q3: return "Q3";
    case Quadrant::Q4: return "Q4";
    }
    return "Q3";
}

std::optional<Quadrant> parse_quadrant(std::string_view text) noexcept {
    if (text.size() == 1) {
        switch (text[0]) {
        case '1': return Quadrant::Q1;
        case '2': return Quadrant::Q2;
        case '3': return Quadrant::Q3;
        case '4': return Quadrant::Q4;
        default: return std::nullopt;
        }
    }
    if (text.size() == 2 && (text[0] == 'Q' || text[0] == 'q')) return parse_quadrant(text.substr(1));
    return std::nullopt;
}

std::string_view to_string(NfrLevel level) noexcept {
    switch (level) {
    case NfrLevel::L: return "L";
    case NfrLevel::M: return "M";
    case NfrLevel::H: return "H";
    }
    return "L";
}

std::optional<NfrLevel> parse_nfr_level(std::string_view text) noexcept {
    if (text == "L" || text == "l" || text == "low") return NfrLevel::L;
    if (text == "M" || text == "m" || text == "medium") return NfrLevel::M;
    if (text == "H" || text == "h" || text == "high") return NfrLevel::H;
    return std::nullopt;
}

const DemandOverride* Workload::override_for(std::string_view window) const noexcept {
    for (const auto& o : overrides)
        if (o.window_label == window) return &o;
    return nullptr;
}

const Workload* Portfolio::find(std::string_view id) const noexcept {
    for (const auto& w : workloads)
        if (w.id == id) return &w;
    return nullptr;
}

std::int64_t& QuadrantCounts::at(Quadrant q) noexcept {
    switch (q) {
    case Quadrant::Q1: return w1;
    case Quadrant::Q2: return w2;
    case Quadrant::Q3: return w3;
    case Quadrant::Q4: return w4;
    }
    return w3;
}

std::int64_t QuadrantCounts::at(Quadrant q) const noexcept {
    return const_cast<QuadrantCounts*>(this)->at(q);
}

double QuadrantWeights::at(Quadrant q) const noexcept {
    switch (q) {
    case Quadrant::Q1: return q1;
    case Quadrant::Q2: return q2;
    case Quadrant::Q3: return q3;
    case Quadrant::Q4: return q4;
    }
    return q3;
}

std::string canonical_industry(std::string_view industry) {
    std::string out;
    out.reserve(industry.size());
    for (char c : industry) {
        if (c == ' ' || c == '-' || c == '_' || c == '\t') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

IndustryRegistry::IndustryRegistry(const std::map<std::string, double>& entries) {
    for (const auto& [name, delta] : entries) set(name, delta);
}

IndustryRegistry IndustryRegistry::defaults() {
    return IndustryRegistry({{"finance", 6.0},
                             {"healthcare", 8.0},
                             {"retail", 10.0},
                             {"airline", 15.0},
                             {"manufacturing", 10.0},
                             {"telecom", 6.0}});
}

std::optional<double> IndustryRegistry::find(std::string_view industry) const {
    auto it = entries_.find(canonical_industry(industry));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

double IndustryRegistry::delta_w(std::string_view industry) const {
    if (auto d = find(industry)) return *d;
    throw Error(ErrorKind::unknown_industry,
                "unknown industry \"" + std::string(industry) + "\" (no delta_w registered)");
}

void IndustryRegistry::set(std::string_view industry, double delta_w) {
    entries_[canonical_industry(industry)] = delta_w;
}

ProviderProfile ProviderProfile::defaults() {
    ProviderProfile p;
    p.k = 150.0;
    p.x_by_industry = {{"retail", 0.8}, {"finance", 0.6}, {"healthcare", 0.8}, {"airline", 0.7}};
    p.default_x = 1.0;
    return p;
}

double ProviderProfile::x_for(std::string_view industry) const {
    const std::string key = canonical_industry(industry);
    for (const auto& [name, x] : x_by_industry)
        if (canonical_industry(name) == key) return x;
    return default_x;
}

namespace {

bool in_unit(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }
bool in_open_closed_unit(double v) { return std::isfinite(v) && v > 0.0 && v <= 1.0; }
bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void error(std::vector<Finding>& out, std::string code, std::string path, std::string message) {
    out.push_back({Severity::error, std::move(code), std::move(path), std::move(message)});
}

std::string fmt_num(double v) {
    std::string s = std::to_string(v);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

void check_demand(std::vector<Finding>& out, const std::string& path, double value) {
    if (!in_unit(value))
        error(out, "out_of_range", path, "demand " + fmt_num(value) + " outside [0,1]");
}

} // namespace

std::vector<Finding> validate_portfolio(const Portfolio& portfolio, const IndustryRegistry& registry) {
    std::vector<Finding> out;

    if (portfolio.schedule.empty())
        error(out, "empty_schedule", "/schedule", "schedule must contain at least one window");
    std::set<std::string> windows;
    for (std::size_t i = 0; i < portfolio.schedule.size(); ++i) {
        const auto& label = portfolio.schedule[i];
        const std::string path = "/schedule/" + std::to_string(i);
        if (label.empty()) error(out, "empty_label", path, "window label must not be empty");
        if (!windows.insert(label).second)
            error(out, "duplicate_window", path, "duplicate window label \"" + label + "\"");
    }

    const auto& clic = portfolio.clic;
    auto check_threshold = [&](double v, const char* field) {
        if (!(std::isfinite(v) && v > 0.0 && v < 1.0))
            error(out, "out_of_range", std::string("/clic/") + field,
                  "threshold " + fmt_num(v) + " must lie strictly inside (0,1)");
    };
    check_threshold(clic.isolation_threshold, "isolation_threshold");
    check_threshold(clic.control_threshold, "control_threshold");

    std::set<std::string> ids;
    std::map<std::string, std::pair<double, std::size_t>> delta_overrides;
    for (std::size_t i = 0; i < portfolio.workloads.size(); ++i) {
        const auto& w = portfolio.workloads[i];
        const std::string base = "/workloads/" + std::to_string(i);

        if (w.id.empty()) error(out, "missing_id", base + "/id", "workload id must not be empty");
        else if (!ids.insert(w.id).second)
            error(out, "duplicate_id", base + "/id", "duplicate workload id \"" + w.id + "\"");

        check_demand(out, base + "/isolation_demand", w.isolation_demand);
        check_demand(out, base + "/control_demand", w.control_demand);

        if (w.delta_w && !positive(*w.delta_w))
            error(out, "out_of_range", base + "/delta_w", "delta_w must be positive");

        if (w.industry.empty()) {
            error(out, "missing_industry", base + "/industry", "industry must not be empty");
        } else {
            const std::string key = canonical_industry(w.industry);
            if (w.delta_w) {
                auto [it, inserted] = delta_overrides.emplace(key, std::make_pair(*w.delta_w, i));
                if (!inserted && it->second.first != *w.delta_w)
                    error(out, "conflicting_delta_w", base + "/delta_w",
                          "delta_w " + fmt_num(*w.delta_w) + " conflicts with " +
                              fmt_num(it->second.first) + " set on /workloads/" +
                              std::to_string(it->second.second) + " for industry \"" +
                              w.industry + "\"");
            }
        }

        std::set<std::string> override_windows;
        for (std::size_t j = 0; j < w.overrides.size(); ++j) {
            const auto& o = w.overrides[j];
            const std::string opath = base + "/overrides/" + std::to_string(j);
            if (!windows.count(o.window_label))
                error(out, "unknown_window", opath + "/window_label",
                      "override window \"" + o.window_label + "\" is not in the schedule");
            if (!override_windows.insert(o.window_label).second)
                error(out, "duplicate_override", opath + "/window_label",
                      "second override for window \"" + o.window_label + "\"");
            check_demand(out, opath + "/isolation_demand", o.isolation_demand);
            check_demand(out, opath + "/control_demand", o.control_demand);
        }
    }

    // Industry resolution runs after all overrides are known so any workload
    // of the industry may carry the explicit delta_w.
    for (std::size_t i = 0; i < portfolio.workloads.size(); ++i) {
        const auto& w = portfolio.workloads[i];
        if (w.industry.empty()) continue;
        if (delta_overrides.count(canonical_industry(w.industry))) continue;
        if (!registry.find(w.industry))
            error(out, "unknown_industry", "/workloads/" + std::to_string(i) + "/industry",
                  "unknown industry \"" + w.industry + "\"");
    }
    for (const auto& [industry, delta] : registry.entries())
        if (!positive(delta))
            error(out, "out_of_range", "/registry/" + industry, "delta_w must be positive");

    return out;
}

std::vector<Finding> validate_registry(const IndustryRegistry& registry) {
    std::vector<Finding> out;
    for (const auto& [industry, delta] : registry.entries()) {
        if (industry.empty()) error(out, "empty_key", "/entries", "industry name must not be empty");
        if (!positive(delta))
            error(out, "out_of_range", "/entries/" + industry,
                  "delta_w " + fmt_num(delta) + " must be positive");
    }
    return out;
}

std::vector<Finding> validate_provider(const ProviderProfile& provider) {
    std::vector<Finding> out;
    if (!positive(provider.k)) error(out, "out_of_range", "/k", "k must be positive");
    if (!in_open_closed_unit(provider.default_x))
        error(out, "out_of_range", "/default_x", "default_x must lie in (0,1]");
    for (const auto& [industry, x] : provider.x_by_industry)
        if (!in_open_closed_unit(x))
            error(out, "out_of_range", "/x_by_industry/" + industry,
                  "x " + fmt_num(x) + " must lie in (0,1]");
    return out;
}

std::vector<Finding> validate_record(const DeploymentRecord& r, std::string_view path) {
    std::vector<Finding> out;
    const std::string base(path);
    if (r.counts.has_value() == r.h.has_value())
        error(out, "counts_or_h", base.empty() ? "/" : base,
              "exactly one of counts and h must be supplied");
    if (r.counts) {
        for (Quadrant q : kAllQuadrants)
            if (r.counts->at(q) < 0)
                error(out, "out_of_range", base + "/counts/w" + std::string(to_string(q)).substr(1),
                      "count must be non-negative");
    }
    if (r.h && !in_unit(*r.h)) error(out, "out_of_range", base + "/h", "h must lie in [0,1]");
    if (r.delta_w && !positive(*r.delta_w))
        error(out, "out_of_range", base + "/delta_w", "delta_w must be positive");
    if (!(std::isfinite(r.observed_effort) && r.observed_effort >= 0.0))
        error(out, "out_of_range", base + "/observed_effort", "observed_effort must be >= 0");
    if (!in_open_closed_unit(r.x)) error(out, "out_of_range", base + "/x", "x must lie in (0,1]");
    if (!in_open_closed_unit(r.y)) error(out, "out_of_range", base + "/y", "y must lie in (0,1]");
    if (r.custom_effort) {
        if (!(std::isfinite(*r.custom_effort) && *r.custom_effort >= 0.0))
            error(out, "out_of_range", base + "/custom_effort", "custom_effort must be >= 0");
        else if (*r.custom_effort > r.observed_effort)
            error(out, "custom_exceeds_observed", base + "/custom_effort",
                  "custom_effort exceeds observed_effort");
    }
    return out;
}

std::vector<Finding> validate_curve(const EffortCurve& curve) {
    std::vector<Finding> out;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto& p = curve.points[i];
        const std::string base = "/points/" + std::to_string(i);
        if (p.workload_count <= 0)
            error(out, "out_of_range", base + "/workload_count", "workload_count must be positive");
        if (i > 0 && p.workload_count <= curve.points[i - 1].workload_count)
            error(out, "not_increasing", base + "/workload_count",
                  "workload_count must be strictly increasing");
        if (!(std::isfinite(p.normalized_effort) && p.normalized_effort >= 0.0))
            error(out, "out_of_range", base + "/normalized_effort",
                  "normalized_effort must be >= 0");
    }
    return out;
}

double round_half_up(double value, int digits) noexcept {
    if (!std::isfinite(value)) return value;
    const double scale = std::pow(10.0, digits);
    // The nudge absorbs binary representation error on exact decimal halves
    // such as 0.285.
    return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

} // namespace clic
