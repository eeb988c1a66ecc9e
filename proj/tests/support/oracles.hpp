#pragma once
// Reference implementations written directly from the model's definitions,
// sharing no code with the engine.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

// H = w2/(2w2+d) + w1/(5w1+d) + w3/(10w3+d) + w4/(5w4+d), zero counts drop out.
inline double hybrid_complexity(double w1, double w2, double w3, double w4, double d) {
    double h = 0.0;
    if (w2 > 0) h += w2 / (2.0 * w2 + d);
    if (w1 > 0) h += w1 / (5.0 * w1 + d);
    if (w3 > 0) h += w3 / (10.0 * w3 + d);
    if (w4 > 0) h += w4 / (5.0 * w4 + d);
    return h;
}

inline double effort(double h, double k, double x, double y) { return h * k * x / y; }

inline double round2(double v) {
    // half-up on the decimal rendering
    const long long scaled = static_cast<long long>(v * 100.0 + 0.5 + 1e-9);
    return static_cast<double>(scaled) / 100.0;
}

// Every candidate W checked against every gap of its tail: O(n * min_tail).
inline std::optional<std::int64_t> plateau(const std::vector<std::pair<std::int64_t, double>>& pts,
                                           double tau, std::size_t min_tail) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i + min_tail >= pts.size()) break;
        bool ok = true;
        for (std::size_t g = 0; g < min_tail; ++g) {
            const double a = pts[i + g].second;
            const double b = pts[i + g + 1].second;
            bool flat;
            if (a == 0.0) flat = b <= 0.0;
            else flat = (b / a - 1.0) < tau - 1e-9;
            if (!flat) {
                ok = false;
                break;
            }
        }
        if (ok) return pts[i].first;
    }
    return std::nullopt;
}

// index 0..3 = Q1..Q4
inline int cheapest_quadrant(double iso, double ctl, double iso_t = 0.5, double ctl_t = 0.5) {
    struct Cell {
        int q;
        bool high_iso;
        bool high_ctl;
        double cost;
        int tie;
    };
    const std::array<Cell, 4> cells{{
        {0, false, true, 2.0, 2},
        {1, true, true, 5.0, 3},
        {2, false, false, 1.0, 0},
        {3, true, false, 2.0, 1},
    }};
    const bool need_iso = iso >= iso_t;
    const bool need_ctl = ctl >= ctl_t;
    int best = -1;
    for (const auto& c : cells) {
        if (need_iso && !c.high_iso) continue;
        if (need_ctl && !c.high_ctl) continue;
        if (best < 0 || c.cost < cells[best].cost || (c.cost == cells[best].cost && c.tie < cells[best].tie))
            best = c.q;
    }
    return best;
}

inline double mean(const std::vector<double>& v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s / static_cast<double>(n);
}

} // namespace oracle
