#include "sturmian/trend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sturmian {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Vanishing: return "vanishing";
        case Verdict::BoundedPositive: return "bounded-positive";
        case Verdict::Divergent: return "divergent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

TrendReport classify_series(const std::vector<double>& log_values,
                            const std::vector<double>& log_scale,
                            const BandPolicy& policy) {
    if (log_values.size() != log_scale.size())
        throw std::invalid_argument("classify_series: size mismatch");
    TrendReport rep;
    const std::size_t n = log_values.size();
    if (n == 0) return rep;

    rep.window_begin = n / 2;
    const double wmin = *std::min_element(log_values.begin() + rep.window_begin, log_values.end());
    const double wmax = *std::max_element(log_values.begin() + rep.window_begin, log_values.end());
    rep.window_min = std::exp(wmin);
    rep.window_max = std::exp(wmax);

    // Least-squares slope of log v against log scale over the window.
    double slope = 0;
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t m = 0;
        for (std::size_t i = rep.window_begin; i < n; ++i) {
            sx += log_scale[i];
            sy += log_values[i];
            sxx += log_scale[i] * log_scale[i];
            sxy += log_scale[i] * log_values[i];
            ++m;
        }
        const double den = static_cast<double>(m) * sxx - sx * sx;
        if (m >= 2 && den > 1e-12) slope = (static_cast<double>(m) * sxy - sx * sy) / den;
    }
    rep.slope = slope;

    const double log_lo = std::log(policy.lo);
    const double log_hi = std::log(policy.hi);
    const bool rising = log_values.back() >= log_values[rep.window_begin];

    if (wmax < log_lo) {
        rep.verdict = Verdict::Vanishing;
        return rep;
    }
    if (wmin > log_hi && rising) {
        rep.verdict = Verdict::Divergent;
        return rep;
    }
    if (n < 3) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    if (slope > policy.slope_tol) {
        rep.verdict = Verdict::Divergent;
        return rep;
    }
    if (slope < -policy.slope_tol) {
        rep.verdict = Verdict::Vanishing;
        return rep;
    }
    if (wmin >= log_lo && wmax <= log_hi && wmax - wmin <= std::log(policy.band_ratio)) {
        rep.verdict = Verdict::BoundedPositive;
        return rep;
    }
    rep.verdict = Verdict::Inconclusive;
    return rep;
}

} // namespace sturmian
