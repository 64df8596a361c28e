#pragma once

// Shared banding rule for classifying the tail behaviour of a positive
// sequence sampled at geometrically growing scales.  All classifiers in the
// library funnel through classify_series so that "vanishing", "divergent"
// and "bounded-positive" mean exactly the same thing everywhere.

#include <cstddef>
#include <vector>

namespace sturmian {

enum class Verdict { Vanishing, BoundedPositive, Divergent, Inconclusive };

const char* verdict_name(Verdict v);

struct BandPolicy {
    double lo = 0.01;         // window entirely below lo  -> vanishing
    double hi = 100.0;        // window entirely above hi (and rising) -> divergent
    double band_ratio = 100.0; // max/min spread allowed inside the band
    double slope_tol = 0.15;  // |d log v / d log scale| below this counts as flat
};

struct TrendReport {
    Verdict verdict = Verdict::Inconclusive;
    double window_min = 0;  // linear scale, over the trailing half
    double window_max = 0;
    double slope = 0;       // least-squares slope of log v against log scale
    std::size_t window_begin = 0;
};

// log_values[i] = log of the i-th sequence value; log_scale[i] = log of the
// scale it was sampled at (e.g. log q_k or log n).  The window is the
// trailing half of the rows.  Band thresholds are applied first; when the
// window sits inside the band the log-log trend decides between
// bounded-positive and a slow drift toward 0 or infinity.
TrendReport classify_series(const std::vector<double>& log_values,
                            const std::vector<double>& log_scale,
                            const BandPolicy& policy = BandPolicy{});

} // namespace sturmian
