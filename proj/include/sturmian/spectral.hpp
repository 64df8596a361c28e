#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "sturmian/cf.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

// Weight profile delta_n = n^(-t), t > 0.
struct WeightSpec {
    double t = 1.0;
};

// Log-domain interval around a finite sum of positive terms. Exact sums have
// lo_log == hi_log; long ranges are bracketed by the integral enclosure of
// the decreasing summand.
struct LogInterval {
    double lo_log = -std::numeric_limits<double>::infinity();
    double hi_log = -std::numeric_limits<double>::infinity();
    bool exact = true;
};

// sum over l in [lo, hi] of (l*Q + P)^(-t). Requires lo*Q + P >= 1 and Q >= 1
// (P may be negative). Empty ranges yield the -infinity interval.
LogInterval power_sum(const Int& Q, const Int& P, const Int& lo, const Int& hi, double t);

// A computed metric value: log of the partial sum plus a truncation bound.
// log_value carries the upper enclosure when inner sums were bracketed
// (exact_terms false); log_lower the matching lower enclosure. The tail
// bound is rigorous only for t > 1, where the omitted terms are dominated
// by the exponential growth of the denominators.
struct MetricValue {
    double log_value = -std::numeric_limits<double>::infinity();
    double log_lower = -std::numeric_limits<double>::infinity();
    double log_tail = -std::numeric_limits<double>::infinity();
    bool rigorous = true;
    bool exact_terms = true;

    double value() const;
    double tail_bound() const;
};

// log of the ultrametric d_delta(v, w) = delta_{max(1, |common prefix|)}.
// Throws InsufficientDepth when the words agree on the whole compared range.
double d_ultra_log(const Word& v, const Word& w, WeightSpec weights);

// d_s(v, w) = delta_{n0} + sum_{n0 < n <= horizon} (b_n(v) + b_n(w)) delta_n,
// n0 = max(1, |common prefix|), where b_n(z) = 1 iff the length-n prefix of z
// is right-special in the indexed language. The language index must certify
// every slice up to the horizon (see certified_index).
MetricValue d_spectral_bruteforce(const FactorIndex& language, const Word& v, const Word& w,
                                  WeightSpec weights, std::size_t horizon);

// Indexed mechanical prefix long enough to certify every slice of length
// <= N together with the right-extension flags used by branching queries.
FactorIndex certified_index(const ContinuedFraction& cf, const Int& N,
                            std::size_t budget = kDefaultSymbolBudget);

// Distinguished pairs along the two one-sided limit words: the adjacent pair
// at a level aligns x with the shift of y by |L_n| (anchor x) or the shift
// of x by |R_n| with y (anchor y); shifted pairs step through the
// intermediate shifts indexed by j.
enum class PairVariant { Adjacent, Shifted };

struct SpectralPair {
    LimitWord anchor = LimitWord::x;
    PairVariant variant = PairVariant::Adjacent;
    std::size_t level = 1; // n >= 1
    Int j = 1;             // Shifted only: 1..a_{2(n+1)} (anchor x), 1..a_{2n+1} (anchor y)
};

// Weight index of the ultrametric for the pair: q_{2n} / q_{2n+1} for the
// adjacent pairs, j q_{2n+1} + q_{2n} / j q_{2n} + q_{2n-1} for the shifted.
Int ultra_index(const ContinuedFraction& cf, const SpectralPair& pair);

MetricValue d_ultra_closed(const ContinuedFraction& cf, const SpectralPair& pair,
                           WeightSpec weights);

// The indices n with b_n(v) + b_n(w) = 1 past the common prefix, merged
// ascending, truncated at denominator level K (multiplicities kept). The
// closed-form evaluation sums delta over exactly these indices.
std::vector<Int> spectral_term_indices(const ContinuedFraction& cf, const SpectralPair& pair,
                                       std::size_t K);

// Closed-form d_s for a distinguished pair, truncated at level K
// (start level <= K <= depth-1), with the geometric tail bound.
MetricValue d_spectral_closed(const ContinuedFraction& cf, const SpectralPair& pair,
                              WeightSpec weights, std::size_t K);

// Finite words realizing the pair to the given horizon: the anchor limit
// word and the shifted opposite limit word.
std::pair<Word, Word> spectral_pair_words(const ContinuedFraction& cf, const SpectralPair& pair,
                                          std::size_t horizon,
                                          std::size_t budget = kDefaultSymbolBudget);

// Hoelder exponent marking the phase transition of the shifted-pair ratios:
// 0 for t <= 1 - 1/alpha, then 1 - (alpha-1)/(alpha t) until t = 1, and 1/alpha
// beyond.
double varrho(double alpha, double t);

// psi_n(r) = d_s(pair) / d_delta(pair)^r along the levels of one anchor:
// log_psi for the adjacent pair, log_psi_sup the supremum over that pair
// together with a grid on its shifted family (exhaustive when the entry is
// small, geometric with endpoints otherwise). When the supremum is requested
// the series stops at the last level whose whole family the entry table
// supports.
struct PsiRow {
    std::size_t level = 1;
    Int lead_index;
    double log_psi = 0.0;
    std::optional<double> log_psi_sup;
    bool rigorous = true;
};

struct PsiSeries {
    LimitWord anchor = LimitWord::x;
    double t = 1.0;
    double r = 0.0;
    std::vector<PsiRow> rows;
    bool depth_limited = false; // fewer levels than requested
};

PsiSeries psi_series(const ContinuedFraction& cf, LimitWord anchor, WeightSpec weights, double r,
                     std::size_t max_level = std::numeric_limits<std::size_t>::max(),
                     bool include_shifted = true);

// Trend of the shifted-pair ratios on a grid of candidate exponents around
// the predicted transition.
struct RegularityPoint {
    double r = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    double first_log_psi = 0.0;
    double last_log_psi = 0.0;
};

struct RegularityReport {
    LimitWord anchor = LimitWord::x;
    double t = 1.0;
    double predicted_r = 0.0; // varrho(alpha, t)
    std::vector<RegularityPoint> points;
    std::optional<double> transition_estimate;
};

RegularityReport regularity_probe(const ContinuedFraction& cf, double alpha, WeightSpec weights,
                                  std::vector<double> r_grid = {},
                                  LimitWord anchor = LimitWord::x);

// Level increments of the full weighted branching series
// sum_k sum_{j=1}^{a_{k+1}} delta_{j q_k + q_{k-1}}: the series converges iff
// the increments decay and is the finiteness test for the spectral metric.
enum class SeriesVerdict { Convergent, Divergent, Inconclusive };

const char* series_verdict_name(SeriesVerdict v);

struct FinitenessReport {
    double t = 1.0;
    std::vector<double> increment_logs; // levels k = 1..depth-1
    SeriesVerdict verdict = SeriesVerdict::Inconclusive;
    bool saturated = false; // last increment <= 1e-3 of the accumulated sum
};

FinitenessReport metric_finiteness_probe(const ContinuedFraction& cf, WeightSpec weights);

// log phi(m, j) = t*r*log(j q_{m+1} + q_m) + log sum_{l=j}^{a_{m+2}}
// (l q_{m+1} + q_m)^(-t). At j = a_{m+2} this collapses to
// t(r-1) log q_{m+2} exactly.
LogInterval phi_log(const ContinuedFraction& cf, std::size_t m, const Int& j, double r, double t);

} // namespace sturmian
