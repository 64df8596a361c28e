#include "sturmian/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "sturmian/complexity.hpp"
#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double log_sum_exp(const std::vector<double>& logs) {
    double m = kNegInf;
    for (double v : logs) m = std::max(m, v);
    if (m == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - m);
    return m + std::log(acc);
}

void check_weights(WeightSpec w, const char* who) {
    if (!(w.t > 0.0)) throw std::invalid_argument(std::string(who) + ": weight exponent must be positive");
}

} // namespace

double MetricValue::value() const { return std::exp(log_value); }
double MetricValue::tail_bound() const { return std::exp(log_tail); }

LogInterval power_sum(const Int& Q, const Int& P, const Int& lo, const Int& hi, double t) {
    if (Q < 1) throw std::invalid_argument("power_sum: Q must be >= 1");
    if (!(t > 0.0)) throw std::invalid_argument("power_sum: t must be positive");
    LogInterval out;
    if (hi < lo) return out; // empty sum
    if (lo * Q + P < 1) throw std::invalid_argument("power_sum: summand index below 1");

    const Int count = hi - lo + 1;
    const Int head_hi = (count <= 4096) ? hi : Int(lo + 4095);
    double lead = kNegInf;
    double acc = 0.0;
    for (Int l = lo; l <= head_hi; ++l) {
        const double lt = -t * log_int(l * Q + P);
        if (lead == kNegInf) {
            lead = lt;
            acc = 1.0;
        } else {
            acc += std::exp(lt - lead);
        }
    }
    const double head_log = lead + std::log(acc);
    if (count <= 4096) {
        out.lo_log = out.hi_log = head_log;
        return out;
    }

    // Remaining terms l = head_hi+1..hi: the summand f(l) = (lQ+P)^(-t)
    // decreases, so their sum lies between the integral over [tlo, hi+1]
    // and f(tlo) plus the integral over [tlo, hi].
    const Int tlo = head_hi + 1;
    const double la = log_int(tlo * Q + P);
    const double lb_in = log_int(hi * Q + P);
    const double lb_out = log_int((hi + 1) * Q + P);
    const double lq = log_int(Q);
    const auto integral_log = [&](double l_from, double l_to) {
        if (t > 1.0)
            return (1.0 - t) * l_from + std::log1p(-std::exp((1.0 - t) * (l_to - l_from))) -
                   std::log(t - 1.0) - lq;
        if (t < 1.0)
            return (1.0 - t) * l_to + std::log1p(-std::exp((1.0 - t) * (l_from - l_to))) -
                   std::log(1.0 - t) - lq;
        return std::log(l_to - l_from) - lq;
    };
    out.exact = false;
    out.lo_log = log_add(head_log, integral_log(la, lb_out));
    out.hi_log = log_add(head_log, log_add(-t * la, integral_log(la, lb_in)));
    return out;
}

double d_ultra_log(const Word& v, const Word& w, WeightSpec weights) {
    check_weights(weights, "d_ultra_log");
    const std::size_t m = std::min(v.size(), w.size());
    std::size_t lcp = 0;
    while (lcp < m && v[lcp] == w[lcp]) ++lcp;
    if (lcp == m)
        throw InsufficientDepth("d_ultra_log: words agree on the whole compared range");
    const std::size_t n0 = std::max<std::size_t>(1, lcp);
    return -weights.t * log_int(Int(static_cast<unsigned long>(n0)));
}

MetricValue d_spectral_bruteforce(const FactorIndex& language, const Word& v, const Word& w,
                                  WeightSpec weights, std::size_t horizon) {
    check_weights(weights, "d_spectral_bruteforce");
    if (horizon == 0 || v.size() < horizon || w.size() < horizon)
        throw std::invalid_argument("d_spectral_bruteforce: words shorter than the horizon");
    std::size_t lcp = 0;
    while (lcp < horizon && v[lcp] == w[lcp]) ++lcp;
    if (lcp == horizon)
        throw InsufficientDepth("d_spectral_bruteforce: no mismatch within the horizon");
    const std::size_t n0 = std::max<std::size_t>(1, lcp);

    const std::vector<bool> bv = language.prefix_branching(v.substr(0, horizon), horizon);
    const std::vector<bool> bw = language.prefix_branching(w.substr(0, horizon), horizon);

    const double t = weights.t;
    const double lead = -t * log_int(Int(static_cast<unsigned long>(n0)));
    double acc = 1.0;
    for (std::size_t n = n0 + 1; n <= horizon; ++n) {
        if (!bv[n - 1] && !bw[n - 1]) continue;
        const double term = std::exp(-t * log_int(Int(static_cast<unsigned long>(n))) - lead);
        if (bv[n - 1]) acc += term;
        if (bw[n - 1]) acc += term;
    }
    MetricValue out;
    out.log_value = lead + std::log(acc);
    out.log_lower = out.log_value;
    if (t > 1.0) {
        // both words contribute at most every index past the horizon
        out.log_tail = std::log(2.0) + (1.0 - t) * std::log(static_cast<double>(horizon)) -
                       std::log(t - 1.0);
        out.rigorous = true;
    } else {
        out.log_tail = kPosInf;
        out.rigorous = false;
    }
    return out;
}

FactorIndex certified_index(const ContinuedFraction& cf, const Int& N, std::size_t budget) {
    if (N < 1) throw std::invalid_argument("certified_index: length must be >= 1");
    const Int len = slice_certificate_length(cf, N);
    if (len > Int(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("certified_index: certificate exceeds the symbol budget");
    return FactorIndex(mechanical_prefix(cf, len.get_ui(), budget));
}

Int ultra_index(const ContinuedFraction& cf, const SpectralPair& pair) {
    if (pair.level < 1) throw std::invalid_argument("ultra_index: level must be >= 1");
    const ConvergentTable t = convergents(cf);
    const std::size_t n = pair.level;
    if (pair.anchor == LimitWord::x) {
        if (pair.variant == PairVariant::Adjacent) {
            if (2 * n > t.max_index())
                throw InsufficientDepth("ultra_index: denominator table too shallow");
            return t.q[2 * n];
        }
        if (2 * n + 2 > cf.depth())
            throw InsufficientDepth("ultra_index: entry table too shallow for the shifted pair");
        const Int& a = cf.entries[2 * n + 1];
        if (pair.j < 1 || pair.j > a)
            throw std::invalid_argument("ultra_index: shift index out of range");
        return pair.j * t.q[2 * n + 1] + t.q[2 * n];
    }
    if (pair.variant == PairVariant::Adjacent) {
        if (2 * n + 1 > t.max_index())
            throw InsufficientDepth("ultra_index: denominator table too shallow");
        return t.q[2 * n + 1];
    }
    if (2 * n + 1 > cf.depth())
        throw InsufficientDepth("ultra_index: entry table too shallow for the shifted pair");
    const Int& a = cf.entries[2 * n];
    if (pair.j < 1 || pair.j > a)
        throw std::invalid_argument("ultra_index: shift index out of range");
    return pair.j * t.q[2 * n] + t.q[2 * n - 1];
}

MetricValue d_ultra_closed(const ContinuedFraction& cf, const SpectralPair& pair,
                           WeightSpec weights) {
    check_weights(weights, "d_ultra_closed");
    MetricValue out;
    out.log_value = -weights.t * log_int(ultra_index(cf, pair));
    out.log_lower = out.log_value;
    return out;
}

namespace {

struct SumBlock {
    Int Q, P, lo, hi;
};

// The branching indices of a distinguished pair, organized per denominator
// level. The opposite limit word, shifted by s, branches exactly when the
// window endpoint hits a climb point: its indices are i q_m + (q_{m-1} - s)
// for m = start..K, i = 1..a_{m+1}, and the bottom term (m = start, i = 1)
// is the common-prefix index n0, charged once. The anchor limit word
// branches on the climb points of its own parity past n0: the remainder
// i = j+1..a_start of the family at start-1, then the full families at
// start+1, start+3, ... An adjacent pair is the top shift (j = a_start).
std::vector<SumBlock> pair_blocks(const ContinuedFraction& cf, const ConvergentTable& t,
                                  const SpectralPair& pair, std::size_t K) {
    if (pair.level < 1) throw std::invalid_argument("spectral pair: level must be >= 1");
    const std::size_t n = pair.level;
    const std::size_t d = cf.depth();
    if (K + 1 > d) throw InsufficientDepth("spectral pair: truncation level beyond the entries");

    std::size_t start = 0;
    if (pair.anchor == LimitWord::x)
        start = (pair.variant == PairVariant::Adjacent) ? 2 * n : 2 * n + 2;
    else
        start = 2 * n + 1;
    if (start + 1 > d)
        throw InsufficientDepth("spectral pair: entry table too shallow for this level");
    const Int& a_start = cf.entries[start - 1];
    const Int j_eff = (pair.variant == PairVariant::Adjacent) ? a_start : pair.j;
    if (j_eff < 1 || j_eff > a_start)
        throw std::invalid_argument("spectral pair: shift index out of range");
    if (start > K) throw std::invalid_argument("spectral pair: truncation precedes the start level");

    const Int s = (a_start - j_eff + 1) * t.q[start - 1];
    std::vector<SumBlock> blocks;
    for (std::size_t m = start; m <= K; ++m)
        blocks.push_back({t.q[m], Int(t.q[m - 1] - s), 1, cf.entries[m]});
    if (j_eff < a_start)
        blocks.push_back({t.q[start - 1], t.q[start - 2], Int(j_eff + 1), a_start});
    for (std::size_t m = start + 1; m <= K; m += 2)
        blocks.push_back({t.q[m], t.q[m - 1], 1, cf.entries[m]});
    return blocks;
}

} // namespace

std::vector<Int> spectral_term_indices(const ContinuedFraction& cf, const SpectralPair& pair,
                                       std::size_t K) {
    const ConvergentTable t = convergents(cf);
    const std::vector<SumBlock> blocks = pair_blocks(cf, t, pair, K);
    Int total = 0;
    for (const SumBlock& b : blocks) total += b.hi - b.lo + 1;
    if (total > 1000000)
        throw BudgetExceeded("spectral_term_indices: too many terms to materialize");
    std::vector<Int> out;
    out.reserve(total.get_ui());
    for (const SumBlock& b : blocks)
        for (Int l = b.lo; l <= b.hi; ++l) {
            Int idx = l * b.Q + b.P;
            if (idx < 1) throw DataIntegrityError("spectral_term_indices: nonpositive index");
            out.push_back(std::move(idx));
        }
    std::sort(out.begin(), out.end());
    return out;
}

MetricValue d_spectral_closed(const ContinuedFraction& cf, const SpectralPair& pair,
                              WeightSpec weights, std::size_t K) {
    check_weights(weights, "d_spectral_closed");
    const ConvergentTable t = convergents(cf);
    const std::vector<SumBlock> blocks = pair_blocks(cf, t, pair, K);

    std::vector<double> lo_logs, hi_logs;
    bool exact = true;
    for (const SumBlock& b : blocks) {
        const LogInterval s = power_sum(b.Q, b.P, b.lo, b.hi, weights.t);
        lo_logs.push_back(s.lo_log);
        hi_logs.push_back(s.hi_log);
        exact = exact && s.exact;
    }
    MetricValue out;
    out.log_value = log_sum_exp(hi_logs);
    out.log_lower = log_sum_exp(lo_logs);
    out.exact_terms = exact;

    // Tail past level K: each level contributes at most sum_j (j q_k)^(-t)
    // and the denominators grow at least like the golden ratio.
    const double tt = weights.t;
    if (tt > 1.0) {
        const double log_gamma = std::log((1.0 + std::sqrt(5.0)) / 2.0);
        out.log_tail = std::log(tt / (tt - 1.0)) + tt * std::log(2.0 * std::sqrt(5.0)) -
                       std::log1p(-std::exp(-tt * log_gamma)) - tt * log_int(t.q[K + 1]);
        out.rigorous = true;
    } else {
        out.log_tail = kPosInf;
        out.rigorous = false;
    }
    return out;
}

std::pair<Word, Word> spectral_pair_words(const ContinuedFraction& cf, const SpectralPair& pair,
                                          std::size_t horizon, std::size_t budget) {
    if (horizon == 0) throw std::invalid_argument("spectral_pair_words: horizon must be >= 1");
    const ConvergentTable t = convergents(cf);
    const std::size_t n = pair.level;
    if (n < 1) throw std::invalid_argument("spectral_pair_words: level must be >= 1");

    Int shift;
    bool shift_on_y = true;
    if (pair.anchor == LimitWord::x) {
        if (pair.variant == PairVariant::Adjacent) {
            if (2 * n - 1 > t.max_index())
                throw InsufficientDepth("spectral_pair_words: denominator table too shallow");
            shift = t.q[2 * n - 1];
        } else {
            if (2 * n + 2 > cf.depth())
                throw InsufficientDepth("spectral_pair_words: entry table too shallow");
            const Int& a = cf.entries[2 * n + 1];
            if (pair.j < 1 || pair.j > a)
                throw std::invalid_argument("spectral_pair_words: shift index out of range");
            shift = (a - pair.j + 1) * t.q[2 * n + 1];
        }
    } else {
        shift_on_y = false;
        if (pair.variant == PairVariant::Adjacent) {
            if (2 * n > t.max_index())
                throw InsufficientDepth("spectral_pair_words: denominator table too shallow");
            shift = t.q[2 * n];
        } else {
            if (2 * n + 1 > cf.depth())
                throw InsufficientDepth("spectral_pair_words: entry table too shallow");
            const Int& a = cf.entries[2 * n];
            if (pair.j < 1 || pair.j > a)
                throw std::invalid_argument("spectral_pair_words: shift index out of range");
            shift = (a - pair.j + 1) * t.q[2 * n];
        }
    }

    const Int total = shift + Int(static_cast<unsigned long>(horizon));
    if (total > Int(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("spectral_pair_words: shifted prefix exceeds the symbol budget");
    if (shift_on_y) {
        const Word xw = x_prefix_of_length(cf, horizon, budget);
        const Word yw = y_prefix_of_length(cf, total.get_ui(), budget);
        return {xw, yw.substr(shift.get_ui())};
    }
    const Word xw = x_prefix_of_length(cf, total.get_ui(), budget);
    const Word yw = y_prefix_of_length(cf, horizon, budget);
    return {xw.substr(shift.get_ui()), yw};
}

double varrho(double alpha, double t) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("varrho: alpha must be >= 1");
    if (!(t > 0.0)) throw std::invalid_argument("varrho: t must be positive");
    if (t >= 1.0) return 1.0 / alpha;
    if (t <= 1.0 - 1.0 / alpha) return 0.0;
    return 1.0 - (alpha - 1.0) / (alpha * t);
}

namespace {

std::vector<Int> shift_grid(const Int& a) {
    std::set<Int> grid;
    if (a <= 64) {
        for (Int j = 1; j <= a; ++j) grid.insert(j);
    } else {
        grid.insert(1);
        grid.insert(a);
        grid.insert(a - 1);
        grid.insert((a + 1) / 2);
        Int g;
        mpz_root(g.get_mpz_t(), a.get_mpz_t(), 48);
        if (g < 2) g = 2;
        for (Int cur = g; cur < a; cur *= g) grid.insert(cur);
    }
    return {grid.begin(), grid.end()};
}

} // namespace

PsiSeries psi_series(const ContinuedFraction& cf, LimitWord anchor, WeightSpec weights, double r,
                     std::size_t max_level, bool include_shifted) {
    check_weights(weights, "psi_series");
    if (cf.depth() < 2) throw InsufficientDepth("psi_series: need at least two entries");
    const std::size_t K = cf.depth() - 1;

    PsiSeries out;
    out.anchor = anchor;
    out.t = weights.t;
    out.r = r;
    for (std::size_t n = 1; n <= max_level; ++n) {
        SpectralPair adj{anchor, PairVariant::Adjacent, n, 1};
        PsiRow row;
        try {
            const MetricValue du = d_ultra_closed(cf, adj, weights);
            const MetricValue ds = d_spectral_closed(cf, adj, weights, K);
            row.level = n;
            row.lead_index = ultra_index(cf, adj);
            row.log_psi = ds.log_value - r * du.log_value;
            row.rigorous = ds.rigorous;
        } catch (const InsufficientDepth&) {
            break;
        }
        if (include_shifted) {
            // The supremum ranges over the adjacent pair together with its
            // shifted family; a level whose family outruns the entry table
            // is not emitted at all.
            double best = row.log_psi;
            try {
                const std::size_t entry_idx = (anchor == LimitWord::x) ? 2 * n + 1 : 2 * n;
                if (entry_idx >= cf.depth()) throw InsufficientDepth("no shifted family here");
                for (const Int& j : shift_grid(cf.entries[entry_idx])) {
                    SpectralPair sh{anchor, PairVariant::Shifted, n, j};
                    const MetricValue su = d_ultra_closed(cf, sh, weights);
                    const MetricValue ss = d_spectral_closed(cf, sh, weights, K);
                    best = std::max(best, ss.log_value - r * su.log_value);
                    row.rigorous = row.rigorous && ss.rigorous;
                }
            } catch (const InsufficientDepth&) {
                break;
            }
            row.log_psi_sup = best;
        }
        out.rows.push_back(std::move(row));
    }
    if (max_level != std::numeric_limits<std::size_t>::max() && out.rows.size() < max_level)
        out.depth_limited = true;
    return out;
}

RegularityReport regularity_probe(const ContinuedFraction& cf, double alpha, WeightSpec weights,
                                  std::vector<double> r_grid, LimitWord anchor) {
    check_weights(weights, "regularity_probe");
    const double rho = varrho(alpha, weights.t);
    if (r_grid.empty()) {
        for (double d : {-0.15, -0.05, 0.0, 0.05, 0.15}) {
            const double r = rho + d;
            if (r > 0.0 && r <= 1.0) r_grid.push_back(r);
        }
        if (r_grid.empty()) r_grid.push_back(0.05);
    }
    std::sort(r_grid.begin(), r_grid.end());

    RegularityReport rep;
    rep.anchor = anchor;
    rep.t = weights.t;
    rep.predicted_r = rho;
    for (double r : r_grid) {
        const PsiSeries series = psi_series(cf, anchor, weights, r);
        std::vector<double> logs, scales;
        for (const PsiRow& row : series.rows) {
            logs.push_back(row.log_psi_sup ? *row.log_psi_sup : row.log_psi);
            scales.push_back(log_int(row.lead_index));
        }
        if (logs.empty()) throw InsufficientDepth("regularity_probe: no levels available");
        RegularityPoint pt;
        pt.r = r;
        pt.verdict = classify_series(logs, scales).verdict;
        pt.first_log_psi = logs.front();
        pt.last_log_psi = logs.back();
        rep.points.push_back(pt);
    }
    for (std::size_t i = 1; i < rep.points.size(); ++i) {
        if (rep.points[i - 1].verdict != Verdict::Divergent &&
            rep.points[i].verdict == Verdict::Divergent) {
            rep.transition_estimate = 0.5 * (rep.points[i - 1].r + rep.points[i].r);
            break;
        }
    }
    return rep;
}

const char* series_verdict_name(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::Convergent: return "convergent";
        case SeriesVerdict::Divergent: return "divergent";
        case SeriesVerdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

FinitenessReport metric_finiteness_probe(const ContinuedFraction& cf, WeightSpec weights) {
    check_weights(weights, "metric_finiteness_probe");
    const ConvergentTable t = convergents(cf);
    FinitenessReport rep;
    rep.t = weights.t;
    for (std::size_t k = 1; k + 1 <= cf.depth(); ++k) {
        const LogInterval s = power_sum(t.q[k], t.q[k - 1], 1, cf.entries[k], weights.t);
        rep.increment_logs.push_back(s.hi_log);
    }
    if (rep.increment_logs.size() < 2) return rep;

    const double first = rep.increment_logs.front();
    const double last = rep.increment_logs.back();
    bool nonincreasing = true;
    for (std::size_t i = 1; i < rep.increment_logs.size(); ++i)
        if (rep.increment_logs[i] > rep.increment_logs[i - 1] + 0.05) nonincreasing = false;

    const double decay = first - last;
    if (decay <= std::log(10.0)) rep.verdict = SeriesVerdict::Divergent;
    else if (decay >= std::log(100.0) && nonincreasing) rep.verdict = SeriesVerdict::Convergent;
    else rep.verdict = SeriesVerdict::Inconclusive;

    rep.saturated = last <= std::log(1e-3) + log_sum_exp(rep.increment_logs);
    return rep;
}

LogInterval phi_log(const ContinuedFraction& cf, std::size_t m, const Int& j, double r, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("phi_log: t must be positive");
    if (m + 2 > cf.depth()) throw InsufficientDepth("phi_log: entry table too shallow");
    const ConvergentTable tab = convergents(cf);
    const Int& a = cf.entries[m + 1];
    if (j < 1 || j > a) throw std::invalid_argument("phi_log: j out of range");
    const double base_log = log_int(j * tab.q[m + 1] + tab.q[m]);
    const LogInterval s = power_sum(tab.q[m + 1], tab.q[m], j, a, t);
    return {t * r * base_log + s.lo_log, t * r * base_log + s.hi_log, s.exact};
}

} // namespace sturmian
