#include "sturmian/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "sturmian/errors.hpp"

namespace sturmian {

namespace {

// Largest index m with q_m <= n (ties toward the larger index, so constant
// stretches of the table resolve the same way as the recursion).
std::size_t denominator_index_at(const ConvergentTable& t, const Int& n) {
    std::size_t m = 0;
    for (std::size_t k = 0; k <= t.max_index(); ++k)
        if (t.q[k] <= n) m = k;
    return m;
}

} // namespace

Int repetitive_formula(const ContinuedFraction& cf, const Int& n) {
    if (n < 1) throw std::invalid_argument("repetitive_formula: n must be >= 1");
    const ConvergentTable t = convergents(cf);
    const std::size_t m = denominator_index_at(t, n);
    if (m + 1 > t.max_index())
        throw InsufficientDepth("repetitive_formula: denominator table does not reach past n");
    return t.q[m + 1] + t.q[m] + n - 1;
}

Int slice_certificate_length(const ContinuedFraction& cf, const Int& n) {
    return repetitive_formula(cf, n + 1) + n;
}

Int gap_certificate_length(const ContinuedFraction& cf, const Int& n) {
    const Int r = repetitive_formula(cf, n);
    return repetitive_formula(cf, r + 1) + r;
}

Int repetitive_bruteforce(const FactorIndex& idx, std::size_t n) {
    if (n == 0) throw std::invalid_argument("repetitive_bruteforce: n must be >= 1");
    const auto groups = idx.occurrence_starts(n);
    if (groups.size() != n + 1)
        throw IncompleteSlice("repetitive_bruteforce: text does not exhibit n+1 factors");
    std::size_t max_gap = 0;
    for (const auto& starts : groups) {
        if (starts.size() < 2)
            throw IncompleteSlice("repetitive_bruteforce: a factor occurs only once in the text");
        for (std::size_t i = 1; i < starts.size(); ++i)
            max_gap = std::max(max_gap, starts[i] - starts[i - 1]);
    }
    return Int(static_cast<unsigned long>(max_gap + n - 1));
}

RepetitivityTable alpha_repetitive_estimate(const ContinuedFraction& cf, double alpha,
                                            std::size_t K, std::size_t brute_budget) {
    if (alpha < 1.0) throw std::invalid_argument("alpha_repetitive_estimate: alpha must be >= 1");
    const ConvergentTable t = convergents(cf);
    if (K + 1 > t.max_index())
        throw InsufficientDepth("alpha_repetitive_estimate: need the denominator past q_K");

    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k <= K; ++k) {
        if (k < K && t.q[k + 1] == t.q[k]) continue; // duplicate denominator
        ks.push_back(k);
    }

    // One indexed prefix serves every affordable measured row.
    std::size_t brute_upto_pos = 0;
    bool any_brute = false;
    Int brute_len = 0;
    if (brute_budget > 0) {
        const Int budget(static_cast<unsigned long>(brute_budget));
        for (std::size_t pos = 0; pos < ks.size(); ++pos) {
            Int len;
            try {
                len = gap_certificate_length(cf, t.q[ks[pos]]);
            } catch (const InsufficientDepth&) {
                break;
            }
            if (len > budget) break;
            brute_len = len;
            brute_upto_pos = pos;
            any_brute = true;
        }
    }
    std::optional<FactorIndex> idx;
    if (any_brute) idx.emplace(mechanical_prefix(cf, brute_len.get_ui(), brute_budget));

    RepetitivityTable out;
    out.alpha = alpha;
    std::vector<double> logs, scales;
    for (std::size_t pos = 0; pos < ks.size(); ++pos) {
        const Int& n = t.q[ks[pos]];
        RepetitivityRow row;
        row.n = n;
        row.r_formula = repetitive_formula(cf, n);
        if (any_brute && pos <= brute_upto_pos) {
            row.r_brute = repetitive_bruteforce(*idx, n.get_ui());
            if (*row.r_brute != row.r_formula)
                throw DataIntegrityError("alpha_repetitive_estimate: measured gap contradicts the closed form");
        }
        row.log_ratio = log_int(row.r_formula) - alpha * log_int(n);
        logs.push_back(row.log_ratio);
        scales.push_back(log_int(n));
        out.rows.push_back(std::move(row));
    }
    out.trend = classify_series(logs, scales);
    return out;
}

std::optional<double> repulsive_A(const LanguageSlice& slice, double alpha) {
    if (alpha < 1.0) throw std::invalid_argument("repulsive_A: alpha must be >= 1");
    if (slice.completeness != Completeness::Certified)
        throw IncompleteSlice("repulsive_A: requires a certified slice");
    std::optional<double> best;
    std::vector<std::size_t> pi;
    for (const Word& w : slice.factors) {
        const std::size_t len = w.size();
        if (len < 2) continue;
        pi.assign(len, 0);
        for (std::size_t i = 1; i < len; ++i) {
            std::size_t b = pi[i - 1];
            while (b > 0 && w[i] != w[b]) b = pi[b - 1];
            if (w[i] == w[b]) ++b;
            pi[i] = b;
        }
        for (std::size_t b = pi[len - 1]; b > 0; b = pi[b - 1]) {
            const double val =
                static_cast<double>(len - b) / std::pow(static_cast<double>(b), 1.0 / alpha);
            if (!best || val < *best) best = val;
        }
    }
    return best;
}

RepulsivenessTable repulsiveness_table(const ContinuedFraction& cf, double alpha,
                                       std::size_t text_budget) {
    if (alpha < 1.0) throw std::invalid_argument("repulsiveness_table: alpha must be >= 1");
    const ConvergentTable t = convergents(cf);
    const Int budget(static_cast<unsigned long>(text_budget));

    constexpr std::size_t kRowCap = 1024;
    std::size_t nmax = 0;
    Int text_len = 0;
    for (std::size_t n = 2; n <= kRowCap; ++n) {
        Int len;
        try {
            len = slice_certificate_length(cf, Int(static_cast<unsigned long>(n)));
        } catch (const InsufficientDepth&) {
            break;
        }
        if (len > budget) break;
        nmax = n;
        text_len = len;
    }
    if (nmax < 2)
        throw BudgetExceeded("repulsiveness_table: budget certifies no slice of length >= 2");

    std::set<std::size_t> grid;
    for (std::size_t n = 2; n <= std::min<std::size_t>(40, nmax); ++n) grid.insert(n);
    for (std::size_t k = 0; k <= t.max_index(); ++k)
        if (t.q[k] >= 2 && t.q[k] <= static_cast<unsigned long>(nmax)) grid.insert(t.q[k].get_ui());
    for (double g = 48.0; g <= static_cast<double>(nmax); g *= 1.5)
        grid.insert(static_cast<std::size_t>(g));

    // Border-power rows n = a_k q_{k-1} (stored a_k >= 2, k >= 2): measured
    // inside the brute range, upper-bound candidates beyond it.
    std::vector<std::size_t> candidate_ks;
    for (std::size_t k = 2; k <= cf.depth(); ++k) {
        if (cf.entries[k - 1] < 2) continue;
        const Int n = cf.entries[k - 1] * t.q[k - 1];
        if (n <= static_cast<unsigned long>(nmax)) grid.insert(n.get_ui());
        else candidate_ks.push_back(k);
    }

    const FactorIndex idx(mechanical_prefix(cf, text_len.get_ui(), text_budget));

    RepulsivenessTable out;
    out.alpha = alpha;
    std::vector<double> logs, scales;
    auto fold_min = [](std::optional<double>& acc, const std::optional<double>& v) {
        if (v && (!acc || *v < *acc)) acc = *v;
    };
    for (std::size_t n : grid) {
        const LanguageSlice slice = language_slice(idx, n, Completeness::Certified);
        RepulsiveRow row;
        row.n = Int(static_cast<unsigned long>(n));
        row.A_alpha = repulsive_A(slice, alpha);
        row.A_classic = repulsive_A(slice, 1.0);
        row.exact = true;
        fold_min(out.running_min, row.A_alpha);
        fold_min(out.classic_running_min, row.A_classic);
        if (row.A_alpha) {
            logs.push_back(std::log(*row.A_alpha));
            scales.push_back(std::log(static_cast<double>(n)));
        }
        out.rows.push_back(std::move(row));
    }
    for (std::size_t k : candidate_ks) {
        const Int a = cf.entries[k - 1];
        const Int n = a * t.q[k - 1];
        const double log_bound =
            (1.0 - 1.0 / alpha) * log_int(t.q[k - 1]) - log_int(a - 1) / alpha;
        RepulsiveRow row;
        row.n = n;
        row.A_alpha = std::exp(log_bound);
        row.A_classic = std::exp(-log_int(a - 1));
        row.exact = false;
        fold_min(out.running_min, row.A_alpha);
        fold_min(out.classic_running_min, row.A_classic);
        logs.push_back(log_bound);
        scales.push_back(log_int(n));
        out.rows.push_back(std::move(row));
    }
    out.trend = classify_series(logs, scales);
    return out;
}

std::pair<Int, bool> power_Q(const FactorIndex& idx, std::size_t n, const Int& p_cap) {
    if (n == 0 || n > idx.text().size())
        throw std::invalid_argument("power_Q: length outside the indexed text");
    if (p_cap < 1) throw std::invalid_argument("power_Q: p_cap must be >= 1");
    // W^p starts at i exactly when i, i+n, ..., i+(p-1)n all start occurrences
    // of W, so the exponent of a factor is its longest occurrence chain of
    // step n.
    Int best = 0;
    bool capped = false;
    std::unordered_map<std::size_t, std::size_t> chain;
    for (const auto& starts : idx.occurrence_starts(n)) {
        chain.clear();
        std::size_t longest = 0;
        for (std::size_t pos : starts) { // ascending
            std::size_t links = 1;
            if (pos >= n) {
                const auto it = chain.find(pos - n);
                if (it != chain.end()) links = it->second + 1;
            }
            chain.emplace(pos, links);
            longest = std::max(longest, links);
        }
        Int p(static_cast<unsigned long>(longest));
        if (p >= p_cap) {
            capped = true;
            p = p_cap;
        }
        if (p > best) best = p;
    }
    if (best == 0) throw DataIntegrityError("power_Q: indexed text has no factor of this length");
    return {best, capped};
}

PowerTable power_table(const ContinuedFraction& cf, double alpha, std::size_t text_budget,
                       const Int& p_cap) {
    if (alpha < 1.0) throw std::invalid_argument("power_table: alpha must be >= 1");
    if (p_cap < 1) throw std::invalid_argument("power_table: p_cap must be >= 1");
    const ConvergentTable t = convergents(cf);
    const Int budget(static_cast<unsigned long>(text_budget));
    constexpr unsigned long kBruteRowCap = 4096;

    // Size the text so the largest affordable measured row can be certified:
    // a window of length R(m) exhibits every factor of length m, and the
    // power at q_k never exceeds a_{k+1} + 3.
    Int text_len = 0;
    for (std::size_t k = 0; k + 1 <= cf.depth(); ++k) {
        if (t.q[k] > kBruteRowCap) break;
        Int len;
        try {
            len = repetitive_formula(cf, (cf.entries[k] + 4) * t.q[k]);
        } catch (const InsufficientDepth&) {
            break;
        }
        if (len > budget) break;
        if (len > text_len) text_len = len;
    }
    std::optional<FactorIndex> idx;
    if (text_len > 0) idx.emplace(mechanical_prefix(cf, text_len.get_ui(), text_budget));

    PowerTable out;
    out.alpha = alpha;
    std::vector<double> logs, scales;
    for (std::size_t k = 0; k + 1 <= cf.depth(); ++k) {
        if (k + 2 <= cf.depth() && t.q[k + 1] == t.q[k]) continue; // duplicate denominator
        const Int& n = t.q[k];
        PowerRow row;
        row.n = n;
        if (idx && n <= kBruteRowCap && n <= Int(static_cast<unsigned long>(idx->text().size()))) {
            auto [measured, capped] = power_Q(*idx, n.get_ui(), p_cap);
            row.capped = capped;
            bool certified = !capped;
            if (certified) {
                try {
                    certified = repetitive_formula(cf, (measured + 1) * n) <=
                                Int(static_cast<unsigned long>(idx->text().size()));
                } catch (const InsufficientDepth&) {
                    certified = false;
                }
            }
            if (certified) {
                row.Q = measured;
                row.lower_bound_only = false;
            } else {
                row.Q = std::max(measured, cf.entries[k]);
                row.lower_bound_only = true;
            }
        } else {
            row.Q = cf.entries[k];
            row.lower_bound_only = true;
        }
        row.log_ratio = log_int(row.Q) - (alpha - 1.0) * log_int(n);
        logs.push_back(row.log_ratio);
        scales.push_back(log_int(n));
        out.rows.push_back(std::move(row));
    }
    if (out.rows.empty()) throw InsufficientDepth("power_table: no denominator rows available");
    out.trend = classify_series(logs, scales);
    return out;
}

const char* agreement_name(Agreement a) {
    switch (a) {
        case Agreement::Consistent: return "consistent";
        case Agreement::Weak: return "weak";
        case Agreement::Contradictory: return "contradictory";
    }
    return "unknown";
}

namespace {

enum class Direction { Below, At, Above, Unknown };

// Repetitivity, power growth and the arithmetic type all vanish below the
// critical exponent and diverge above it; repulsiveness degenerates the
// opposite way.
Direction direction_same(Verdict v) {
    switch (v) {
        case Verdict::Vanishing: return Direction::Below;
        case Verdict::BoundedPositive: return Direction::At;
        case Verdict::Divergent: return Direction::Above;
        case Verdict::Inconclusive: return Direction::Unknown;
    }
    return Direction::Unknown;
}

Direction direction_repulsive(Verdict v) {
    switch (v) {
        case Verdict::Divergent: return Direction::Below;
        case Verdict::BoundedPositive: return Direction::At;
        case Verdict::Vanishing: return Direction::Above;
        case Verdict::Inconclusive: return Direction::Unknown;
    }
    return Direction::Unknown;
}

} // namespace

EquivalenceReport equivalence_report(const ContinuedFraction& cf, double alpha,
                                     std::size_t text_budget) {
    if (cf.depth() < 2) throw InsufficientDepth("equivalence_report: need at least two entries");
    EquivalenceReport rep;
    rep.alpha = alpha;
    rep.repetitive = alpha_repetitive_estimate(cf, alpha, cf.depth() - 1).trend.verdict;

    const RepulsivenessTable repl = repulsiveness_table(cf, alpha, text_budget);
    rep.repulsive = repl.trend.verdict;
    rep.finite = power_table(cf, alpha, text_budget).trend.verdict;
    rep.type = alpha_type_sequence(cf, alpha).trend.verdict;

    if (alpha == 1.0) {
        std::vector<double> logs, scales;
        std::optional<double> running;
        for (const RepulsiveRow& row : repl.rows) {
            if (!row.A_classic) continue;
            if (!running || *row.A_classic < *running) running = *row.A_classic;
            logs.push_back(std::log(*running));
            scales.push_back(log_int(row.n));
        }
        rep.classic_repulsive = classify_series(logs, scales).verdict;
    }

    const Direction dirs[4] = {direction_same(rep.repetitive), direction_repulsive(rep.repulsive),
                               direction_same(rep.finite), direction_same(rep.type)};
    std::size_t known = 0;
    bool contradiction = false;
    Direction ref = Direction::Unknown;
    for (Direction d : dirs) {
        if (d == Direction::Unknown) continue;
        ++known;
        if (ref == Direction::Unknown) ref = d;
        else if (d != ref) contradiction = true;
    }
    if (contradiction) rep.agreement = Agreement::Contradictory;
    else if (known == 4) rep.agreement = Agreement::Consistent;
    else rep.agreement = Agreement::Weak;
    return rep;
}

} // namespace sturmian
