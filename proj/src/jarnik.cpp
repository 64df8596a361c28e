#include "sturmian/jarnik.hpp"

#include <cmath>
#include <stdexcept>

#include "sturmian/errors.hpp"

namespace sturmian {

const char* hit_status_name(HitStatus s) {
    switch (s) {
        case HitStatus::Hit: return "hit";
        case HitStatus::Miss: return "miss";
        case HitStatus::Undecided: return "undecided";
    }
    return "unknown";
}

std::vector<JarnikRow> jarnik_hits(const ContinuedFraction& cf, double beta, double c,
                                   std::size_t max_n) {
    if (!(beta > 0.0)) throw std::invalid_argument("jarnik_hits: beta must be positive");
    if (!(c > 0.0)) throw std::invalid_argument("jarnik_hits: c must be positive");
    if (max_n == 0) throw std::invalid_argument("jarnik_hits: max_n must be >= 1");
    if (max_n + 1 > cf.depth())
        throw InsufficientDepth("jarnik_hits: rows need the entry past each convergent");

    const ConvergentTable t = convergents(cf);
    const double log_c = std::log(c);
    std::vector<JarnikRow> rows;
    rows.reserve(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        JarnikRow row;
        row.n = n;
        row.q = t.q[n];
        const double lq = log_int(t.q[n]);
        const double thr = log_c - beta * lq;                   // log of c q_n^-beta
        const double upper = -log_int(cf.entries[n]) - 2.0 * lq; // log of 1/(a_{n+1} q_n^2)
        const double lower = -log_int(cf.entries[n] + 2) - 2.0 * lq;
        if (upper <= thr) {
            row.status = HitStatus::Hit;
        } else if (lower > thr) {
            row.status = HitStatus::Miss;
        } else {
            // Sandwich straddles the threshold: bracket the distance exactly
            // against the deepest enclosure.
            const ThetaEnclosure enc = enclose_theta(cf, cf.depth() - 1);
            Rat pq(t.p[n], t.q[n]);
            pq.canonicalize();
            Rat dlo, dhi;
            if (pq < enc.lower) {
                dlo = enc.lower - pq;
                dhi = enc.upper - pq;
            } else if (pq > enc.upper) {
                dlo = pq - enc.upper;
                dhi = pq - enc.lower;
            } else {
                dlo = 0;
                const Rat a = pq - enc.lower, b = enc.upper - pq;
                dhi = (a > b) ? a : b;
            }
            if (log_rat(dhi) <= thr) row.status = HitStatus::Hit;
            else if (dlo > 0 && log_rat(dlo) > thr) row.status = HitStatus::Miss;
            else row.status = HitStatus::Undecided;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactBetaProfile exact_beta_profile(const ContinuedFraction& cf, double beta,
                                    std::size_t grid_size) {
    if (grid_size == 0) throw std::invalid_argument("exact_beta_profile: empty constant grid");
    if (cf.depth() < 2) throw InsufficientDepth("exact_beta_profile: need at least two entries");
    ExactBetaProfile profile;
    profile.beta = beta;
    const std::size_t max_n = cf.depth() - 1;
    for (std::size_t k = 1; k <= grid_size; ++k) {
        ExactBetaPoint pt;
        pt.c = static_cast<double>(k) / static_cast<double>(k + 1);
        for (const JarnikRow& row : jarnik_hits(cf, beta, pt.c, max_n)) {
            switch (row.status) {
                case HitStatus::Hit:
                    ++pt.hits;
                    pt.last_hit_index = row.n;
                    break;
                case HitStatus::Miss: ++pt.misses; break;
                case HitStatus::Undecided: ++pt.undecided; break;
            }
        }
        if (pt.hits == 0) profile.refuted = true;
        profile.points.push_back(std::move(pt));
    }
    return profile;
}

BoxDimensionReport box_dimension_estimate(double alpha, double c1, double c2,
                                          std::size_t samples, std::size_t depth,
                                          unsigned long seed) {
    if (!(alpha > 1.0)) throw std::invalid_argument("box_dimension_estimate: alpha must exceed 1");
    if (!(c1 > 0.0) || !(c2 >= c1))
        throw std::invalid_argument("box_dimension_estimate: need 0 < c1 <= c2");
    if (samples == 0 || depth < 2)
        throw std::invalid_argument("box_dimension_estimate: need samples >= 1 and depth >= 2");

    BoxDimensionReport rep;
    rep.alpha = alpha;
    rep.c1 = c1;
    rep.c2 = c2;
    rep.samples = samples;
    rep.depth = depth;
    rep.branch_log_counts.assign(depth + 1, 0.0);

    double sum_x = 0.0, sum_z = 0.0, sum_ratio = 0.0, sum_ratio_sq = 0.0;
    bool any_branching = false;
    for (std::size_t s = 0; s < samples; ++s) {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(static_cast<unsigned long>(derive_seed(seed, s)));
        // random path of the branching tree: a_{d+1} uniform in the entry range
        Int q_prev = 0, q_cur = 1; // q_{-1}, q_0
        for (std::size_t d = 0; d + 1 <= depth + 1; ++d) {
            Int lo = ceil_scaled_pow(c1, q_cur, alpha - 1.0);
            if (lo < 1) lo = 1;
            Int hi = ceil_scaled_pow(c2, q_cur, alpha - 1.0);
            if (hi < lo) hi = lo;
            const Int count = hi - lo + 1;
            if (count > 1) any_branching = true;
            rep.branch_log_counts[d] += log_int(count) / static_cast<double>(samples);
            const Int a = lo + rng.get_z_range(count);
            const Int q_next = a * q_cur + q_prev;
            q_prev = q_cur;
            q_cur = q_next;
        }
        // after depth+1 draws: q_cur = q_{depth+1}, q_prev = q_depth
        const double x = log_int(q_prev) + log_int(q_prev + q_cur); // log 1/diam of the cylinder
        const double z = 2.0 * log_int(q_prev);                     // log covering count growth
        const double ratio = (x > 0.0) ? z / x : 0.0;
        sum_x += x;
        sum_z += z;
        sum_ratio += ratio;
        sum_ratio_sq += ratio * ratio;
    }
    if (!any_branching) {
        rep.degenerate = true;
        rep.fitted = 0.0;
        rep.spread = 0.0;
        return rep;
    }
    rep.fitted = sum_z / sum_x;
    const double mean_ratio = sum_ratio / static_cast<double>(samples);
    const double var = sum_ratio_sq / static_cast<double>(samples) - mean_ratio * mean_ratio;
    rep.spread = std::sqrt(std::max(0.0, var));
    return rep;
}

LebesgueReport lebesgue_probe(double alpha, std::size_t samples, std::size_t cf_depth,
                              unsigned long seed) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("lebesgue_probe: alpha must be >= 1");
    if (cf_depth < 2) throw std::invalid_argument("lebesgue_probe: need depth >= 2");
    LebesgueReport rep;
    rep.alpha = alpha;
    rep.samples = samples;
    if (samples == 0) {
        rep.empty = true;
        return rep;
    }
    const Int denom = Int(1) << 256;
    for (std::size_t s = 0; s < samples; ++s) {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(static_cast<unsigned long>(derive_seed(seed, s)));
        Int num = rng.get_z_bits(256);
        if (num < 1) num = 1;

        // Euclid: partial quotients of num/denom in (0,1)
        std::vector<Int> entries;
        Int u = denom, v = num;
        while (v > 0 && entries.size() < cf_depth) {
            entries.push_back(u / v);
            const Int r = u % v;
            u = v;
            v = r;
        }
        if (entries.size() < 2) {
            ++rep.divergent; // degenerate rational; count against, never expected
            continue;
        }
        Provenance prov;
        prov.kind = "random";
        prov.alpha = alpha;
        prov.seed = derive_seed(seed, s);
        const ContinuedFraction cf = make_cf(std::move(entries), prov);
        if (alpha_type_sequence(cf, alpha).trend.verdict == Verdict::Divergent) ++rep.divergent;
    }
    rep.fraction_nondivergent =
        1.0 - static_cast<double>(rep.divergent) / static_cast<double>(samples);
    return rep;
}

} // namespace sturmian
