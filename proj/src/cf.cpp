#include "sturmian/cf.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "sturmian/errors.hpp"

namespace sturmian {

ContinuedFraction make_cf(std::vector<Int> entries, Provenance prov) {
    if (entries.empty())
        throw std::invalid_argument("continued fraction needs at least one entry");
    for (const Int& a : entries)
        if (a < 1)
            throw std::invalid_argument("continued fraction entries must be >= 1, got " +
                                        to_decimal(a));
    return ContinuedFraction{std::move(entries), std::move(prov)};
}

ContinuedFraction fibonacci_cf(std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("fibonacci_cf: depth must be >= 1");
    std::vector<Int> e(depth, 1);
    e[0] = 2;
    return make_cf(std::move(e), Provenance{"fibonacci", 0.0, 0.0, 0});
}

bool is_normalized(const ContinuedFraction& cf) {
    return !cf.entries.empty() && cf.entries[0] >= 2;
}

void require_normalized(const ContinuedFraction& cf) {
    if (!is_normalized(cf))
        throw NormalizationRequired(
            "slope is >= 1/2 (first entry 1); use complement_cf and the letter swap");
}

ConvergentTable convergents(const ContinuedFraction& cf, std::size_t upto) {
    if (upto > cf.depth())
        throw InsufficientDepth("convergents: index " + std::to_string(upto) + " needs " +
                                std::to_string(upto) + " entries, have " +
                                std::to_string(cf.depth()));
    ConvergentTable t;
    t.p.reserve(upto + 1);
    t.q.reserve(upto + 1);
    t.p.emplace_back(0);
    t.q.emplace_back(1);
    if (upto >= 1) {
        t.p.emplace_back(1);
        t.q.push_back(cf.entries[0]);
    }
    for (std::size_t n = 2; n <= upto; ++n) {
        t.p.push_back(cf.entries[n - 1] * t.p[n - 1] + t.p[n - 2]);
        t.q.push_back(cf.entries[n - 1] * t.q[n - 1] + t.q[n - 2]);
    }
    return t;
}

ConvergentTable convergents(const ContinuedFraction& cf) {
    return convergents(cf, cf.depth());
}

ThetaEnclosure enclose_theta(const ContinuedFraction& cf, std::size_t level) {
    if (level + 1 > cf.depth())
        throw InsufficientDepth("enclose_theta: level " + std::to_string(level) + " needs " +
                                std::to_string(level + 1) + " entries, have " +
                                std::to_string(cf.depth()));
    ConvergentTable t = convergents(cf, level + 1);
    Rat a(t.p[level], t.q[level]);
    Rat b(t.p[level + 1], t.q[level + 1]);
    a.canonicalize();
    b.canonicalize();
    if (level % 2 == 0) return ThetaEnclosure{a, b};
    return ThetaEnclosure{b, a};
}

AlphaTypeReport alpha_type_sequence(const ContinuedFraction& cf, double alpha) {
    if (!(alpha >= 1.0))
        throw std::invalid_argument("alpha_type_sequence: alpha must be >= 1");
    ConvergentTable t = convergents(cf);
    AlphaTypeReport rep;
    rep.alpha = alpha;
    std::vector<double> vals, scale;
    for (std::size_t n = 1; n <= cf.depth(); ++n) {
        AlphaTypeRow row;
        row.n = n;
        row.a_n = cf.entries[n - 1];
        row.q_prev = t.q[n - 1];
        row.log_s = (alpha == 1.0) ? log_int(row.a_n)
                                   : log_int(row.a_n) + (1.0 - alpha) * log_int(row.q_prev);
        vals.push_back(row.log_s);
        scale.push_back(log_int(row.q_prev));
        rep.rows.push_back(std::move(row));
    }
    rep.trend = classify_series(vals, scale);
    return rep;
}

ContinuedFraction synthesize_alpha_cf(double alpha, double c, std::size_t max_depth,
                                      const Int& q_cap, const Int& first_entry) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("synthesize_alpha_cf: alpha must be >= 1");
    if (!(c > 0.0)) throw std::invalid_argument("synthesize_alpha_cf: c must be > 0");
    if (max_depth == 0) throw std::invalid_argument("synthesize_alpha_cf: max_depth must be >= 1");
    if (first_entry < 1) throw std::invalid_argument("synthesize_alpha_cf: first entry must be >= 1");

    std::vector<Int> entries{first_entry};
    Int q_prev = 1, q_cur = first_entry;
    while (entries.size() < max_depth && q_cur <= q_cap) {
        Int a = round_scaled_pow(c, q_cur, alpha - 1.0);
        Int q_next = a * q_cur + q_prev;
        entries.push_back(std::move(a));
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    }
    Provenance prov{"synthesized", alpha, c, 0};
    return make_cf(std::move(entries), std::move(prov));
}

ContinuedFraction complement_cf(const ContinuedFraction& cf) {
    if (cf.entries.empty()) throw std::invalid_argument("complement_cf: empty expansion");
    std::vector<Int> out;
    if (cf.entries[0] >= 2) {
        out.reserve(cf.depth() + 1);
        out.emplace_back(1);
        out.push_back(cf.entries[0] - 1);
        out.insert(out.end(), cf.entries.begin() + 1, cf.entries.end());
    } else {
        if (cf.depth() < 2)
            throw InsufficientDepth("complement_cf: [1] alone does not determine 1-theta");
        out.reserve(cf.depth() - 1);
        out.push_back(cf.entries[1] + 1);
        out.insert(out.end(), cf.entries.begin() + 2, cf.entries.end());
    }
    return make_cf(std::move(out), Provenance{"complement", cf.provenance.alpha,
                                              cf.provenance.c, cf.provenance.seed});
}

std::vector<Int> canonical_entries(std::vector<Int> entries) {
    if (entries.size() >= 2 && entries.back() == 1) {
        entries.pop_back();
        entries.back() += 1;
    }
    return entries;
}

bool gamma_growth_holds(const ContinuedFraction& cf) {
    ConvergentTable t = convergents(cf);
    const std::size_t N = t.max_index();
    std::vector<Int> fib(N + 2);
    fib[0] = 1; // F_1
    if (N + 2 > 1) fib[1] = 1;
    for (std::size_t m = 2; m < fib.size(); ++m) fib[m] = fib[m - 1] + fib[m - 2];

    for (std::size_t k = 0; k <= N; ++k)
        for (std::size_t j = 0; k + j <= N; ++j)
            if (t.q[k + j] < fib[j] * t.q[k]) return false; // fib[j] == F_{j+1}

    const double gamma = (1.0 + std::sqrt(5.0)) / 2.0;
    const double floor_log = -std::log(2.0 * std::sqrt(5.0));
    for (std::size_t j = 0; j <= N; ++j)
        if (log_int(fib[j]) <= static_cast<double>(j) * std::log(gamma) + floor_log) return false;
    return true;
}

} // namespace sturmian
