#pragma once

// Independent brute-force oracles the tests freeze expected values against.
// Everything here is deliberately naive: continued fractions are evaluated
// by rational back-substitution (not the three-term recursion), words come
// from the rotation formula, and factor statistics are computed with plain
// std::set scans. None of it shares code paths with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sturmian/bigint.hpp"

namespace oracle {

using sturmian::Int;
using sturmian::Rat;

// [0; a_1, ..., a_k] by folding from the back: x = a_k, x = a_{k-1} + 1/x,
// ..., value = 1/x. Requires 1 <= k <= a.size().
inline Rat cf_value(const std::vector<Int>& a, std::size_t k) {
    if (k < 1 || k > a.size()) throw std::invalid_argument("oracle::cf_value: bad truncation");
    Rat x(a[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;) x = Rat(a[i]) + 1 / x;
    return Rat(1) / x;
}

struct Bracket {
    Rat lo, hi;
};

// Bracket from the two deepest truncations (they land on opposite sides).
inline Bracket cf_bracket(const std::vector<Int>& a) {
    if (a.size() < 2) throw std::invalid_argument("oracle::cf_bracket: need two entries");
    Rat u = cf_value(a, a.size() - 1);
    Rat v = cf_value(a, a.size());
    if (u > v) std::swap(u, v);
    if (u == v) throw std::runtime_error("oracle::cf_bracket: degenerate bracket");
    return {u, v};
}

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// s_n = floor((n+1) theta) - floor(n theta) for n = 1..len, evaluated on
// both bracket endpoints; a disagreement means the expansion is too shallow
// for the requested length and throws.
inline std::string rotation_word(const std::vector<Int>& a, std::size_t len) {
    const Bracket b = cf_bracket(a);
    std::string w;
    w.reserve(len);
    auto stable_floor = [&](unsigned long n) {
        const Int f1 = floor_rat(Rat(static_cast<unsigned long>(n)) * b.lo);
        const Int f2 = floor_rat(Rat(static_cast<unsigned long>(n)) * b.hi);
        if (f1 != f2) throw std::runtime_error("oracle::rotation_word: bracket too shallow");
        return f1;
    };
    Int prev = stable_floor(1);
    for (std::size_t n = 1; n <= len; ++n) {
        const Int next = stable_floor(static_cast<unsigned long>(n + 1));
        const Int d = next - prev;
        if (d < 0 || d > 1) throw std::runtime_error("oracle::rotation_word: step out of range");
        w.push_back(d == 0 ? '0' : '1');
        prev = next;
    }
    return w;
}

inline std::set<std::string> factor_set(const std::string& text, std::size_t n) {
    std::set<std::string> out;
    if (n == 0 || n > text.size()) return out;
    for (std::size_t i = 0; i + n <= text.size(); ++i) out.insert(text.substr(i, n));
    return out;
}

inline std::vector<std::size_t> occurrences(const std::string& text, const std::string& w) {
    std::vector<std::size_t> out;
    for (std::size_t pos = text.find(w); pos != std::string::npos; pos = text.find(w, pos + 1))
        out.push_back(pos);
    return out;
}

// max over length-n factors of the largest start-to-start occurrence gap,
// plus n-1. The caller is responsible for the text being long enough for
// the measured gaps to be the true extremal ones.
inline Int repetitive(const std::string& text, std::size_t n) {
    Int best = 0;
    for (const std::string& w : factor_set(text, n)) {
        const std::vector<std::size_t> occ = occurrences(text, w);
        if (occ.size() < 2) throw std::runtime_error("oracle::repetitive: factor seen once");
        for (std::size_t i = 1; i < occ.size(); ++i) {
            const Int gap(static_cast<unsigned long>(occ[i] - occ[i - 1]));
            if (gap > best) best = gap;
        }
    }
    if (best == 0) throw std::runtime_error("oracle::repetitive: no factors");
    return best + static_cast<unsigned long>(n - 1);
}

inline std::set<std::string> right_special_set(const std::string& text, std::size_t n) {
    const std::set<std::string> next = factor_set(text, n + 1);
    std::set<std::string> out;
    for (const std::string& w : factor_set(text, n))
        if (next.count(w + '0') && next.count(w + '1')) out.insert(w);
    return out;
}

// Lengths of the nonempty proper borders of w (prefix == suffix).
inline std::vector<std::size_t> border_lengths(const std::string& w) {
    std::vector<std::size_t> out;
    for (std::size_t b = 1; b < w.size(); ++b)
        if (w.compare(0, b, w, w.size() - b, b) == 0) out.push_back(b);
    return out;
}

// inf over length-n factors and their borders of (n - b) / b^(1/alpha).
inline std::optional<double> repulsive_A(const std::string& text, std::size_t n, double alpha) {
    std::optional<double> best;
    for (const std::string& w : factor_set(text, n))
        for (const std::size_t b : border_lengths(w)) {
            const double v =
                static_cast<double>(n - b) / std::pow(static_cast<double>(b), 1.0 / alpha);
            if (!best || v < *best) best = v;
        }
    return best;
}

// Largest p <= cap with W^p a factor of text, over length-n factors W.
inline std::size_t power_Q(const std::string& text, std::size_t n, std::size_t cap) {
    std::size_t best = 0;
    for (const std::string& w : factor_set(text, n)) {
        std::string rep = w;
        std::size_t p = 1;
        while (p < cap) {
            rep += w;
            if (rep.size() > text.size() || text.find(rep) == std::string::npos) break;
            ++p;
        }
        best = std::max(best, p);
    }
    if (best == 0) throw std::runtime_error("oracle::power_Q: no factors");
    return best;
}

// b[i] == true iff word[0..i] extends both ways in the factor sets of text.
inline std::vector<bool> branching_profile(const std::string& text, const std::string& word,
                                           std::size_t N) {
    std::vector<bool> out(N, false);
    for (std::size_t n = 1; n <= N; ++n) {
        const std::set<std::string> next = factor_set(text, n + 1);
        const std::string w = word.substr(0, n);
        out[n - 1] = next.count(w + '0') > 0 && next.count(w + '1') > 0;
    }
    return out;
}

inline std::string flip(std::string w) {
    for (char& c : w) c = (c == '0') ? '1' : '0';
    return w;
}

// Simple deterministic split-mix generator for reproducible test data.
inline std::uint64_t mix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::vector<Int> random_entries(std::uint64_t seed, std::size_t depth,
                                       unsigned long max_entry) {
    std::uint64_t s = seed;
    std::vector<Int> out;
    out.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i)
        out.push_back(Int(1 + static_cast<unsigned long>(mix(s) % max_entry)));
    return out;
}

} // namespace oracle
