#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sturmian/cf.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

// R(n): the smallest r' such that every factor of length r' contains every
// factor of length n. Closed form: R(q_k) = q_{k+1} + 2 q_k - 1 at
// denominators (ties resolved toward the largest index) and R(n) = R(n-1)+1
// in between. Throws InsufficientDepth when the table does not reach past n.
Int repetitive_formula(const ContinuedFraction& cf, const Int& n);

// Prefix lengths that certify, respectively: the length-n slice together
// with its right-extension flags (R(n+1) + n), and the extremal occurrence
// gap of every length-n factor (R(R(n)+1) + R(n); the witnessing stretch of
// the largest gap is itself a factor of length R(n)+1).
Int slice_certificate_length(const ContinuedFraction& cf, const Int& n);
Int gap_certificate_length(const ContinuedFraction& cf, const Int& n);

// Measures R(n) on the indexed text: max over length-n factors of the
// largest gap between consecutive occurrence starts, plus n-1. Throws
// IncompleteSlice when the text shows fewer than n+1 factors or some factor
// occurs only once (both mean the text cannot certify the measurement).
Int repetitive_bruteforce(const FactorIndex& idx, std::size_t n);

struct RepetitivityRow {
    Int n;
    Int r_formula;
    std::optional<Int> r_brute;
    double log_ratio = 0.0; // log of R(n)/n^alpha
};

struct RepetitivityTable {
    double alpha = 1.0;
    std::vector<RepetitivityRow> rows;
    TrendReport trend;
};

// Rows at n = q_k, k <= K, where the limsup of R(n)/n^alpha is attained.
// When brute_budget > 0, rows whose gap certificate fits the budget also
// carry the measured value; formula/measurement disagreement raises
// DataIntegrityError instead of trusting either side.
RepetitivityTable alpha_repetitive_estimate(const ContinuedFraction& cf, double alpha,
                                            std::size_t K, std::size_t brute_budget = 0);

// inf over factors W of length slice.n and nonempty proper borders w of W
// of (|W|-|w|) / |w|^(1/alpha); nullopt encodes an empty infimum (+infinity).
// Requires a certified slice.
std::optional<double> repulsive_A(const LanguageSlice& slice, double alpha);

struct RepulsiveRow {
    Int n;
    std::optional<double> A_alpha;   // exponent 1/alpha
    std::optional<double> A_classic; // exponent 1
    bool exact = true; // false: border-power upper bound q_{k-1}^(1-1/a)(a_k-1)^(-1/a)
};

struct RepulsivenessTable {
    double alpha = 1.0;
    std::vector<RepulsiveRow> rows;
    std::optional<double> running_min;         // liminf proxy for the alpha exponent
    std::optional<double> classic_running_min; // inf proxy for the classic functional
    TrendReport trend;
};

// Brute rows over certified slices as far as the text budget allows (hard
// row cap 1024), then border-power candidate rows at n = a_k q_{k-1} for
// every stored a_k >= 2 beyond the brute range.
RepulsivenessTable repulsiveness_table(const ContinuedFraction& cf, double alpha,
                                       std::size_t text_budget = kDefaultSymbolBudget);

// Largest p <= p_cap with W^p in the indexed text, maximized over length-n
// factors W; .second reports whether the cap was hit for some W.
std::pair<Int, bool> power_Q(const FactorIndex& idx, std::size_t n, const Int& p_cap);

struct PowerRow {
    Int n;
    Int Q;
    bool capped = false;
    bool lower_bound_only = false; // measurement not certified; Q >= a_{k+1} folded in
    double log_ratio = 0.0;        // log of Q(n)/n^(alpha-1)
};

struct PowerTable {
    double alpha = 1.0;
    std::vector<PowerRow> rows;
    TrendReport trend;
};

// Rows at n = q_k. A row is exact when the text certifies that no higher
// power fits (R((Q+1)n) within the text); otherwise the row keeps the best
// lower bound, folding in Q(q_k) >= a_{k+1}.
PowerTable power_table(const ContinuedFraction& cf, double alpha,
                       std::size_t text_budget = kDefaultSymbolBudget,
                       const Int& p_cap = Int(1000000));

enum class Agreement { Consistent, Weak, Contradictory };

const char* agreement_name(Agreement a);

struct EquivalenceReport {
    double alpha = 1.0;
    Verdict repetitive = Verdict::Inconclusive;
    Verdict repulsive = Verdict::Inconclusive;
    Verdict finite = Verdict::Inconclusive;
    Verdict type = Verdict::Inconclusive;
    // Classic (exponent-1) repulsiveness verdict, populated at alpha == 1 for
    // the equivalence with 1-repulsive.
    std::optional<Verdict> classic_repulsive;
    Agreement agreement = Agreement::Weak;
};

// The four diagnostics at the same alpha plus their joint consistency:
// all bounded-positive, or all degenerate in the matching directions
// (repulsiveness degenerates oppositely to the other three).
EquivalenceReport equivalence_report(const ContinuedFraction& cf, double alpha,
                                     std::size_t text_budget = kDefaultSymbolBudget);

} // namespace sturmian
