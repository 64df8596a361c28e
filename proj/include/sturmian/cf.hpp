#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/trend.hpp"

namespace sturmian {

// How a slope's expansion entries were produced. Purely descriptive; carried
// into serialized output so results are reproducible from the report alone.
struct Provenance {
    std::string kind = "explicit"; // explicit | fibonacci | synthesized | random | complement
    double alpha = 0.0;
    double c = 0.0;
    std::uint64_t seed = 0;
};

// Leading partial quotients a_1, a_2, ... of the continued fraction of an
// irrational theta in (0,1). The expansion is understood as a truncation of
// an infinite one: theta lies strictly inside every enclosure derived here,
// and no entry is ever treated as final.
struct ContinuedFraction {
    std::vector<Int> entries;
    Provenance provenance;

    std::size_t depth() const { return entries.size(); }
};

// Validates entries (nonempty, all >= 1) and wraps them.
ContinuedFraction make_cf(std::vector<Int> entries, Provenance prov = {});

// [2,1,1,1,...]: the slope (3-sqrt(5))/2 whose word is the Fibonacci word.
ContinuedFraction fibonacci_cf(std::size_t depth);

// Word-level constructions require the stored first entry to be >= 2
// (equivalently theta < 1/2); see complement_cf for the reduction.
bool is_normalized(const ContinuedFraction& cf);
void require_normalized(const ContinuedFraction& cf); // throws NormalizationRequired

// Convergent numerators/denominators, indices 0..N for N stored entries:
// p_0=0, p_1=1, q_0=1, q_1=a_1, and x_n = a_n x_{n-1} + x_{n-2}.
struct ConvergentTable {
    std::vector<Int> p, q;
    std::size_t max_index() const { return q.size() - 1; }
};

ConvergentTable convergents(const ContinuedFraction& cf);
ConvergentTable convergents(const ContinuedFraction& cf, std::size_t upto);

// Exact rational bracket around theta with lower < theta < upper.
struct ThetaEnclosure {
    Rat lower, upper;

    bool contains(const Rat& r) const { return lower <= r && r <= upper; }
    Rat width() const { return upper - lower; }
};

// Bracket formed by the consecutive convergents at `level` and `level+1`
// (the even-indexed one sits below theta). Requires level+1 <= depth;
// throws InsufficientDepth otherwise.
ThetaEnclosure enclose_theta(const ContinuedFraction& cf, std::size_t level);

// Diagnostic sequence s_n = a_n * q_{n-1}^(1-alpha) whose limsup decides
// whether the slope is of the given power type. Stored in log scale; for
// alpha == 1 the value is exactly a_n and no rounding enters.
struct AlphaTypeRow {
    std::size_t n = 0;
    Int a_n;
    Int q_prev;
    double log_s = 0.0;
};

struct AlphaTypeReport {
    double alpha = 1.0;
    std::vector<AlphaTypeRow> rows;
    TrendReport trend;
};

AlphaTypeReport alpha_type_sequence(const ContinuedFraction& cf, double alpha);

// Builds entries with a_{n+1} = max(1, round(c * q_n^(alpha-1))), stopping
// once max_depth entries exist or the latest denominator exceeds q_cap.
// The resulting slope has bounded positive type for the given alpha.
ContinuedFraction synthesize_alpha_cf(double alpha, double c, std::size_t max_depth,
                                      const Int& q_cap, const Int& first_entry = 1);

// Expansion of 1-theta: [1, a_1-1, a_2, ...] when a_1 >= 2, and
// [a_2+1, a_3, ...] when a_1 == 1 (needing at least two entries).
ContinuedFraction complement_cf(const ContinuedFraction& cf);

// Collapses a trailing 1 ([..., b, 1] -> [..., b+1]) so that expansions can
// be compared entrywise; single-entry inputs are returned unchanged.
std::vector<Int> canonical_entries(std::vector<Int> entries);

// Verifies q_{k+j} >= F_{j+1} * q_k exactly across the table (F = Fibonacci,
// F_1 = F_2 = 1) together with F_{j+1} > gamma^j / (2*sqrt(5)), the chain
// the closed-form series tails rely on.
bool gamma_growth_holds(const ContinuedFraction& cf);

} // namespace sturmian
