#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sturmian/cf.hpp"

namespace sturmian {

// Whether |theta - p_n/q_n| <= c * q_n^(-beta), decided by the convergent
// sandwich 1/((a_{n+1}+2) q_n^2) <= |theta - p_n/q_n| <= 1/(a_{n+1} q_n^2)
// and, when the sandwich straddles the threshold, by the exact distance
// bracket to the deepest enclosure. Undecided rows are reported as such.
enum class HitStatus { Hit, Miss, Undecided };

const char* hit_status_name(HitStatus s);

struct JarnikRow {
    std::size_t n = 0;
    Int q;
    HitStatus status = HitStatus::Undecided;
};

std::vector<JarnikRow> jarnik_hits(const ContinuedFraction& cf, double beta, double c,
                                   std::size_t max_n);

// Negative-evidence probe for approximability to exact order beta: a point
// of the profile counts the hits at threshold constant c = k/(k+1). Any
// constant with no hits in the probed range refutes membership at desk scale
// (a positive verdict is not certifiable from finitely many rows).
struct ExactBetaPoint {
    double c = 0.0;
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t undecided = 0;
    std::optional<std::size_t> last_hit_index;
};

struct ExactBetaProfile {
    double beta = 2.0;
    std::vector<ExactBetaPoint> points;
    bool refuted = false;
};

ExactBetaProfile exact_beta_profile(const ContinuedFraction& cf, double beta,
                                    std::size_t grid_size = 8);

// Monte Carlo covering estimate for the dimension of the set of slopes whose
// entries grow like a_{n+1} ~ c q_n^(alpha-1), c in [c1, c2]: random paths
// of the branching tree, cylinder diameter 1/(q_d (q_d + q_{d+1})) at the
// final depth, covering count doubling like q_d^2. The ratio of mean log
// covering count to mean log inverse diameter tends to 2/(alpha+1).
struct BoxDimensionReport {
    double alpha = 2.0;
    double c1 = 1.0, c2 = 2.0;
    std::size_t samples = 0;
    std::size_t depth = 0;
    double fitted = 0.0;
    double spread = 0.0;                  // stddev of the per-sample ratios
    std::vector<double> branch_log_counts; // per-depth mean log branch count
    bool degenerate = false;              // single-branch tree: dimension 0
};

BoxDimensionReport box_dimension_estimate(double alpha, double c1, double c2,
                                          std::size_t samples, std::size_t depth,
                                          unsigned long seed);

// Fraction of uniformly random 256-bit rationals whose type sequence at
// alpha does not diverge: full-measure behaviour for alpha >= 2.
struct LebesgueReport {
    double alpha = 2.0;
    std::size_t samples = 0;
    std::size_t divergent = 0;
    double fraction_nondivergent = 0.0;
    bool empty = false; // no samples requested
};

LebesgueReport lebesgue_probe(double alpha, std::size_t samples, std::size_t cf_depth,
                              unsigned long seed);

} // namespace sturmian
