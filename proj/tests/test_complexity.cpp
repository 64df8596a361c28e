#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "sturmian/cf.hpp"
#include "sturmian/complexity.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/spectral.hpp" // certified_index

using namespace sturmian;

namespace {
ContinuedFraction cf_of(std::vector<unsigned long> v) {
    std::vector<Int> entries(v.begin(), v.end());
    return make_cf(std::move(entries));
}

FactorIndex gap_certified_index(const ContinuedFraction& cf, std::size_t n) {
    const Int len = gap_certificate_length(cf, Int(static_cast<unsigned long>(n)));
    return FactorIndex(mechanical_prefix(cf, len.get_ui()));
}
} // namespace

TEST_CASE("repetitivity closed form at small golden arguments") {
    const ContinuedFraction f = fibonacci_cf(30);
    CHECK(repetitive_formula(f, Int(1)) == 3);
    CHECK(repetitive_formula(f, Int(2)) == 6);
    CHECK(repetitive_formula(f, Int(3)) == 10);
    CHECK(repetitive_formula(f, Int(4)) == 11);
}

TEST_CASE("repetitivity closed form at denominators") {
    const ContinuedFraction f = fibonacci_cf(30);
    const ConvergentTable t = convergents(f);
    for (std::size_t k = 1; k <= 8; ++k)
        CHECK(repetitive_formula(f, t.q[k]) == t.q[k + 1] + 2 * t.q[k] - 1);
    // unit steps between denominators
    for (unsigned long n = 2; n <= 30; ++n) {
        const Int step = repetitive_formula(f, Int(n)) - repetitive_formula(f, Int(n - 1));
        CHECK(step >= 1);
    }
}

TEST_CASE("repetitivity formula needs depth past the argument") {
    CHECK_THROWS_AS(repetitive_formula(cf_of({2, 1}), Int(100)), InsufficientDepth);
}

TEST_CASE("measured repetitivity matches the closed form") {
    for (const ContinuedFraction& cf :
         {fibonacci_cf(30), cf_of({1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2})}) {
        const FactorIndex idx = gap_certified_index(cf, 30);
        for (std::size_t n = 1; n <= 30; ++n)
            CHECK(repetitive_bruteforce(idx, n) ==
                  repetitive_formula(cf, Int(static_cast<unsigned long>(n))));
    }
}

TEST_CASE("set-based repetitivity agrees as well") {
    const ContinuedFraction f = fibonacci_cf(30);
    const FactorIndex idx = gap_certified_index(f, 15);
    for (std::size_t n = 1; n <= 15; ++n)
        CHECK(oracle::repetitive(idx.text(), n) ==
              repetitive_formula(f, Int(static_cast<unsigned long>(n))));
}

TEST_CASE("short texts cannot certify a gap measurement") {
    const FactorIndex idx(mechanical_prefix(fibonacci_cf(30), 12));
    CHECK_THROWS_AS(repetitive_bruteforce(idx, 8), IncompleteSlice);
}

TEST_CASE("certificate lengths are ordered and grow") {
    const ContinuedFraction f = fibonacci_cf(30);
    for (unsigned long n = 1; n <= 20; ++n) {
        const Int slice = slice_certificate_length(f, Int(n));
        const Int gap = gap_certificate_length(f, Int(n));
        CHECK(slice > repetitive_formula(f, Int(n)));
        CHECK(gap > slice);
        if (n > 1) CHECK(slice > slice_certificate_length(f, Int(n - 1)));
    }
}

TEST_CASE("repetitivity estimate trends") {
    const RepetitivityTable tame = alpha_repetitive_estimate(fibonacci_cf(40), 2.0, 39, 100000);
    CHECK(tame.alpha == 2.0);
    REQUIRE(!tame.rows.empty());
    CHECK(tame.trend.verdict == Verdict::Vanishing);
    // brute checks attached where the budget allowed never disagree (a
    // disagreement would have thrown DataIntegrityError)
    bool any_brute = false;
    for (const RepetitivityRow& r : tame.rows)
        if (r.r_brute) {
            any_brute = true;
            CHECK(*r.r_brute == r.r_formula);
        }
    CHECK(any_brute);

    const ContinuedFraction synth = synthesize_alpha_cf(2.0, 1.0, 30, Int(1) << 100);
    const RepetitivityTable hot =
        alpha_repetitive_estimate(synth, 2.0, synth.depth() - 1, 100000);
    CHECK(hot.trend.verdict == Verdict::BoundedPositive);
    CHECK(alpha_repetitive_estimate(fibonacci_cf(40), 1.0, 39).trend.verdict ==
          Verdict::BoundedPositive);
}

TEST_CASE("repulsiveness functional on certified slices") {
    const ContinuedFraction f = fibonacci_cf(30);
    const FactorIndex idx = certified_index(f, Int(12), kDefaultSymbolBudget);
    const LanguageSlice s3 = language_slice(idx, 3, Completeness::Certified);
    CHECK(repulsive_A(s3, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    for (std::size_t n = 2; n <= 12; ++n) {
        const LanguageSlice s = language_slice(idx, n, Completeness::Certified);
        for (double alpha : {1.0, 2.0}) {
            const auto lib = repulsive_A(s, alpha);
            const auto naive = oracle::repulsive_A(idx.text(), n, alpha);
            REQUIRE(lib.has_value() == naive.has_value());
            if (lib) CHECK(*lib == doctest::Approx(*naive).epsilon(1e-12));
        }
    }
    const LanguageSlice s1 = language_slice(idx, 1, Completeness::Certified);
    CHECK_FALSE(repulsive_A(s1, 2.0).has_value()); // single letters have no border
    CHECK_THROWS_AS(repulsive_A(LanguageSlice{}, 2.0), IncompleteSlice);
}

TEST_CASE("repulsiveness table separates golden and synthesized slopes") {
    const RepulsivenessTable tame = repulsiveness_table(fibonacci_cf(40), 2.0);
    REQUIRE(!tame.rows.empty());
    CHECK(tame.trend.verdict == Verdict::Divergent);
    REQUIRE(tame.running_min.has_value());
    CHECK(*tame.running_min > 0.0);
    for (const RepulsiveRow& r : tame.rows) CHECK(r.exact); // no entry >= 2: no bound rows

    const ContinuedFraction synth = synthesize_alpha_cf(2.0, 1.0, 26, Int(1) << 100);
    const RepulsivenessTable hot = repulsiveness_table(synth, 2.0);
    CHECK(hot.trend.verdict == Verdict::BoundedPositive);
    bool any_bound = false;
    for (const RepulsiveRow& r : hot.rows) any_bound = any_bound || !r.exact;
    CHECK(any_bound);
}

TEST_CASE("classic repulsiveness stays bounded for the golden slope") {
    const RepulsivenessTable t = repulsiveness_table(fibonacci_cf(40), 1.0);
    REQUIRE(t.classic_running_min.has_value());
    CHECK(*t.classic_running_min > 0.0);
    CHECK(t.trend.verdict == Verdict::BoundedPositive);
}

TEST_CASE("power measurements against the naive scan") {
    const ContinuedFraction f = fibonacci_cf(30);
    const FactorIndex idx(mechanical_prefix(f, 3000));
    CHECK(power_Q(idx, 1, Int(100)).first == 2);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto [q, capped] = power_Q(idx, n, Int(100));
        CHECK_FALSE(capped);
        CHECK(q == static_cast<unsigned long>(oracle::power_Q(idx.text(), n, 100)));
    }
    // cap reporting
    const FactorIndex uni(Word(std::string(64, '0') + '1' + std::string(64, '0')));
    const auto [qc, capped] = power_Q(uni, 1, Int(5));
    CHECK(capped);
    CHECK(qc == 5);
}

TEST_CASE("power table rows and trend") {
    const PowerTable tame = power_table(fibonacci_cf(40), 2.0);
    REQUIRE(!tame.rows.empty());
    CHECK(tame.trend.verdict == Verdict::Vanishing);
    const ConvergentTable t = convergents(fibonacci_cf(40));
    for (const PowerRow& r : tame.rows) {
        // rows sit at denominators and dominate the next entry
        bool at_denominator = false;
        for (std::size_t k = 0; k <= t.max_index(); ++k) at_denominator |= (t.q[k] == r.n);
        CHECK(at_denominator);
        CHECK(r.Q >= 1);
    }

    const ContinuedFraction synth = synthesize_alpha_cf(2.0, 1.0, 26, Int(1) << 100);
    const PowerTable hot = power_table(synth, 2.0);
    CHECK(hot.trend.verdict == Verdict::BoundedPositive);
}

TEST_CASE("power exceeds the following entry at denominators") {
    const ContinuedFraction cf = cf_of({2, 2, 3, 1, 4, 2, 3, 1, 2, 2, 3, 1});
    const ConvergentTable t = convergents(cf);
    const PowerTable pt = power_table(cf, 2.0);
    for (const PowerRow& r : pt.rows) {
        for (std::size_t k = 1; k + 1 <= t.max_index(); ++k)
            if (t.q[k] == r.n) CHECK(r.Q >= cf.entries[k]);
    }
}

TEST_CASE("joint classification is consistent in both regimes") {
    const EquivalenceReport tame = equivalence_report(fibonacci_cf(40), 2.0);
    CHECK(tame.type == Verdict::Vanishing);
    CHECK(tame.repetitive == Verdict::Vanishing);
    CHECK(tame.repulsive == Verdict::Divergent);
    CHECK(tame.finite == Verdict::Vanishing);
    CHECK(tame.agreement == Agreement::Consistent);
    CHECK_FALSE(tame.classic_repulsive.has_value());

    const ContinuedFraction synth = synthesize_alpha_cf(2.0, 1.0, 26, Int(1) << 100);
    const EquivalenceReport hot = equivalence_report(synth, 2.0);
    CHECK(hot.type == Verdict::BoundedPositive);
    CHECK(hot.repetitive == Verdict::BoundedPositive);
    CHECK(hot.repulsive == Verdict::BoundedPositive);
    CHECK(hot.finite == Verdict::BoundedPositive);
    CHECK(hot.agreement == Agreement::Consistent);
}

TEST_CASE("classic equivalence at alpha one") {
    const EquivalenceReport r = equivalence_report(fibonacci_cf(40), 1.0);
    REQUIRE(r.classic_repulsive.has_value());
    CHECK(*r.classic_repulsive == Verdict::BoundedPositive);
    CHECK(r.repulsive == Verdict::BoundedPositive);
    CHECK(agreement_name(r.agreement) == std::string("consistent"));
}
