#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "sturmian/cf.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/spectral.hpp" // certified_index
#include "sturmian/words.hpp"

using namespace sturmian;

namespace {
ContinuedFraction cf_of(std::vector<unsigned long> v) {
    std::vector<Int> entries(v.begin(), v.end());
    return make_cf(std::move(entries));
}
} // namespace

TEST_CASE("mechanical prefix of the golden slope") {
    CHECK(mechanical_prefix(fibonacci_cf(10), 7) == "0100101");
}

TEST_CASE("mechanical prefixes match the rotation formula") {
    for (const ContinuedFraction& cf :
         {fibonacci_cf(20), cf_of({1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3}),
          make_cf(oracle::random_entries(7, 14, 6))}) {
        CHECK(mechanical_prefix(cf, 200) == oracle::rotation_word(cf.entries, 200));
    }
}

TEST_CASE("mechanical prefix enforces the symbol budget") {
    CHECK_THROWS_AS(mechanical_prefix(fibonacci_cf(30), 1000, 999), BudgetExceeded);
    CHECK(mechanical_prefix(fibonacci_cf(30), 1000, 1000).size() == 1000);
}

TEST_CASE("mechanical prefix reports exhausted expansions") {
    // two entries cannot pin down hundreds of symbols
    CHECK_THROWS_AS(mechanical_prefix(cf_of({2, 1}), 500), EnclosureExhausted);
}

TEST_CASE("substitution levels of the golden slope") {
    const ContinuedFraction f = fibonacci_cf(10);
    const auto levels = substitution_levels(f, 4);
    REQUIRE(levels.size() == 5);
    CHECK(levels[1].x_prefix == Word("010"));
    CHECK(levels[1].y_prefix == Word("10"));
    CHECK(levels[2].x_prefix == Word("01010010"));

    const ConvergentTable t = convergents(f);
    for (const SubstitutionLevel& lv : levels) {
        CHECK(lv.x_len == t.q[2 * lv.level]);
        CHECK(lv.y_len == (lv.level == 0 ? Int(1) : t.q[2 * lv.level - 1]));
    }
    // consecutive levels nest as prefixes
    for (std::size_t k = 1; k + 1 < levels.size(); ++k) {
        REQUIRE(levels[k].x_prefix.has_value());
        REQUIRE(levels[k + 1].x_prefix.has_value());
        CHECK(levels[k + 1].x_prefix->substr(0, levels[k].x_prefix->size()) ==
              *levels[k].x_prefix);
        CHECK(levels[k + 1].y_prefix->substr(0, levels[k].y_prefix->size()) ==
              *levels[k].y_prefix);
    }
}

TEST_CASE("substitution levels respect normalization and depth") {
    CHECK_THROWS_AS(substitution_levels(cf_of({1, 2, 3, 4}), 1), NormalizationRequired);
    CHECK_THROWS_AS(substitution_levels(fibonacci_cf(5), 4), InsufficientDepth);
}

TEST_CASE("substitution levels stop materializing beyond the budget") {
    const auto levels = substitution_levels(fibonacci_cf(30), 14, 500);
    for (const SubstitutionLevel& lv : levels) {
        CHECK(lv.x_prefix.has_value() == (lv.x_len <= 500));
        CHECK(lv.y_prefix.has_value() == (lv.y_len <= 500));
    }
}

TEST_CASE("limit word prefixes have the same factors as the mechanical word") {
    const ContinuedFraction f = fibonacci_cf(30);
    const Word mech = mechanical_prefix(f, 4000);
    const Word x = x_prefix_of_length(f, 600);
    const Word y = y_prefix_of_length(f, 600);
    for (std::size_t n : {1u, 2u, 5u, 12u}) {
        const auto mf = oracle::factor_set(mech, n);
        for (const std::string& w : oracle::factor_set(x, n)) CHECK(mf.count(w) == 1);
        for (const std::string& w : oracle::factor_set(y, n)) CHECK(mf.count(w) == 1);
    }
    // x and y prefixes differ from the mechanical word as sequences
    CHECK(x.size() == 600);
    CHECK(y.size() == 600);
}

TEST_CASE("factor index agrees with set-based counting") {
    const Word text = mechanical_prefix(fibonacci_cf(30), 400);
    const FactorIndex idx(text);
    CHECK(idx.text() == text);
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto naive = oracle::factor_set(text, n);
        CHECK(idx.count_distinct(n) == naive.size());
        const std::vector<Word> fs = idx.factors(n);
        CHECK(std::is_sorted(fs.begin(), fs.end()));
        CHECK(std::set<std::string>(fs.begin(), fs.end()) == naive);
        for (const std::string& w : naive) CHECK(idx.contains(w));
    }
    CHECK_FALSE(idx.contains("11"));
    CHECK_FALSE(idx.contains("000"));
}

TEST_CASE("factor extensions and occurrence starts") {
    const Word text = mechanical_prefix(fibonacci_cf(30), 300);
    const FactorIndex idx(text);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto next = oracle::factor_set(text, n + 1);
        for (const auto& [w, ext] : idx.factors_with_extensions(n)) {
            CHECK(ext[0] == (next.count(w + '0') > 0));
            CHECK(ext[1] == (next.count(w + '1') > 0));
        }
        const std::vector<Word> fs = idx.factors(n);
        const auto groups = idx.occurrence_starts(n);
        REQUIRE(groups.size() == fs.size());
        // grouping follows first appearance; match by content
        std::map<std::string, std::vector<std::size_t>> by_word;
        std::size_t gi = 0;
        for (const auto& g : groups) {
            REQUIRE(!g.empty());
            by_word[text.substr(g.front(), n)] = g;
            ++gi;
        }
        for (const Word& w : fs) CHECK(by_word.at(w) == oracle::occurrences(text, w));
    }
}

TEST_CASE("certified slices show the aperiodic profile") {
    const ContinuedFraction f = fibonacci_cf(30);
    const FactorIndex idx = certified_index(f, Int(30), kDefaultSymbolBudget);
    for (std::size_t n = 1; n <= 30; ++n) {
        const LanguageSlice s = language_slice(idx, n, Completeness::Certified);
        CHECK(s.factors.size() == n + 1);
        CHECK(s.right_special.size() == 1);
        CHECK(s.completeness == Completeness::Certified);
        // the right-special factor is among the listed factors
        CHECK(std::find(s.factors.begin(), s.factors.end(), s.right_special.front()) !=
              s.factors.end());
    }
}

TEST_CASE("a short text fails slice certification") {
    const FactorIndex idx(mechanical_prefix(fibonacci_cf(30), 6));
    CHECK_THROWS_AS(language_slice(idx, 5, Completeness::Certified), IncompleteSlice);
    CHECK_NOTHROW(language_slice(idx, 5, Completeness::Sampled));
}

TEST_CASE("a periodic text is rejected as positive evidence") {
    const FactorIndex idx(Word("010101010101010101"));
    CHECK_THROWS_AS(language_slice(idx, 3, Completeness::Certified), IncompleteSlice);
    // random binary noise shows too many factors instead
    const FactorIndex noisy(Word("0110100110010110100101100110100110010110"));
    CHECK_THROWS_AS(language_slice(noisy, 3, Completeness::Certified), DataIntegrityError);
}

TEST_CASE("closed branching profile of the golden slope") {
    const ContinuedFraction f = fibonacci_cf(30);
    const std::vector<bool> bx = branching_profile_closed(f, 25, LimitWord::x);
    const std::vector<bool> by = branching_profile_closed(f, 6, LimitWord::y);
    std::vector<std::size_t> x_hits, y_hits;
    for (std::size_t n = 1; n <= 25; ++n)
        if (bx[n - 1]) x_hits.push_back(n);
    for (std::size_t n = 1; n <= 6; ++n)
        if (by[n - 1]) y_hits.push_back(n);
    CHECK(x_hits == std::vector<std::size_t>{1, 3, 8, 21});
    CHECK(y_hits == std::vector<std::size_t>{2, 5});
}

TEST_CASE("closed and measured branching profiles agree") {
    for (const ContinuedFraction& cf :
         {fibonacci_cf(30), cf_of({2, 3, 1, 4, 1, 5, 2, 3, 1, 4, 1, 5}),
          complement_cf(cf_of({1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3}))}) {
        const std::size_t N = 120;
        const FactorIndex idx = certified_index(cf, Int(N), kDefaultSymbolBudget);
        const Word xw = x_prefix_of_length(cf, N);
        const Word yw = y_prefix_of_length(cf, N);
        CHECK(branching_profile_closed(cf, N, LimitWord::x) ==
              branching_profile_bruteforce(idx, xw, N));
        CHECK(branching_profile_closed(cf, N, LimitWord::y) ==
              branching_profile_bruteforce(idx, yw, N));
        // and the naive set-based profile concurs on a shorter horizon
        CHECK(branching_profile_bruteforce(idx, xw, 40) ==
              oracle::branching_profile(idx.text(), xw, 40));
    }
}

TEST_CASE("branching profile needs a normalized slope") {
    CHECK_THROWS_AS(branching_profile_closed(cf_of({1, 2, 3, 4}), 10, LimitWord::x),
                    NormalizationRequired);
}

TEST_CASE("prefix branching rejects words outside the language") {
    const FactorIndex idx(mechanical_prefix(fibonacci_cf(30), 500));
    CHECK_THROWS_AS(idx.prefix_branching("11", 2), IncompleteSlice);
}

TEST_CASE("exchanging the letters matches the complement slope") {
    const ContinuedFraction a = cf_of({1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3});
    const ContinuedFraction b = complement_cf(a);
    const Word wa = mechanical_prefix(a, 2500);
    const Word wb = mechanical_prefix(b, 2500);
    for (std::size_t n = 1; n <= 12; ++n) {
        std::set<std::string> flipped;
        for (const std::string& w : oracle::factor_set(wb, n)) flipped.insert(oracle::flip(w));
        CHECK(oracle::factor_set(wa, n) == flipped);
    }
}
