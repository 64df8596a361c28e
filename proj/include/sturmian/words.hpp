#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/cf.hpp"

namespace sturmian {

// Binary words are strings over {'0','1'}.
using Word = std::string;

inline constexpr std::size_t kDefaultSymbolBudget = 10'000'000;

// Letter exchange 0 <-> 1; conjugates a word of slope theta into one of slope 1-theta.
Word involution_eta(const Word& w);

// First `length` symbols of the mechanical word of the slope:
//   x_n = ceil(theta*(n+1)) - ceil(theta*n),  n >= 1,
// with every ceiling decided exactly from a rational bracket of theta.
// Throws EnclosureExhausted when the stored entries cannot separate some
// ceil(theta*n) and BudgetExceeded when length > budget. Any slope in (0,1)
// is accepted; no normalization is involved.
Word mechanical_prefix(const ContinuedFraction& cf, std::size_t length,
                       std::size_t budget = kDefaultSymbolBudget);

// One level of the two-substitution tower. x approximates one limit word
// (lengths q_{2k}), y the other (lengths q_{2k-1}); consecutive levels nest
// as prefixes. Words are materialized only while they fit the budget.
struct SubstitutionLevel {
    std::size_t level = 0;
    Int x_len, y_len;
    std::optional<Word> x_prefix, y_prefix;
};

// Levels 0..max_level. Level k consumes stored entries up to index 2k (the
// first entry reduced by one), so 2*max_level <= depth is required; the
// slope must be normalized. Throws InsufficientDepth / NormalizationRequired.
std::vector<SubstitutionLevel> substitution_levels(const ContinuedFraction& cf,
                                                   std::size_t max_level,
                                                   std::size_t budget = kDefaultSymbolBudget);

// Prefix of the x (resp. y) limit word of exactly `length` symbols, built
// level by level with every intermediate capped at `length` so memory stays
// O(length) even when full levels would dwarf the budget.
Word x_prefix_of_length(const ContinuedFraction& cf, std::size_t length,
                        std::size_t budget = kDefaultSymbolBudget);
Word y_prefix_of_length(const ContinuedFraction& cf, std::size_t length,
                        std::size_t budget = kDefaultSymbolBudget);

// Suffix automaton over a fixed text: exact factor queries in O(|query|),
// with states also answering right-extension questions (which letters can
// follow a factor somewhere in the text).
class FactorIndex {
public:
    explicit FactorIndex(Word text);

    const Word& text() const { return text_; }

    bool contains(std::string_view w) const;

    // Distinct factors of the given length, lexicographically sorted.
    std::vector<Word> factors(std::size_t n) const;

    // Same factors, each with the letters that can follow it in the text.
    std::vector<std::pair<Word, std::array<bool, 2>>> factors_with_extensions(std::size_t n) const;

    std::size_t count_distinct(std::size_t n) const;

    // For each distinct factor of length n, its sorted start offsets in the
    // text (grouping follows first appearance). Offsets are 0-based.
    std::vector<std::vector<std::size_t>> occurrence_starts(std::size_t n) const;

    // b[i] == true iff word[0..i] (length i+1) can be followed by both
    // letters somewhere in the indexed text. Throws IncompleteSlice when a
    // prefix of `word` does not even occur in the text.
    std::vector<bool> prefix_branching(const Word& word, std::size_t N) const;

private:
    struct State {
        std::int32_t len = 0;
        std::int32_t link = -1;
        std::array<std::int32_t, 2> next{-1, -1};
    };

    void extend(int c);

    std::vector<State> st_;
    std::int32_t last_ = 0;
    Word text_;
};

enum class Completeness { Certified, Sampled };

// All length-n factors of the subshift (as far as the index shows) plus the
// right-special ones among them.
struct LanguageSlice {
    std::size_t n = 0;
    std::vector<Word> factors;
    std::vector<Word> right_special;
    Completeness completeness = Completeness::Sampled;
};

// When `claimed` is Certified the caller asserts the indexed text is long
// enough to exhibit every factor of length n+1; the slice is then checked
// against the aperiodic profile (n+1 factors, exactly one right-special)
// and IncompleteSlice is thrown on any shortfall. Oversized slices mean the
// text is not Sturmian at all and raise DataIntegrityError.
LanguageSlice language_slice(const FactorIndex& idx, std::size_t n, Completeness claimed);

// Brute-force branching profile: b[n-1] == 1 iff the length-n prefix of
// `word` is right-special in the language sampled by `language`.
std::vector<bool> branching_profile_bruteforce(const FactorIndex& language, const Word& word,
                                               std::size_t N);
// Convenience: index `text` and probe its own prefixes.
std::vector<bool> branching_profile_bruteforce(const Word& text, std::size_t N);

enum class LimitWord { x, y };

// Closed-form branching profile of a limit word: hits sit at
//   x: n = j*q_{2k-1} + q_{2k-2}, k >= 1, 0 <= j < a_{2k},
//   y: m = i*q_{2l}   + q_{2l-1}, l >= 1, 0 <= i < a_{2l+1}.
// Requires a normalized slope and enough entries to cover every batch whose
// smallest member is <= N (InsufficientDepth otherwise).
std::vector<bool> branching_profile_closed(const ContinuedFraction& cf, std::size_t N,
                                           LimitWord source);

} // namespace sturmian
