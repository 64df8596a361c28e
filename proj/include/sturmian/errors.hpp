#pragma once

#include <stdexcept>
#include <string>

namespace sturmian {

// Materializing a word (or table) would exceed the configured symbol budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The stored entry list is too short for the requested computation.
struct InsufficientDepth : std::runtime_error {
    explicit InsufficientDepth(const std::string& what) : std::runtime_error(what) {}
};

// A word-level operation needs a slope whose first entry is >= 2
// (equivalently, a slope below 1/2).  Callers can pass the complement slope.
struct NormalizationRequired : std::runtime_error {
    explicit NormalizationRequired(const std::string& what) : std::runtime_error(what) {}
};

// The rational enclosure of the slope is too coarse to decide a ceiling/comparison.
struct EnclosureExhausted : std::runtime_error {
    explicit EnclosureExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A sampled language slice is provably incomplete or otherwise inconsistent.
struct IncompleteSlice : std::runtime_error {
    explicit IncompleteSlice(const std::string& what) : std::runtime_error(what) {}
};

// Cross-checked quantities disagree; indicates corrupted input or a bug.
struct DataIntegrityError : std::logic_error {
    explicit DataIntegrityError(const std::string& what) : std::logic_error(what) {}
};

} // namespace sturmian
