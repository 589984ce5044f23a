#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csd/converters.hpp"
#include "csd/core.hpp"

namespace csd::oracle {

/// One signed-digit representation, not necessarily canonical.
/// Index 0 is the least significant digit.
struct SdCandidate {
    std::vector<std::int8_t> digits;

    std::int64_t value() const noexcept;
    unsigned weight() const noexcept;
    bool non_adjacent() const noexcept;

    bool operator==(const SdCandidate&) const = default;
};

/// Every digit sequence of length max_len over {-1, 0, +1} whose value is x,
/// in lexicographic order over (d_0, d_1, ...) with -1 < 0 < 1.
/// Throws std::invalid_argument unless x < 2^max_len and max_len <= 16.
std::vector<SdCandidate> enumerate_sd_reps(std::uint64_t x, unsigned max_len);

/// Minimum Hamming weight over all signed-digit representations of x that fit
/// in max_len digits. Independent of the converters: walks the digit choices
/// {-1, 0, +1} directly with value halving.
unsigned min_weight(std::uint64_t x, unsigned max_len);

/// min_weight with the certifying length bit_length(x) + 1.
unsigned min_weight(std::uint64_t x);

/// Number of length-max_len candidates that satisfy non-adjacency.
/// Same guards as enumerate_sd_reps.
std::uint64_t count_naf_reps(std::uint64_t x, unsigned max_len);

struct ConverterCheck {
    std::string name;
    std::uint64_t mismatches = 0;
    std::optional<std::uint64_t> first_mismatch;
};

/// Outcome of one cross-validation run. Mismatches are data, not errors: a
/// run with nonzero counts still returns normally.
struct CrossCheckReport {
    std::string domain;
    std::string reference = "bin2naf";
    std::uint64_t inputs = 0;
    std::vector<ConverterCheck> converters;
    std::uint64_t invariant_violations = 0;
    std::optional<std::uint64_t> first_invariant_violation;

    std::uint64_t total_mismatches() const noexcept;
    bool passed() const noexcept;

    /// Line-oriented text summary.
    std::string text() const;
};

/// Runs every converter in `ids` over [lo, hi), comparing mask pairs against
/// bin2naf, and validates the reference output's invariants per input.
/// threads == 0 picks a hardware-based worker count; the merged report is
/// identical for any partitioning.
CrossCheckReport cross_check_range(std::uint64_t lo, std::uint64_t hi,
                                   std::span<const ConverterId> ids = all_converters(),
                                   unsigned threads = 0);

/// Same check over `count` seeded random values of the given width.
CrossCheckReport cross_check_random(std::uint64_t count, unsigned bits,
                                    std::uint64_t seed,
                                    std::span<const ConverterId> ids = all_converters(),
                                    unsigned threads = 0);

/// A named conversion routine under test. Seam for exercising the harness
/// itself with deliberately broken subjects.
struct Subject {
    std::string name;
    std::function<CsdRep(const BinaryWord&)> fn;
};

CrossCheckReport cross_check_subjects(std::string domain, std::uint64_t count,
                                      const std::function<BinaryWord(std::uint64_t)>& input_at,
                                      const std::vector<Subject>& subjects,
                                      unsigned threads = 0);

}  // namespace csd::oracle
