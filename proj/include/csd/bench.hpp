#ifndef CSD_BENCH_HPP
#define CSD_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "csd/converters.hpp"

namespace csd::bench {

/// Measurement parameters. Defaults follow the reference protocol: 1000
/// samples of 1000 evaluations over 32-bit uniform random inputs.
struct BenchConfig {
    std::uint64_t sample_count = 1000;
    std::uint64_t evals_per_sample = 1000;
    std::uint64_t rng_seed = 1;
    unsigned input_bits = 32;
    std::vector<ConverterId> converters{all_converters().begin(),
                                        all_converters().end()};
};

/// Five-number summary of per-evaluation times in nanoseconds.
struct SummaryStats {
    double min = 0;
    double max = 0;
    double median = 0;
    double mean = 0;
    double stddev = 0;
};

/// Order statistics plus mean and sample standard deviation (divisor N-1;
/// 0 for a single observation). Median of an even-length list is the mean of
/// the two central values. Input order does not matter. Throws
/// std::invalid_argument on an empty list.
SummaryStats summarize(std::span<const double> times);

struct BenchRow {
    std::string name;
    SummaryStats stats;
    /// Data-dependent accumulator over this converter's outputs. Keeps the
    /// timed loop observable; equal seeds give equal checksums.
    std::uint64_t checksum = 0;
    /// Loop-bound converters are measured but kept out of the headline block;
    /// comparing them against the O(1) mask forms would be unfair.
    bool loop_bound = false;
};

struct BenchReport {
    BenchConfig config;
    std::string rng_name = "mt19937_64";
    std::string clock_name = "steady_clock";
    double timer_resolution_ns = 0;
    /// FNV-1a digest of the shared input buffer. Identical seeds and widths
    /// produce identical digests.
    std::uint64_t input_digest = 0;
    /// Empty unless the timer is too coarse for the configured batch size.
    std::string warning;
    /// Headline rows first, then loop-bound rows, each block sorted by mean.
    std::vector<BenchRow> rows;

    /// Aligned text table with the config echo and environment note.
    std::string text() const;
};

/// Runs the measurement: per converter, one untimed warmup pass, then
/// `sample_count` timed passes over a shared buffer of `evals_per_sample`
/// random inputs. Per-evaluation time = sample time / evals_per_sample.
/// Strictly single-threaded. Throws std::invalid_argument on an invalid
/// config (zero counts, input_bits outside [1, 62], empty converter set).
BenchReport run_bench(const BenchConfig& config);

}  // namespace csd::bench

#endif  // CSD_BENCH_HPP
