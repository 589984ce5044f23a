#include "csd/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace csd::bench {

SummaryStats summarize(std::span<const double> times) {
    if (times.empty()) throw std::invalid_argument("summarize: empty list");
    std::vector<double> sorted(times.begin(), times.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    SummaryStats s;
    s.min = sorted.front();
    s.max = sorted.back();
    s.median = (n % 2 == 1) ? sorted[n / 2]
                            : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;

    double sum = 0;
    for (double t : sorted) sum += t;
    s.mean = sum / static_cast<double>(n);

    if (n == 1) {
        s.stddev = 0;
    } else {
        double ss = 0;
        for (double t : sorted) {
            const double d = t - s.mean;
            ss += d * d;
        }
        s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

namespace {

using Clock = std::chrono::steady_clock;

double to_ns(Clock::duration d) {
    return std::chrono::duration<double, std::nano>(d).count();
}

// Smallest nonzero gap observed between back-to-back clock reads.
double measure_timer_resolution_ns() {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 256; ++i) {
        const auto a = Clock::now();
        auto b = Clock::now();
        while (b == a) b = Clock::now();
        best = std::min(best, to_ns(b - a));
    }
    return best;
}

std::uint64_t fnv1a(std::span<const std::uint64_t> values) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t v : values) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xff;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

void validate(const BenchConfig& config) {
    if (config.sample_count < 1)
        throw std::invalid_argument("run_bench: sample_count must be >= 1");
    if (config.evals_per_sample < 1)
        throw std::invalid_argument("run_bench: evals_per_sample must be >= 1");
    if (config.input_bits < 1 || config.input_bits > kMaxWordlength)
        throw std::invalid_argument("run_bench: input_bits must be in [1, 62]");
    if (config.converters.empty())
        throw std::invalid_argument("run_bench: converter set must be nonempty");
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
    validate(config);

    BenchReport report;
    report.config = config;
    report.timer_resolution_ns = measure_timer_resolution_ns();

    std::mt19937_64 rng(config.rng_seed);
    const std::uint64_t mask = (1ull << config.input_bits) - 1;
    std::vector<std::uint64_t> raw(config.evals_per_sample);
    for (auto& v : raw) v = rng() & mask;
    report.input_digest = fnv1a(raw);

    std::vector<BinaryWord> inputs;
    inputs.reserve(raw.size());
    for (std::uint64_t v : raw) inputs.emplace_back(v, config.input_bits);

    std::vector<double> samples(config.sample_count);
    double min_sample_ns = std::numeric_limits<double>::infinity();

    for (ConverterId id : config.converters) {
        const ConverterFn fn = converter_fn(id);
        std::uint64_t sink = 0;

        for (const BinaryWord& x : inputs) {  // warmup, untimed
            const CsdRep r = fn(x);
            sink = std::rotl(sink, 1) ^ (r.plus_mask + (r.minus_mask << 1));
        }

        for (std::uint64_t s = 0; s < config.sample_count; ++s) {
            const auto t0 = Clock::now();
            for (const BinaryWord& x : inputs) {
                const CsdRep r = fn(x);
                sink = std::rotl(sink, 1) ^ (r.plus_mask + (r.minus_mask << 1));
            }
            const auto t1 = Clock::now();
            const double sample_ns = to_ns(t1 - t0);
            min_sample_ns = std::min(min_sample_ns, sample_ns);
            samples[s] = sample_ns / static_cast<double>(config.evals_per_sample);
        }

        BenchRow row;
        row.name = std::string(to_string(id));
        row.stats = summarize(samples);
        row.checksum = sink;
        row.loop_bound = (id == ConverterId::ruiz_granda);
        report.rows.push_back(std::move(row));
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const BenchRow& a, const BenchRow& b) {
                  if (a.loop_bound != b.loop_bound) return !a.loop_bound;
                  return a.stats.mean < b.stats.mean;
              });

    if (min_sample_ns < 100.0 * report.timer_resolution_ns) {
        std::ostringstream w;
        w << "timer resolution " << report.timer_resolution_ns
          << " ns is coarse relative to the shortest sample (" << min_sample_ns
          << " ns); statistics may be quantized. Increase evals_per_sample.";
        report.warning = w.str();
    }
    return report;
}

namespace {

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void print_block(std::ostringstream& os, const std::vector<BenchRow>& rows,
                 bool loop_bound) {
    for (const auto& row : rows) {
        if (row.loop_bound != loop_bound) continue;
        os << "  " << row.name;
        for (std::size_t pad = row.name.size(); pad < 22; ++pad) os << ' ';
        const std::string cols[] = {fmt3(row.stats.min), fmt3(row.stats.max),
                                    fmt3(row.stats.median), fmt3(row.stats.mean),
                                    fmt3(row.stats.stddev)};
        for (const auto& c : cols) {
            for (std::size_t pad = c.size(); pad < 10; ++pad) os << ' ';
            os << c;
        }
        char cs[32];
        std::snprintf(cs, sizeof cs, "  %016llx",
                      static_cast<unsigned long long>(row.checksum));
        os << cs << "\n";
    }
}

}  // namespace

std::string BenchReport::text() const {
    std::ostringstream os;
    os << "benchmark: " << config.sample_count << " samples x "
       << config.evals_per_sample << " evals, " << config.input_bits
       << "-bit inputs, seed " << config.rng_seed << "\n";
    os << "environment: rng " << rng_name << ", clock " << clock_name
       << " (resolution " << fmt3(timer_resolution_ns) << " ns)\n";
    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(input_digest));
    os << "input digest: " << digest << "\n";
    if (!warning.empty()) os << "warning: " << warning << "\n";
    os << "\n";
    os << "  algorithm                    min       max    median      mean"
          "   std dev  checksum (ns per evaluation)\n";

    print_block(os, rows, false);
    const bool have_flagged =
        std::any_of(rows.begin(), rows.end(),
                    [](const BenchRow& r) { return r.loop_bound; });
    if (have_flagged) {
        os << "  -- loop-bound, excluded from headline table --\n";
        print_block(os, rows, true);
    }
    return os.str();
}

}  // namespace csd::bench
