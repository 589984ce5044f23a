// Acceptance suite: nine go/no-go checks covering converter equivalence,
// oracle-certified minimality and uniqueness, the published worked examples,
// the carry and trace identities, and the benchmark harness contract. Prints
// one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "csd/bench.hpp"
#include "csd/converters.hpp"
#include "csd/core.hpp"
#include "csd/oracle.hpp"
#include "csd/strsub.hpp"

using namespace csd;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// 1. Every converter produces bit-identical masks on [0, 2^20) and on 10^6
//    seeded 62-bit values. 2. Every output in that domain preserves the value
//    and satisfies the canonical-form mask identities. The two reports carry
//    both verdicts: mismatch counts for (1), invariant violations for (2).
oracle::CrossCheckReport g_range_report;
oracle::CrossCheckReport g_random_report;

Outcome criterion1() {
    g_range_report = oracle::cross_check_range(0, 1ull << 20);
    g_random_report = oracle::cross_check_random(1000000, 62, 1);
    Outcome o;
    o.pass = g_range_report.total_mismatches() == 0 &&
             g_random_report.total_mismatches() == 0;
    std::ostringstream d;
    d << "11 converters, " << g_range_report.inputs << " exhaustive + "
      << g_random_report.inputs << " random inputs, "
      << g_range_report.total_mismatches() + g_random_report.total_mismatches()
      << " mismatches";
    o.detail = d.str();
    return o;
}

Outcome criterion2() {
    Outcome o;
    o.pass = g_range_report.invariant_violations == 0 &&
             g_random_report.invariant_violations == 0;
    std::ostringstream d;
    d << "value preservation and non-adjacency over the criterion-1 domain, "
      << g_range_report.invariant_violations + g_random_report.invariant_violations
      << " violations";
    o.detail = d.str();
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::uint64_t checked = 0;
    for (std::uint64_t x = 0; x < (1ull << 12); ++x) {
        if (weight(bin2naf(BinaryWord(x))) != oracle::min_weight(x)) {
            o.pass = false;
            o.detail = "weight mismatch at x = " + std::to_string(x);
            return o;
        }
        ++checked;
    }
    o.detail = "weight(bin2naf(x)) = oracle minimum for all " +
               std::to_string(checked) + " inputs below 2^12";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (std::uint64_t x = 0; x < (1ull << 10); ++x) {
        const BinaryWord word(x);
        const unsigned len = word.wordlength() + 1;
        if (oracle::count_naf_reps(x, len) != 1) {
            o.pass = false;
            o.detail = "non-adjacent candidate count != 1 at x = " +
                       std::to_string(x);
            return o;
        }
        const auto reps = oracle::enumerate_sd_reps(x, len);
        const auto it = std::find_if(
            reps.begin(), reps.end(),
            [](const oracle::SdCandidate& c) { return c.non_adjacent(); });
        const CsdRep ref = bin2naf(word);
        for (unsigned i = 0; i < len; ++i) {
            if (static_cast<int>(it->digits[i]) != ref.digit(static_cast<int>(i))) {
                o.pass = false;
                o.detail = "unique candidate differs from bin2naf at x = " +
                           std::to_string(x);
                return o;
            }
        }
    }
    o.detail =
        "exactly one non-adjacent representation per x < 2^10, equal to bin2naf";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::vector<std::string> failures;
    const auto expect = [&](std::uint64_t value, unsigned n,
                            const std::string& want) {
        for (ConverterId id : all_converters()) {
            const std::string got =
                to_compact_string(convert(id, BinaryWord(value, n)));
            if (got != want) {
                failures.push_back(std::string(to_string(id)) + "(" +
                                   std::to_string(value) + ") = " + got +
                                   ", want " + want);
                return;
            }
        }
    };

    // The five published 12-digit substitution examples.
    expect(56, 11, "00000+00-000");
    expect(696, 11, "0+0-0-00-000");
    expect(569, 11, "00+00+00-00+");
    expect(571, 11, "00+00+000-0-");
    expect(48, 11, "00000+0-0000");
    // The boxed sub-patterns inside them.
    expect(7, 4, "0+00-");
    expect(87, 8, "0+0-0-00-");
    expect(59, 7, "0+000-0-");
    expect(3, 3, "0+0-");

    // The three classic signed-digit forms of 7; the converters must pick the
    // weight-2 one.
    const auto reps = oracle::enumerate_sd_reps(7, 5);
    const auto has = [&](std::vector<std::int8_t> digits) {
        return std::any_of(reps.begin(), reps.end(),
                           [&](const oracle::SdCandidate& c) {
                               return c.digits == digits;
                           });
    };
    if (!has({1, 1, -1, 1, 0}) || !has({1, -1, 0, 1, 0}) ||
        !has({-1, 0, 0, 1, 0}))
        failures.push_back("enumerator missed one of the three forms of 7");
    if (weight(bin2naf(BinaryWord(7))) != 2)
        failures.push_back("converter did not pick the weight-2 form of 7");

    // The two quoted rule-table rows.
    if (!(fsm_step({false, true, true}) == FsmOutput{-1, true}))
        failures.push_back("rule row (f=0, x1=1, x0=1) wrong");
    if (!(fsm_step({true, false, false}) == FsmOutput{1, false}))
        failures.push_back("rule row (f=1, x1=0, x0=0) wrong");

    o.pass = failures.empty();
    o.detail = o.pass ? "9 published digit strings, 3 enumerated forms of 7, "
                        "2 rule-table rows"
                      : failures.front();
    return o;
}

Outcome criterion6() {
    static constexpr std::array<std::uint64_t, 88> kPublished = {
        3,    7,    11,   15,   23,   27,   31,   43,   47,   55,   59,
        63,   87,   91,   95,   107,  111,  119,  123,  127,  171,  175,
        183,  187,  191,  215,  219,  223,  235,  239,  247,  251,  255,
        343,  347,  351,  363,  367,  375,  379,  383,  427,  431,  439,
        443,  447,  471,  475,  479,  491,  495,  503,  507,  511,  683,
        687,  695,  699,  703,  727,  731,  735,  747,  751,  759,  763,
        767,  855,  859,  863,  875,  879,  887,  891,  895,  939,  943,
        951,  955,  959,  983,  987,  991,  1003, 1007, 1015, 1019, 1023};
    Outcome o;
    const auto terms = wblock_sequence(kPublished.size());
    for (std::size_t i = 0; i < kPublished.size(); ++i) {
        if (terms[i] != kPublished[i]) {
            o.pass = false;
            o.detail = "term " + std::to_string(i + 1) + " is " +
                       std::to_string(terms[i]) + ", want " +
                       std::to_string(kPublished[i]);
            return o;
        }
    }
    o.detail = "all 88 published w-block terms reproduced in order";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::uint64_t checked = 0;
    for (std::uint64_t a = 0; a < 64; ++a)
        for (std::uint64_t b = 0; b < 64; ++b) {
            if (!(get_carry(a, b) == carry_recurrence_oracle(a, b))) {
                o.pass = false;
                o.detail = "carry mismatch at (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")";
                return o;
            }
            ++checked;
        }
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100000; ++trial) {
        const std::uint64_t a = rng() >> 2;
        const std::uint64_t b = rng() >> 2;
        if (!(get_carry(a, b) == carry_recurrence_oracle(a, b))) {
            o.pass = false;
            o.detail = "carry mismatch at random pair (" + std::to_string(a) +
                       ", " + std::to_string(b) + ")";
            return o;
        }
        ++checked;
    }
    o.detail = "xor shortcut = full-adder recurrence on " +
               std::to_string(checked) + " pairs";
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (std::uint64_t x = 0; x < (1ull << 16); ++x) {
        const BinaryWord word(x);
        ConvTrace loop_trace{}, mask_trace{}, scan_trace{};
        reitwiesner(word, loop_trace);
        reitwiesner_modified(word, mask_trace);
        string_0(word, scan_trace);

        std::uint64_t expected_g = 0;
        for (unsigned i = 0; i <= word.wordlength(); ++i) {
            const std::uint64_t gi =
                ((mask_trace.c >> (i + 1)) ^ (x >> i)) & 1u;
            expected_g |= gi << i;
        }
        if (loop_trace.g != expected_g || mask_trace.g != expected_g) {
            o.pass = false;
            o.detail = "g identity fails at x = " + std::to_string(x);
            return o;
        }
        if (scan_trace.f != get_carry(x, x >> 1).carry_mask) {
            o.pass = false;
            o.detail = "f identity fails at x = " + std::to_string(x);
            return o;
        }
    }
    o.detail = "g = c(x+2x) >> 1 ^ x and f = c(x+x/2) for all x < 2^16";
    return o;
}

Outcome criterion9() {
    Outcome o;
    const bench::BenchConfig config;  // the protocol defaults
    const bench::BenchReport report = bench::run_bench(config);
    std::ostringstream d;

    if (report.rows.size() != all_converters().size()) {
        o.pass = false;
        o.detail = "row count != converter count";
        return o;
    }
    double prev_mean = 0;
    bool seen_flagged = false;
    for (const auto& row : report.rows) {
        const auto& s = row.stats;
        if (!(s.min <= s.median && s.median <= s.max)) {
            o.pass = false;
            o.detail = "ordering min <= median <= max violated for " + row.name;
            return o;
        }
        if (row.loop_bound) seen_flagged = true;
        if (!seen_flagged) {
            if (s.mean < prev_mean) {
                o.pass = false;
                o.detail = "headline rows not sorted by mean";
                return o;
            }
            prev_mean = s.mean;
        }
    }

    const bench::BenchReport rerun = bench::run_bench(config);
    if (report.input_digest != rerun.input_digest) {
        o.pass = false;
        o.detail = "same seed produced different input buffers";
        return o;
    }

    // Qualitative comparison; reported, never asserted.
    const auto median_of = [&](const char* name) {
        for (const auto& row : report.rows)
            if (row.name == name) return row.stats.median;
        return -1.0;
    };
    const double mask_worst = std::max(
        {median_of("garner_masked"), median_of("garner_revisited"),
         median_of("bin2naf"), median_of("reitwiesner_modified")});
    const double loop_best = std::min({median_of("reitwiesner"),
                                       median_of("naf"), median_of("string_0")});
    d << "5-statistic table, " << report.rows.size()
      << " rows sorted by mean, stable input digest; mask-form medians <= "
      << mask_worst << " ns vs loop-form medians >= " << loop_best
      << " ns (mask faster: " << (mask_worst < loop_best ? "yes" : "no") << ")";
    if (!report.warning.empty()) d << "; note: " << report.warning;
    o.detail = d.str();
    return o;
}

}  // namespace

int main() {
    struct Row {
        const char* title;
        Outcome (*fn)();
    };
    const Row rows[] = {
        {"cross-equivalence of all converters", criterion1},
        {"value preservation and non-adjacency", criterion2},
        {"minimal Hamming weight vs oracle", criterion3},
        {"uniqueness of the non-adjacent form", criterion4},
        {"published worked examples", criterion5},
        {"w-block sequence, 88 terms", criterion6},
        {"carry shortcut vs recurrence", criterion7},
        {"g and f trace identities", criterion8},
        {"benchmark harness contract", criterion9},
    };

    int failures = 0;
    int index = 0;
    for (const Row& row : rows) {
        ++index;
        const Outcome o = row.fn();
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << index << ". "
                  << row.title << ": " << o.detail << "\n";
        if (!o.pass) ++failures;
    }
    if (failures > 0)
        std::cout << failures << " of 9 criteria failed" << std::endl;
    else
        std::cout << "all 9 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
