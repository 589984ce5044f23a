#ifndef CSD_JSON_IO_HPP
#define CSD_JSON_IO_HPP

#include <cstdio>
#include <string>

#include <json.hpp>

#include "csd/bench.hpp"
#include "csd/core.hpp"
#include "csd/oracle.hpp"

/// Structured-output schema. Every document is a single self-describing JSON
/// object with a "kind" discriminator; 64-bit bit patterns (masks, digests,
/// checksums) are zero-padded lowercase hex strings so consumers never hit
/// double-precision integer limits.
namespace csd::json_io {

inline std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline nlohmann::json convert_doc(const BinaryWord& x, ConverterId id,
                                  const CsdRep& rep) {
    nlohmann::json digits = nlohmann::json::array();
    for (int i = static_cast<int>(rep.wordlength); i >= 0; --i)
        digits.push_back(rep.digit(i));
    return nlohmann::json{
        {"kind", "convert"},
        {"value", x.value()},
        {"wordlength", rep.wordlength},
        {"algorithm", std::string(to_string(id))},
        {"compact", to_compact_string(rep)},
        {"digits", std::move(digits)},
        {"plus_mask", hex64(rep.plus_mask)},
        {"minus_mask", hex64(rep.minus_mask)},
        {"weight", weight(rep)},
    };
}

inline nlohmann::json check_doc(const oracle::CrossCheckReport& report) {
    nlohmann::json converters = nlohmann::json::array();
    for (const auto& check : report.converters) {
        nlohmann::json entry{
            {"name", check.name},
            {"mismatches", check.mismatches},
            {"first_mismatch", nullptr},
        };
        if (check.first_mismatch) entry["first_mismatch"] = *check.first_mismatch;
        converters.push_back(std::move(entry));
    }
    nlohmann::json doc{
        {"kind", "check"},
        {"domain", report.domain},
        {"reference", report.reference},
        {"inputs", report.inputs},
        {"converters", std::move(converters)},
        {"invariant_violations", report.invariant_violations},
        {"first_invariant_violation", nullptr},
        {"total_mismatches", report.total_mismatches()},
        {"passed", report.passed()},
    };
    if (report.first_invariant_violation)
        doc["first_invariant_violation"] = *report.first_invariant_violation;
    return doc;
}

inline nlohmann::json bench_doc(const bench::BenchReport& report) {
    nlohmann::json names = nlohmann::json::array();
    for (ConverterId id : report.config.converters)
        names.push_back(std::string(to_string(id)));
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back(nlohmann::json{
            {"name", row.name},
            {"min_ns", row.stats.min},
            {"max_ns", row.stats.max},
            {"median_ns", row.stats.median},
            {"mean_ns", row.stats.mean},
            {"stddev_ns", row.stats.stddev},
            {"checksum", hex64(row.checksum)},
            {"loop_bound", row.loop_bound},
        });
    }
    nlohmann::json doc{
        {"kind", "bench"},
        {"config",
         nlohmann::json{
             {"sample_count", report.config.sample_count},
             {"evals_per_sample", report.config.evals_per_sample},
             {"rng_seed", report.config.rng_seed},
             {"input_bits", report.config.input_bits},
             {"converters", std::move(names)},
         }},
        {"rng", report.rng_name},
        {"clock", report.clock_name},
        {"timer_resolution_ns", report.timer_resolution_ns},
        {"input_digest", hex64(report.input_digest)},
        {"warning", nullptr},
        {"rows", std::move(rows)},
    };
    if (!report.warning.empty()) doc["warning"] = report.warning;
    return doc;
}

inline nlohmann::json wblock_doc(const std::vector<std::uint64_t>& terms) {
    return nlohmann::json{
        {"kind", "wblock"},
        {"count", terms.size()},
        {"terms", terms},
    };
}

}  // namespace csd::json_io

#endif  // CSD_JSON_IO_HPP
