// csd: convert integers to canonical signed-digit form, cross-check the
// converter family against the bin2naf reference, list w-block numbers, and
// benchmark the converters.
//
// Exit codes: 0 success, 1 validation mismatch, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csd/bench.hpp"
#include "csd/converters.hpp"
#include "csd/core.hpp"
#include "csd/json_io.hpp"
#include "csd/oracle.hpp"
#include "csd/strsub.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string converter_names_csv() {
    std::string out;
    for (csd::ConverterId id : csd::all_converters()) {
        if (!out.empty()) out += ", ";
        out += std::string(csd::to_string(id));
    }
    return out;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

bool write_doc(const nlohmann::json& doc, const std::string& out_path) {
    if (out_path.empty()) return true;
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return false;
    }
    out << doc.dump(2) << "\n";
    return true;
}

struct ConvertArgs {
    std::uint64_t value = 0;
    std::optional<unsigned> wordlength;
    std::string algo = "bin2naf";
    std::string format = "compact-string";
    std::string out_path;
};

int run_convert(const ConvertArgs& args) {
    const auto id = csd::parse_converter_id(args.algo);
    if (!id)
        return usage_error("unknown algorithm '" + args.algo +
                           "'; valid ids: " + converter_names_csv());

    std::optional<csd::BinaryWord> x;
    try {
        x = args.wordlength ? csd::BinaryWord(args.value, *args.wordlength)
                            : csd::BinaryWord(args.value);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    const csd::CsdRep rep = csd::convert(*id, *x);
    if (args.format == "compact-string") {
        std::cout << csd::to_compact_string(rep) << "\n";
    } else if (args.format == "digit-list") {
        std::cout << csd::to_digit_list(rep) << "\n";
    } else if (args.format == "mask-pair") {
        std::cout << "plus=0x" << std::hex << rep.plus_mask << " minus=0x"
                  << rep.minus_mask << std::dec << "\n";
    } else if (args.format == "structured") {
        std::cout << csd::json_io::convert_doc(*x, *id, rep).dump(2) << "\n";
    } else {
        return usage_error("unknown format '" + args.format +
                           "'; valid: compact-string, digit-list, mask-pair, "
                           "structured");
    }
    if (!args.out_path.empty() &&
        !write_doc(csd::json_io::convert_doc(*x, *id, rep), args.out_path))
        return kExitUsage;
    return kExitOk;
}

struct CheckArgs {
    std::string range_spec;
    std::uint64_t random_count = 0;
    unsigned bits = 32;
    std::uint64_t seed = 1;
    std::string algos_csv;
    std::string format = "text";
    std::string out_path;
};

std::optional<std::vector<csd::ConverterId>> parse_algos(const std::string& csv) {
    std::vector<csd::ConverterId> ids;
    if (csv.empty()) {
        ids.assign(csd::all_converters().begin(), csd::all_converters().end());
        return ids;
    }
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto id = csd::parse_converter_id(token);
        if (!id) return std::nullopt;
        ids.push_back(*id);
    }
    if (ids.empty()) return std::nullopt;
    return ids;
}

int run_check(const CheckArgs& args) {
    const auto ids = parse_algos(args.algos_csv);
    if (!ids)
        return usage_error("bad --algos list; valid ids: " + converter_names_csv());
    if (args.range_spec.empty() && args.random_count == 0)
        return usage_error("check needs --range LO:HI or --random COUNT");
    if (!args.range_spec.empty() && args.random_count != 0)
        return usage_error("--range and --random are mutually exclusive");

    csd::oracle::CrossCheckReport report;
    try {
        if (!args.range_spec.empty()) {
            const auto colon = args.range_spec.find(':');
            if (colon == std::string::npos)
                return usage_error("--range wants LO:HI, got '" + args.range_spec +
                                   "'");
            std::uint64_t lo = 0, hi = 0;
            try {
                lo = std::stoull(args.range_spec.substr(0, colon));
                hi = std::stoull(args.range_spec.substr(colon + 1));
            } catch (const std::exception&) {
                return usage_error("--range wants numeric LO:HI, got '" +
                                   args.range_spec + "'");
            }
            report = csd::oracle::cross_check_range(lo, hi, *ids);
        } else {
            report = csd::oracle::cross_check_random(args.random_count, args.bits,
                                                     args.seed, *ids);
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    if (args.format == "structured")
        std::cout << csd::json_io::check_doc(report).dump(2) << "\n";
    else
        std::cout << report.text();
    if (!args.out_path.empty() &&
        !write_doc(csd::json_io::check_doc(report), args.out_path))
        return kExitUsage;
    return report.passed() ? kExitOk : kExitMismatch;
}

struct WblockArgs {
    std::uint64_t count = 0;
    std::string format = "text";
    std::string out_path;
};

int run_wblock(const WblockArgs& args) {
    std::vector<std::uint64_t> terms;
    try {
        terms = csd::wblock_sequence(args.count);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (args.format == "structured") {
        std::cout << csd::json_io::wblock_doc(terms).dump(2) << "\n";
    } else {
        for (std::uint64_t t : terms) std::cout << t << "\n";
    }
    if (!args.out_path.empty() &&
        !write_doc(csd::json_io::wblock_doc(terms), args.out_path))
        return kExitUsage;
    return kExitOk;
}

struct BenchArgs {
    std::uint64_t samples = 1000;
    std::uint64_t evals = 1000;
    std::uint64_t seed = 1;
    unsigned bits = 32;
    std::string algos_csv;
    std::string format = "text";
    std::string out_path;
};

int run_bench_cmd(const BenchArgs& args) {
    const auto ids = parse_algos(args.algos_csv);
    if (!ids)
        return usage_error("bad --algos list; valid ids: " + converter_names_csv());

    csd::bench::BenchConfig config;
    config.sample_count = args.samples;
    config.evals_per_sample = args.evals;
    config.rng_seed = args.seed;
    config.input_bits = args.bits;
    config.converters = *ids;

    csd::bench::BenchReport report;
    try {
        report = csd::bench::run_bench(config);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    if (args.format == "structured")
        std::cout << csd::json_io::bench_doc(report).dump(2) << "\n";
    else
        std::cout << report.text();
    if (!args.out_path.empty() &&
        !write_doc(csd::json_io::bench_doc(report), args.out_path))
        return kExitUsage;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical signed-digit recoding toolkit"};
    app.require_subcommand(1);

    const std::string format_help =
        "output format: compact-string | digit-list | mask-pair | structured";

    ConvertArgs conv;
    auto* conv_cmd = app.add_subcommand("convert", "convert a value to CSD form");
    conv_cmd->add_option("value", conv.value, "input value, < 2^62")->required();
    unsigned conv_n = 0;
    auto* conv_n_opt =
        conv_cmd->add_option("--n", conv_n, "wordlength (default: bit length)");
    conv_cmd->add_option("--algo", conv.algo,
                         "algorithm id (default bin2naf): " + converter_names_csv());
    conv_cmd->add_option("--format", conv.format, format_help);
    conv_cmd->add_option("--out", conv.out_path, "write structured report here");

    CheckArgs check;
    auto* check_cmd =
        app.add_subcommand("check", "cross-check converters against bin2naf");
    check_cmd->add_option("--range", check.range_spec, "input range LO:HI");
    check_cmd->add_option("--random", check.random_count, "random input count");
    check_cmd->add_option("--bits", check.bits, "random input width (default 32)");
    check_cmd->add_option("--seed", check.seed, "rng seed (default 1)")
        ->envname("CSD_SEED");
    check_cmd->add_option("--algos", check.algos_csv,
                          "comma-separated converter ids (default: all)");
    check_cmd->add_option("--format", check.format, "text | structured");
    check_cmd->add_option("--out", check.out_path, "write structured report here");

    WblockArgs wblock;
    auto* wblock_cmd =
        app.add_subcommand("wblock", "list integers whose binary form is a w-block");
    wblock_cmd->add_option("count", wblock.count, "number of terms, >= 1")
        ->required();
    wblock_cmd->add_option("--format", wblock.format, "text | structured");
    wblock_cmd->add_option("--out", wblock.out_path, "write structured report here");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "benchmark the converters");
    bench_cmd->add_option("--samples", bench.samples, "sample count (default 1000)")
        ->envname("CSD_BENCH_SAMPLES");
    bench_cmd
        ->add_option("--evals", bench.evals,
                     "evaluations per sample (default 1000)")
        ->envname("CSD_BENCH_EVALS");
    bench_cmd->add_option("--seed", bench.seed, "rng seed (default 1)")
        ->envname("CSD_SEED");
    bench_cmd->add_option("--bits", bench.bits, "input width (default 32)");
    bench_cmd->add_option("--algos", bench.algos_csv,
                          "comma-separated converter ids (default: all)");
    bench_cmd->add_option("--format", bench.format, "text | structured");
    bench_cmd->add_option("--out", bench.out_path, "write structured report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (conv_cmd->parsed()) {
        if (conv_n_opt->count() > 0) conv.wordlength = conv_n;
        return run_convert(conv);
    }
    if (check_cmd->parsed()) return run_check(check);
    if (wblock_cmd->parsed()) return run_wblock(wblock);
    if (bench_cmd->parsed()) return run_bench_cmd(bench);
    return kExitUsage;
}
