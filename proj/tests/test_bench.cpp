#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "csd/bench.hpp"

using namespace csd;
using namespace csd::bench;

TEST_CASE("summarize pinned values") {
    const std::vector<double> a{1, 2, 3, 4};
    const SummaryStats s = summarize(a);
    CHECK(s.min == 1);
    CHECK(s.max == 4);
    CHECK(s.median == 2.5);
    CHECK(s.mean == 2.5);
    CHECK(s.stddev == doctest::Approx(1.290994).epsilon(1e-6));

    const std::vector<double> single{5};
    const SummaryStats t = summarize(single);
    CHECK(t.min == 5);
    CHECK(t.max == 5);
    CHECK(t.median == 5);
    CHECK(t.mean == 5);
    CHECK(t.stddev == 0);

    const std::vector<double> odd{3, 1, 2};
    CHECK(summarize(odd).median == 2);
}

TEST_CASE("summarize is permutation invariant") {
    std::vector<double> xs{9.5, 1.25, 4.0, 4.0, 7.75, 2.5};
    const SummaryStats base = summarize(xs);
    std::sort(xs.begin(), xs.end());
    do {
        const SummaryStats s = summarize(xs);
        CHECK(s.min == base.min);
        CHECK(s.max == base.max);
        CHECK(s.median == base.median);
        CHECK(s.mean == base.mean);
        CHECK(s.stddev == base.stddev);
    } while (std::next_permutation(xs.begin(), xs.end()));
}

TEST_CASE("summarize rejects an empty list") {
    const std::vector<double> empty;
    CHECK_THROWS_AS(summarize(empty), std::invalid_argument);
}

TEST_CASE("tiny run aggregates the configured sample count") {
    BenchConfig config;
    config.sample_count = 2;
    config.evals_per_sample = 2;
    config.converters = {ConverterId::garner_revisited};
    const BenchReport report = run_bench(config);
    REQUIRE(report.rows.size() == 1);
    const SummaryStats& s = report.rows[0].stats;
    CHECK(s.min <= s.mean);
    CHECK(s.mean <= s.max);
    CHECK(s.min <= s.median);
    CHECK(s.median <= s.max);
    CHECK(s.stddev >= 0);
}

TEST_CASE("equal seeds give identical inputs and checksums") {
    BenchConfig config;
    config.sample_count = 3;
    config.evals_per_sample = 64;
    config.rng_seed = 2718;
    config.converters = {ConverterId::bin2naf, ConverterId::garner_revisited};

    const BenchReport a = run_bench(config);
    const BenchReport b = run_bench(config);
    CHECK(a.input_digest == b.input_digest);
    REQUIRE(a.rows.size() == 2);
    REQUIRE(b.rows.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(a.rows[i].checksum == b.rows[i].checksum);
    // Same inputs, equivalent converters: the output streams coincide too.
    CHECK(a.rows[0].checksum == a.rows[1].checksum);

    config.rng_seed = 2719;
    CHECK(run_bench(config).input_digest != a.input_digest);
}

TEST_CASE("rows come back sorted by mean with loop-bound rows set apart") {
    BenchConfig config;
    config.sample_count = 4;
    config.evals_per_sample = 256;
    const BenchReport report = run_bench(config);
    REQUIRE(report.rows.size() == all_converters().size());

    const auto split = std::find_if(report.rows.begin(), report.rows.end(),
                                    [](const BenchRow& r) { return r.loop_bound; });
    for (auto it = split; it != report.rows.end(); ++it)
        CHECK(it->loop_bound);  // flagged rows form a trailing block
    for (auto it = report.rows.begin(); it != split; ++it) {
        CHECK_FALSE(it->loop_bound);
        if (it + 1 != split) CHECK(it->stats.mean <= (it + 1)->stats.mean);
    }

    const auto ruiz = std::find_if(report.rows.begin(), report.rows.end(),
                                   [](const BenchRow& r) {
                                       return r.name == "ruiz_granda";
                                   });
    REQUIRE(ruiz != report.rows.end());
    CHECK(ruiz->loop_bound);

    const std::string table = report.text();
    CHECK(table.find("loop-bound, excluded from headline table") !=
          std::string::npos);
    CHECK(table.find("garner_revisited") != std::string::npos);
}

TEST_CASE("config validation") {
    BenchConfig config;
    config.sample_count = 0;
    CHECK_THROWS_AS(run_bench(config), std::invalid_argument);

    config = BenchConfig{};
    config.evals_per_sample = 0;
    CHECK_THROWS_AS(run_bench(config), std::invalid_argument);

    config = BenchConfig{};
    config.input_bits = 63;
    CHECK_THROWS_AS(run_bench(config), std::invalid_argument);

    config = BenchConfig{};
    config.converters.clear();
    CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
}
