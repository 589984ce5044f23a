#include "csd/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace csd::oracle {

std::int64_t SdCandidate::value() const noexcept {
    std::int64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        v = 2 * v + digits[i];
    return v;
}

unsigned SdCandidate::weight() const noexcept {
    unsigned w = 0;
    for (std::int8_t d : digits) w += (d != 0);
    return w;
}

bool SdCandidate::non_adjacent() const noexcept {
    for (std::size_t i = 0; i + 1 < digits.size(); ++i)
        if (digits[i] != 0 && digits[i + 1] != 0) return false;
    return true;
}

namespace {

void check_enum_guards(std::uint64_t x, unsigned max_len) {
    if (max_len > 16)
        throw std::invalid_argument("enumerate_sd_reps: max_len must be <= 16");
    if (max_len < kWordBits && (x >> max_len) != 0)
        throw std::invalid_argument("enumerate_sd_reps: x must be < 2^max_len");
}

// Walks all completions of the current prefix. `remainder` is the value the
// digits at positions pos..len-1 still have to produce, already divided by
// 2^pos. Digits are tried in the order -1, 0, +1, so candidates come out in
// lexicographic order.
template <class Emit>
void visit_reps(std::int64_t remainder, unsigned pos, unsigned len,
                std::vector<std::int8_t>& prefix, const Emit& emit) {
    if (pos == len) {
        if (remainder == 0) emit(prefix);
        return;
    }
    const unsigned rest = len - pos - 1;
    const std::int64_t bound = (1ll << rest) - 1;
    for (int d = -1; d <= 1; ++d) {
        const std::int64_t r = remainder - d;
        if (r & 1) continue;  // the remaining positions only reach even values
        const std::int64_t half = r / 2;
        if (half < -bound || half > bound) continue;
        prefix[pos] = static_cast<std::int8_t>(d);
        visit_reps(half, pos + 1, len, prefix, emit);
    }
    prefix[pos] = 0;
}

}  // namespace

std::vector<SdCandidate> enumerate_sd_reps(std::uint64_t x, unsigned max_len) {
    check_enum_guards(x, max_len);
    std::vector<SdCandidate> out;
    std::vector<std::int8_t> prefix(max_len, 0);
    visit_reps(static_cast<std::int64_t>(x), 0, max_len, prefix,
               [&](const std::vector<std::int8_t>& digits) {
                   SdCandidate cand{digits};
                   if (cand.value() != static_cast<std::int64_t>(x))
                       throw std::logic_error("enumerate_sd_reps: emitted candidate "
                                              "does not evaluate to x");
                   out.push_back(std::move(cand));
               });
    return out;
}

namespace {

constexpr unsigned kNoRep = 1u << 30;

unsigned min_weight_rec(std::int64_t remainder, unsigned len) {
    if (remainder == 0) return 0;
    if (len == 0) return kNoRep;
    const std::int64_t bound = (1ll << len) - 1;
    if (remainder < -bound || remainder > bound) return kNoRep;
    if ((remainder & 1) == 0) return min_weight_rec(remainder / 2, len - 1);
    const unsigned lo = min_weight_rec((remainder - 1) / 2, len - 1);
    const unsigned hi = min_weight_rec((remainder + 1) / 2, len - 1);
    return 1 + std::min(lo, hi);
}

}  // namespace

unsigned min_weight(std::uint64_t x, unsigned max_len) {
    if (max_len > kMaxWordlength + 1)
        throw std::invalid_argument("min_weight: max_len too large");
    if (max_len < kWordBits && (x >> max_len) != 0)
        throw std::invalid_argument("min_weight: x must be < 2^max_len");
    const unsigned w = min_weight_rec(static_cast<std::int64_t>(x), max_len);
    if (w >= kNoRep) throw std::logic_error("min_weight: no representation found");
    return w;
}

unsigned min_weight(std::uint64_t x) { return min_weight(x, bit_length(x) + 1); }

std::uint64_t count_naf_reps(std::uint64_t x, unsigned max_len) {
    check_enum_guards(x, max_len);
    std::uint64_t count = 0;
    std::vector<std::int8_t> prefix(max_len, 0);
    visit_reps(static_cast<std::int64_t>(x), 0, max_len, prefix,
               [&](const std::vector<std::int8_t>& digits) {
                   for (std::size_t i = 0; i + 1 < digits.size(); ++i)
                       if (digits[i] != 0 && digits[i + 1] != 0) return;
                   ++count;
               });
    return count;
}

std::uint64_t CrossCheckReport::total_mismatches() const noexcept {
    std::uint64_t total = 0;
    for (const auto& check : converters) total += check.mismatches;
    return total;
}

bool CrossCheckReport::passed() const noexcept {
    return total_mismatches() == 0 && invariant_violations == 0;
}

std::string CrossCheckReport::text() const {
    std::ostringstream os;
    os << "cross-check: " << domain << "\n";
    os << "reference: " << reference << "\n";
    os << "inputs: " << inputs << "\n";
    for (const auto& check : converters) {
        os << "  " << check.name;
        for (std::size_t pad = check.name.size(); pad < 22; ++pad) os << ' ';
        os << "mismatches: " << check.mismatches;
        if (check.first_mismatch) os << "  (first at x = " << *check.first_mismatch << ")";
        os << "\n";
    }
    os << "invariant violations: " << invariant_violations;
    if (first_invariant_violation)
        os << "  (first at x = " << *first_invariant_violation << ")";
    os << "\n";
    os << "result: " << (passed() ? "PASS" : "FAIL") << " (" << total_mismatches()
       << " mismatches)\n";
    return os.str();
}

namespace {

struct WorkerTally {
    std::vector<std::uint64_t> mismatches;
    std::vector<std::optional<std::uint64_t>> first;
    std::uint64_t invariant_violations = 0;
    std::optional<std::uint64_t> first_invariant_violation;
};

void run_block(std::uint64_t begin, std::uint64_t end,
               const std::function<BinaryWord(std::uint64_t)>& input_at,
               const std::vector<Subject>& subjects, WorkerTally& tally) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const BinaryWord x = input_at(idx);
        const CsdRep ref = bin2naf(x);
        if (!is_canonical(ref) ||
            value_of(ref) != static_cast<std::int64_t>(x.value())) {
            ++tally.invariant_violations;
            if (!tally.first_invariant_violation)
                tally.first_invariant_violation = x.value();
        }
        for (std::size_t s = 0; s < subjects.size(); ++s) {
            const CsdRep got = subjects[s].fn(x);
            if (got.plus_mask != ref.plus_mask || got.minus_mask != ref.minus_mask) {
                ++tally.mismatches[s];
                if (!tally.first[s]) tally.first[s] = x.value();
            }
        }
    }
}

}  // namespace

CrossCheckReport cross_check_subjects(std::string domain, std::uint64_t count,
                                      const std::function<BinaryWord(std::uint64_t)>& input_at,
                                      const std::vector<Subject>& subjects,
                                      unsigned threads) {
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = std::clamp(hw, 1u, 8u);
    }
    if (count < 1024) threads = 1;

    std::vector<WorkerTally> tallies(threads);
    for (auto& tally : tallies) {
        tally.mismatches.assign(subjects.size(), 0);
        tally.first.assign(subjects.size(), std::nullopt);
    }

    if (threads == 1) {
        run_block(0, count, input_at, subjects, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::uint64_t chunk = (count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = std::min<std::uint64_t>(t * chunk, count);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, count);
            pool.emplace_back(run_block, begin, end, std::cref(input_at),
                              std::cref(subjects), std::ref(tallies[t]));
        }
        for (auto& th : pool) th.join();
    }

    CrossCheckReport report;
    report.domain = std::move(domain);
    report.inputs = count;
    report.converters.reserve(subjects.size());
    for (std::size_t s = 0; s < subjects.size(); ++s) {
        ConverterCheck check;
        check.name = subjects[s].name;
        // Blocks are merged in index order, so the first mismatch is the
        // smallest-index one regardless of the thread count.
        for (const auto& tally : tallies) {
            check.mismatches += tally.mismatches[s];
            if (!check.first_mismatch && tally.first[s])
                check.first_mismatch = tally.first[s];
        }
        report.converters.push_back(std::move(check));
    }
    for (const auto& tally : tallies) {
        report.invariant_violations += tally.invariant_violations;
        if (!report.first_invariant_violation && tally.first_invariant_violation)
            report.first_invariant_violation = tally.first_invariant_violation;
    }
    return report;
}

namespace {

std::vector<Subject> subjects_for(std::span<const ConverterId> ids) {
    std::vector<Subject> subjects;
    subjects.reserve(ids.size());
    for (ConverterId id : ids)
        subjects.push_back(Subject{std::string(to_string(id)), converter_fn(id)});
    return subjects;
}

}  // namespace

CrossCheckReport cross_check_range(std::uint64_t lo, std::uint64_t hi,
                                   std::span<const ConverterId> ids, unsigned threads) {
    if (lo > hi) throw std::invalid_argument("cross_check_range: lo must be <= hi");
    std::ostringstream domain;
    domain << "range [" << lo << ", " << hi << ")";
    return cross_check_subjects(
        domain.str(), hi - lo,
        [lo](std::uint64_t idx) { return BinaryWord(lo + idx); }, subjects_for(ids),
        threads);
}

CrossCheckReport cross_check_random(std::uint64_t count, unsigned bits,
                                    std::uint64_t seed,
                                    std::span<const ConverterId> ids, unsigned threads) {
    if (bits < 1 || bits > kMaxWordlength)
        throw std::invalid_argument("cross_check_random: bits must be in [1, 62]");
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = (1ull << bits) - 1;
    std::vector<std::uint64_t> values(count);
    for (auto& v : values) v = rng() & mask;

    std::ostringstream domain;
    domain << count << " random values, " << bits << "-bit, seed " << seed;
    return cross_check_subjects(
        domain.str(), count,
        [&values, bits](std::uint64_t idx) { return BinaryWord(values[idx], bits); },
        subjects_for(ids), threads);
}

}  // namespace csd::oracle
