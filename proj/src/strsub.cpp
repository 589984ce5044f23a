#include "csd/strsub.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "csd/converters.hpp"

namespace csd {

namespace {

template <bool Traced>
CsdRep string_0_impl(const BinaryWord& x, ConvTrace* trace) {
    const int n = static_cast<int>(x.wordlength());
    std::uint64_t plus = 0, minus = 0;
    std::uint64_t f_mask = 0;
    bool f = false;
    for (int i = 0; i <= n; ++i) {
        if constexpr (Traced)
            f_mask |= static_cast<std::uint64_t>(f) << i;
        const unsigned hi = x.bit(i + 1);
        const unsigned lo = x.bit(i);
        if (!f) {
            if (hi == 0 && lo == 1) {
                plus |= 1ull << i;
            } else if (hi == 1 && lo == 1) {
                minus |= 1ull << i;
                f = true;
            }
        } else {
            if (hi == 0 && lo == 0) {
                plus |= 1ull << i;
                f = false;
            } else if (hi == 1 && lo == 0) {
                minus |= 1ull << i;
            }
        }
    }
    if constexpr (Traced) trace->f = f_mask;
    return CsdRep{plus, minus, x.wordlength()};
}

}  // namespace

CsdRep string_0(const BinaryWord& x) { return string_0_impl<false>(x, nullptr); }
CsdRep string_0(const BinaryWord& x, ConvTrace& trace) {
    return string_0_impl<true>(x, &trace);
}

CsdRep string_1(const BinaryWord& x) {
    const unsigned n = x.wordlength();
    // Positions 0..n plus one always-zero guard slot, so the run scan can
    // read y_{i+1} at i == n without a bounds branch.
    std::array<std::int8_t, kWordBits> y{};
    for (unsigned i = 0; i < n; ++i)
        y[i] = static_cast<std::int8_t>(x.bit(static_cast<int>(i)));

    unsigned i = 0;
    while (i <= n) {
        if (y[i] == 0) {
            ++i;
            continue;
        }
        unsigned j = 1;
        while (y[i + j] == 1 && y[i + j - 1] == 1) ++j;
        if (j > 1) {
            y[i + j] = 1;
            for (unsigned m = i + 1; m <= i + j - 1; ++m) y[m] = 0;
            y[i] = -1;
        }
        i += j;
    }

    std::uint64_t plus = 0, minus = 0;
    for (unsigned pos = 0; pos <= n; ++pos) {
        if (y[pos] == 1)
            plus |= 1ull << pos;
        else if (y[pos] == -1)
            minus |= 1ull << pos;
    }
    return CsdRep{plus, minus, n};
}

namespace {

// Rule table rows indexed by (x_{i+1} << 2) | (x_i << 1) | f_i.
struct Rule {
    std::int8_t digit;
    bool next_flag;
};

constexpr std::array<Rule, 8> kRules = {{
    {0, false},   // 0 0 | 0
    {1, false},   // 0 0 | 1
    {1, false},   // 0 1 | 0
    {0, true},    // 0 1 | 1
    {0, false},   // 1 0 | 0
    {-1, true},   // 1 0 | 1
    {-1, true},   // 1 1 | 0
    {0, true},    // 1 1 | 1
}};

}  // namespace

FsmOutput fsm_step(const FsmState& state) noexcept {
    const unsigned idx = (static_cast<unsigned>(state.window_hi) << 2) |
                         (static_cast<unsigned>(state.window_lo) << 1) |
                         static_cast<unsigned>(state.flag);
    const Rule& rule = kRules[idx];
    return FsmOutput{rule.digit, rule.next_flag};
}

FsmOutput fsm_step_closed(const FsmState& state) noexcept {
    const unsigned hi = state.window_hi ? 1u : 0u;
    const unsigned lo = state.window_lo ? 1u : 0u;
    const unsigned f = state.flag ? 1u : 0u;
    const unsigned diff = lo ^ f;
    const int digit = static_cast<int>((1u ^ hi) & diff) - static_cast<int>(hi & diff);
    const bool next = ((hi & lo) | (f & (hi ^ lo))) != 0;
    return FsmOutput{digit, next};
}

bool is_wblock(std::uint64_t x) noexcept {
    if ((x & 3u) != 3u) return false;
    const std::uint64_t w = x >> 2;
    if (w == 0) return true;  // empty w: the pattern is 0011
    // Two adjacent zeros anywhere below w's leading 1?
    const unsigned len = static_cast<unsigned>(std::bit_width(w));
    const std::uint64_t pair_window = (len >= 2) ? ((1ull << (len - 1)) - 1) : 0;
    return ((~w & (~w >> 1)) & pair_window) == 0;
}

std::vector<std::uint64_t> wblock_sequence(std::size_t count) {
    if (count == 0) throw std::invalid_argument("wblock_sequence: count must be >= 1");
    std::vector<std::uint64_t> terms;
    terms.reserve(count);
    for (std::uint64_t x = 3; terms.size() < count; x += 4)
        if (is_wblock(x)) terms.push_back(x);
    return terms;
}

}  // namespace csd
