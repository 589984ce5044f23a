#include "csd/core.hpp"

#include <bit>
#include <stdexcept>

namespace csd {

unsigned bit_length(std::uint64_t value) noexcept {
    return static_cast<unsigned>(std::bit_width(value));
}

BinaryWord::BinaryWord(std::uint64_t value) : BinaryWord(value, bit_length(value)) {}

BinaryWord::BinaryWord(std::uint64_t value, unsigned wordlength)
    : value_(value), wordlength_(wordlength) {
    if (wordlength > kMaxWordlength)
        throw std::invalid_argument("BinaryWord: wordlength exceeds " +
                                    std::to_string(kMaxWordlength));
    if (wordlength < kWordBits && (value >> wordlength) != 0)
        throw std::invalid_argument("BinaryWord: value does not fit in " +
                                    std::to_string(wordlength) + " digits");
}

std::int64_t value_of(const CsdRep& rep) noexcept {
    // Masks stay below bit 63, so both casts are exact.
    return static_cast<std::int64_t>(rep.plus_mask) -
           static_cast<std::int64_t>(rep.minus_mask);
}

unsigned weight(const CsdRep& rep) noexcept {
    return static_cast<unsigned>(std::popcount(rep.plus_mask) +
                                 std::popcount(rep.minus_mask));
}

bool is_canonical(const CsdRep& rep) noexcept {
    if (rep.wordlength > kMaxWordlength) return false;
    const std::uint64_t window = (1ull << (rep.wordlength + 1)) - 1;
    const std::uint64_t nonzero = rep.plus_mask | rep.minus_mask;
    if ((rep.plus_mask & rep.minus_mask) != 0) return false;
    if ((nonzero & ~window) != 0) return false;
    if ((nonzero & (nonzero << 1)) != 0) return false;
    if (value_of(rep) < 0) return false;
    // Leading nonzero digit must be +1.
    if (rep.minus_mask != 0 &&
        std::bit_width(rep.minus_mask) >= std::bit_width(rep.plus_mask))
        return false;
    return true;
}

std::string to_compact_string(const CsdRep& rep) {
    std::string out;
    out.reserve(rep.wordlength + 1);
    for (int i = static_cast<int>(rep.wordlength); i >= 0; --i) {
        const int d = rep.digit(i);
        out.push_back(d == 0 ? '0' : (d > 0 ? '+' : '-'));
    }
    return out;
}

std::string to_digit_list(const CsdRep& rep) {
    std::string out;
    for (int i = static_cast<int>(rep.wordlength); i >= 0; --i) {
        if (!out.empty()) out.push_back(' ');
        out.append(std::to_string(rep.digit(i)));
    }
    return out;
}

std::int64_t parse_compact(const std::string& digits) {
    std::int64_t value = 0;
    for (char ch : digits) {
        value *= 2;
        switch (ch) {
            case '0': break;
            case '+': value += 1; break;
            case '-': value -= 1; break;
            default:
                throw std::invalid_argument(
                    "parse_compact: expected '0', '+' or '-', got '" +
                    std::string(1, ch) + "'");
        }
    }
    return value;
}

CarrySeq get_carry(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t s = a + b;
    return CarrySeq{a ^ b ^ s};
}

CarrySeq carry_recurrence_oracle(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t c = 0;
    for (unsigned i = 0; i + 1 < kWordBits; ++i) {
        const std::uint64_t ai = (a >> i) & 1u;
        const std::uint64_t bi = (b >> i) & 1u;
        const std::uint64_t ci = (c >> i) & 1u;
        const std::uint64_t next = (ai & bi) | (ci & (ai ^ bi));
        c |= next << (i + 1);
    }
    return CarrySeq{c};
}

}  // namespace csd
