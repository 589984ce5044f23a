#pragma once

#include <cstdint>
#include <string>

namespace csd {

// Fixed internal word width. Inputs are capped two bits below it so that
// x + 2*x and x + x/2 can never overflow a 64-bit word.
inline constexpr unsigned kWordBits = 64;
inline constexpr unsigned kMaxWordlength = kWordBits - 2;

/// Number of significant binary digits of `value` (0 for value == 0).
unsigned bit_length(std::uint64_t value) noexcept;

/// A nonnegative integer together with an explicit wordlength n.
/// Digit x_i is bit i of the value; digits outside [0, n) read as zero.
class BinaryWord {
public:
    /// Wordlength defaults to bit_length(value).
    explicit BinaryWord(std::uint64_t value);

    /// Throws std::invalid_argument unless value < 2^wordlength and
    /// wordlength <= kMaxWordlength.
    BinaryWord(std::uint64_t value, unsigned wordlength);

    std::uint64_t value() const noexcept { return value_; }
    unsigned wordlength() const noexcept { return wordlength_; }

    /// Digit x_i with the out-of-range convention: zero for i < 0 or i >= n.
    unsigned bit(int i) const noexcept {
        return (i < 0 || i >= static_cast<int>(kWordBits))
                   ? 0u
                   : static_cast<unsigned>((value_ >> i) & 1u);
    }

private:
    std::uint64_t value_;
    unsigned wordlength_;
};

/// A signed-digit number y over digits {-1, 0, +1}, stored as two disjoint
/// bit masks: plus_mask holds the +1 positions, minus_mask the -1 positions.
/// There are wordlength + 1 digit positions, indices 0..wordlength.
struct CsdRep {
    std::uint64_t plus_mask = 0;
    std::uint64_t minus_mask = 0;
    unsigned wordlength = 0;

    /// Digit y_i in {-1, 0, +1}; zero outside the stored positions.
    int digit(int i) const noexcept {
        if (i < 0 || i >= static_cast<int>(kWordBits)) return 0;
        return static_cast<int>((plus_mask >> i) & 1u) -
               static_cast<int>((minus_mask >> i) & 1u);
    }

    bool operator==(const CsdRep&) const = default;
};

/// Reconstructed value: sum of 2^i * y_i.
std::int64_t value_of(const CsdRep& rep) noexcept;

/// Hamming weight: number of nonzero digits.
unsigned weight(const CsdRep& rep) noexcept;

/// True iff `rep` satisfies every CsdRep invariant: masks disjoint and
/// confined to positions 0..n, no two adjacent nonzero digits, value
/// nonnegative with the leading nonzero digit equal to +1.
bool is_canonical(const CsdRep& rep) noexcept;

/// MSB-first rendering over {'0', '+', '-'}, wordlength + 1 characters.
std::string to_compact_string(const CsdRep& rep);

/// MSB-first space-separated digit tokens, e.g. "1 0 0 -1".
std::string to_digit_list(const CsdRep& rep);

/// Inverse of to_compact_string: evaluates an MSB-first {'0','+','-'} string.
/// Throws std::invalid_argument on any other character.
std::int64_t parse_compact(const std::string& digits);

/// Carry-out bit sequence of a full addition; bit i holds c_i, and c_0 = 0.
struct CarrySeq {
    std::uint64_t carry_mask = 0;

    unsigned bit(int i) const noexcept {
        return (i < 0 || i >= static_cast<int>(kWordBits))
                   ? 0u
                   : static_cast<unsigned>((carry_mask >> i) & 1u);
    }

    bool operator==(const CarrySeq&) const = default;
};

/// Carry sequence of a + b recovered from the sum: c = a ^ b ^ (a + b).
/// Precondition: a + b fits in kWordBits bits.
CarrySeq get_carry(std::uint64_t a, std::uint64_t b) noexcept;

/// Same contract as get_carry, evaluated digit by digit through the full-adder
/// recurrence c_{i+1} = a_i b_i | c_i (a_i ^ b_i). Reference path for tests.
CarrySeq carry_recurrence_oracle(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace csd
