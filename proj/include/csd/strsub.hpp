#pragma once

#include <cstdint>
#include <vector>

#include "csd/core.hpp"

namespace csd {

struct ConvTrace;

// The string-substitution view of the conversion: every maximal pattern
// 00w11 (w empty, or starting with 1 and free of "00") rewrites to
// 01[-w]0-, where [-w] flips 0 -> -1 and 1 -> 0; everything else is copied.

/// Right-to-left two-bit scanner with a flag marking "inside a block".
CsdRep string_0(const BinaryWord& x);
CsdRep string_0(const BinaryWord& x, ConvTrace& trace);

/// In-place rewriter over a digit buffer: finds each run of adjacent ones and
/// collapses it in one step.
CsdRep string_1(const BinaryWord& x);

/// One node of the scanner's state diagram: the flag f_i plus the window
/// (x_{i+1}, x_i) currently under inspection.
struct FsmState {
    bool flag = false;       // f_i; every scan starts with false
    bool window_hi = false;  // x_{i+1}
    bool window_lo = false;  // x_i
};

struct FsmOutput {
    int digit = 0;          // y_i
    bool next_flag = false; // f_{i+1}

    bool operator==(const FsmOutput&) const = default;
};

/// Table-driven transition: one row of the eight-row conversion rule table.
FsmOutput fsm_step(const FsmState& state) noexcept;

/// Same transition through the Boolean closed forms
/// y+ = !x_{i+1} & (x_i ^ f), y- = x_{i+1} & (x_i ^ f),
/// f' = x_{i+1} & x_i | f & (x_{i+1} ^ x_i).
FsmOutput fsm_step_closed(const FsmState& state) noexcept;

/// True iff x is the value of some pattern 00w11: x = 3 (mod 4) and the
/// significant digits of x/4 contain no two adjacent zeros (x/4 == 0 is the
/// empty-w case). Leading zeros above x/4's top bit belong to the "00"
/// delimiter, not to w.
bool is_wblock(std::uint64_t x) noexcept;

/// First `count` integers satisfying is_wblock, ascending.
std::vector<std::uint64_t> wblock_sequence(std::size_t count);

}  // namespace csd
