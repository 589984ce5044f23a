#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "csd/core.hpp"

namespace csd {

/// Dispatch key for the conversion algorithms. string_0 and string_1 live in
/// strsub.hpp but share this key space so the CLI and the harnesses can treat
/// all converters uniformly.
enum class ConverterId {
    reitwiesner,
    reitwiesner_modified,
    garner_arith,
    garner_logic,
    garner_masked,
    garner_revisited,
    naf,
    bin2naf,
    ruiz_granda,
    string_0,
    string_1,
};

std::string_view to_string(ConverterId id) noexcept;
std::optional<ConverterId> parse_converter_id(std::string_view name) noexcept;

/// All eleven converters, in declaration order.
std::span<const ConverterId> all_converters() noexcept;

/// Capture of the internal bit sequences a converter builds on the way to its
/// result. Each converter fills only the fields it actually computes; the
/// production overloads skip the capture entirely.
struct ConvTrace {
    std::uint64_t g = 0;  // reitwiesner, reitwiesner_modified
    std::uint64_t t = 0;  // reitwiesner (x_i ^ x_{i-1}); garner_revisited, bin2naf (x + x/2)
    std::uint64_t c = 0;  // carry sequence of the algorithm's addition
    std::uint64_t d = 0;  // difference mask c ^ x (equivalently h ^ t)
    std::uint64_t h = 0;  // halved word x/2, or the Ruiz-Granda h sequence
    std::uint64_t k = 0;  // Ruiz-Granda k sequence
    std::uint64_t f = 0;  // string-scanner flag sequence, bit i = f_i
};

// The converters. Common contract: the result has the input's wordlength,
// value_of(result) equals the input value, and every CsdRep invariant holds.

/// Digit recurrence g_i = !g_{i-1} & (x_i ^ x_{i-1}), signed by x_{i+1}.
CsdRep reitwiesner(const BinaryWord& x);
CsdRep reitwiesner(const BinaryWord& x, ConvTrace& trace);

/// Same digits as reitwiesner, with g obtained in one shot from the carry
/// sequence of x + 2x: g_i = c_{i+1} ^ x_i.
CsdRep reitwiesner_modified(const BinaryWord& x);
CsdRep reitwiesner_modified(const BinaryWord& x, ConvTrace& trace);

/// Garner's rules in arithmetic form: y_i = x_i + c_i - 2*c_{i+1}, with c the
/// carry sequence of x + x/2.
CsdRep garner_arith(const BinaryWord& x);
CsdRep garner_arith(const BinaryWord& x, ConvTrace& trace);

/// Garner's rules in logic form: d_i = c_i ^ x_i, split by x_{i+1}.
CsdRep garner_logic(const BinaryWord& x);
CsdRep garner_logic(const BinaryWord& x, ConvTrace& trace);

/// Garner's rules as whole-word mask operations.
CsdRep garner_masked(const BinaryWord& x);
CsdRep garner_masked(const BinaryWord& x, ConvTrace& trace);

/// Shortest form of the Garner conversion: h = x/2, t = x + h,
/// y+ = ~h & t, y- = h & ~t.
CsdRep garner_revisited(const BinaryWord& x);
CsdRep garner_revisited(const BinaryWord& x, ConvTrace& trace);

/// Value-driven non-adjacent-form loop: strips one digit per step,
/// y_i = 2 - (x mod 4) on odd x.
CsdRep naf(const BinaryWord& x);

/// Whole-word NAF conversion: h = x/2, t = x + h, d = h ^ t, y+ = t & d,
/// y- = h & d. Reference converter for every cross-check in this project.
CsdRep bin2naf(const BinaryWord& x);
CsdRep bin2naf(const BinaryWord& x, ConvTrace& trace);

/// The parity-alternating h/k recursion feeding ruiz_granda.
struct HkSequences {
    std::uint64_t h_mask = 0;
    std::uint64_t k_mask = 0;

    bool operator==(const HkSequences&) const = default;
};

HkSequences get_hk(const BinaryWord& x);

/// Digit selection d_i = h_i & !k_i (even i) / !h_i & k_i (odd i), signed by
/// x_{i+1}. No closed form is known for h and k, so this stays loop-bound.
CsdRep ruiz_granda(const BinaryWord& x);
CsdRep ruiz_granda(const BinaryWord& x, ConvTrace& trace);

using ConverterFn = CsdRep (*)(const BinaryWord&);

/// Resolved entry point for one converter; stable for the life of the program.
ConverterFn converter_fn(ConverterId id);

/// Uniform dispatch. Throws std::invalid_argument on an unknown id.
CsdRep convert(ConverterId id, const BinaryWord& x);

}  // namespace csd
