#include "csd/converters.hpp"

#include <array>
#include <stdexcept>

#include "csd/strsub.hpp"

namespace csd {

namespace {

constexpr std::array<ConverterId, 11> kAllConverters = {
    ConverterId::reitwiesner,      ConverterId::reitwiesner_modified,
    ConverterId::garner_arith,     ConverterId::garner_logic,
    ConverterId::garner_masked,    ConverterId::garner_revisited,
    ConverterId::naf,              ConverterId::bin2naf,
    ConverterId::ruiz_granda,      ConverterId::string_0,
    ConverterId::string_1,
};

constexpr std::array<std::string_view, 11> kConverterNames = {
    "reitwiesner", "reitwiesner_modified", "garner_arith", "garner_logic",
    "garner_masked", "garner_revisited", "naf", "bin2naf", "ruiz_granda",
    "string_0", "string_1",
};

template <bool Traced>
CsdRep reitwiesner_impl(const BinaryWord& x, ConvTrace* trace) {
    const int n = static_cast<int>(x.wordlength());
    std::uint64_t plus = 0, minus = 0;
    std::uint64_t g_mask = 0, t_mask = 0;
    unsigned g_prev = 0;
    for (int i = 0; i <= n; ++i) {
        const unsigned t = x.bit(i) ^ x.bit(i - 1);
        const unsigned g = (1u ^ g_prev) & t;
        const int y = (1 - 2 * static_cast<int>(x.bit(i + 1))) * static_cast<int>(g);
        if (y > 0)
            plus |= 1ull << i;
        else if (y < 0)
            minus |= 1ull << i;
        if constexpr (Traced) {
            g_mask |= static_cast<std::uint64_t>(g) << i;
            t_mask |= static_cast<std::uint64_t>(t) << i;
        }
        g_prev = g;
    }
    if constexpr (Traced) {
        trace->g = g_mask;
        trace->t = t_mask;
    }
    return CsdRep{plus, minus, x.wordlength()};
}

template <bool Traced>
CsdRep reitwiesner_modified_impl(const BinaryWord& x, ConvTrace* trace) {
    const std::uint64_t v = x.value();
    const std::uint64_t c = get_carry(v, 2 * v).carry_mask;
    const std::uint64_t g = (c >> 1) ^ v;
    const std::uint64_t next = v >> 1;  // x_{i+1} aligned with position i
    if constexpr (Traced) {
        trace->c = c;
        trace->g = g;
    }
    return CsdRep{~next & g, next & g, x.wordlength()};
}

template <bool Traced>
CsdRep garner_arith_impl(const BinaryWord& x, ConvTrace* trace) {
    const int n = static_cast<int>(x.wordlength());
    const CarrySeq c = get_carry(x.value(), x.value() >> 1);
    std::uint64_t plus = 0, minus = 0;
    for (int i = 0; i <= n; ++i) {
        const int y = static_cast<int>(x.bit(i)) + static_cast<int>(c.bit(i)) -
                      2 * static_cast<int>(c.bit(i + 1));
        if (y > 0)
            plus |= 1ull << i;
        else if (y < 0)
            minus |= 1ull << i;
    }
    if constexpr (Traced) trace->c = c.carry_mask;
    return CsdRep{plus, minus, x.wordlength()};
}

template <bool Traced>
CsdRep garner_logic_impl(const BinaryWord& x, ConvTrace* trace) {
    const int n = static_cast<int>(x.wordlength());
    const CarrySeq c = get_carry(x.value(), x.value() >> 1);
    std::uint64_t plus = 0, minus = 0;
    std::uint64_t d_mask = 0;
    for (int i = 0; i <= n; ++i) {
        const unsigned d = c.bit(i) ^ x.bit(i);
        const unsigned next = x.bit(i + 1);
        plus |= static_cast<std::uint64_t>((1u ^ next) & d) << i;
        minus |= static_cast<std::uint64_t>(next & d) << i;
        if constexpr (Traced) d_mask |= static_cast<std::uint64_t>(d) << i;
    }
    if constexpr (Traced) {
        trace->c = c.carry_mask;
        trace->d = d_mask;
    }
    return CsdRep{plus, minus, x.wordlength()};
}

template <bool Traced>
CsdRep garner_masked_impl(const BinaryWord& x, ConvTrace* trace) {
    const std::uint64_t v = x.value();
    const std::uint64_t h = v >> 1;
    const std::uint64_t c = get_carry(v, h).carry_mask;
    const std::uint64_t d = c ^ v;
    if constexpr (Traced) {
        trace->h = h;
        trace->c = c;
        trace->d = d;
    }
    return CsdRep{~h & d, h & d, x.wordlength()};
}

template <bool Traced>
CsdRep garner_revisited_impl(const BinaryWord& x, ConvTrace* trace) {
    const std::uint64_t v = x.value();
    const std::uint64_t h = v >> 1;
    const std::uint64_t t = v + h;
    if constexpr (Traced) {
        trace->h = h;
        trace->t = t;
    }
    return CsdRep{~h & t, h & ~t, x.wordlength()};
}

template <bool Traced>
CsdRep bin2naf_impl(const BinaryWord& x, ConvTrace* trace) {
    const std::uint64_t v = x.value();
    const std::uint64_t h = v >> 1;
    const std::uint64_t t = v + h;
    const std::uint64_t d = h ^ t;
    if constexpr (Traced) {
        trace->h = h;
        trace->t = t;
        trace->d = d;
    }
    return CsdRep{t & d, h & d, x.wordlength()};
}

template <bool Traced>
CsdRep ruiz_granda_impl(const BinaryWord& x, ConvTrace* trace) {
    const int n = static_cast<int>(x.wordlength());
    const HkSequences hk = get_hk(x);
    std::uint64_t plus = 0, minus = 0;
    std::uint64_t d_mask = 0;
    for (int i = 0; i <= n; ++i) {
        const unsigned hi = static_cast<unsigned>((hk.h_mask >> i) & 1u);
        const unsigned ki = static_cast<unsigned>((hk.k_mask >> i) & 1u);
        const unsigned d = (i % 2 == 0) ? (hi & (1u ^ ki)) : ((1u ^ hi) & ki);
        const unsigned next = x.bit(i + 1);
        plus |= static_cast<std::uint64_t>((1u ^ next) & d) << i;
        minus |= static_cast<std::uint64_t>(next & d) << i;
        if constexpr (Traced) d_mask |= static_cast<std::uint64_t>(d) << i;
    }
    if constexpr (Traced) {
        trace->h = hk.h_mask;
        trace->k = hk.k_mask;
        trace->d = d_mask;
    }
    return CsdRep{plus, minus, x.wordlength()};
}

}  // namespace

std::string_view to_string(ConverterId id) noexcept {
    return kConverterNames[static_cast<std::size_t>(id)];
}

std::optional<ConverterId> parse_converter_id(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kConverterNames.size(); ++i)
        if (kConverterNames[i] == name) return kAllConverters[i];
    return std::nullopt;
}

std::span<const ConverterId> all_converters() noexcept { return kAllConverters; }

CsdRep reitwiesner(const BinaryWord& x) { return reitwiesner_impl<false>(x, nullptr); }
CsdRep reitwiesner(const BinaryWord& x, ConvTrace& trace) {
    return reitwiesner_impl<true>(x, &trace);
}

CsdRep reitwiesner_modified(const BinaryWord& x) {
    return reitwiesner_modified_impl<false>(x, nullptr);
}
CsdRep reitwiesner_modified(const BinaryWord& x, ConvTrace& trace) {
    return reitwiesner_modified_impl<true>(x, &trace);
}

CsdRep garner_arith(const BinaryWord& x) { return garner_arith_impl<false>(x, nullptr); }
CsdRep garner_arith(const BinaryWord& x, ConvTrace& trace) {
    return garner_arith_impl<true>(x, &trace);
}

CsdRep garner_logic(const BinaryWord& x) { return garner_logic_impl<false>(x, nullptr); }
CsdRep garner_logic(const BinaryWord& x, ConvTrace& trace) {
    return garner_logic_impl<true>(x, &trace);
}

CsdRep garner_masked(const BinaryWord& x) { return garner_masked_impl<false>(x, nullptr); }
CsdRep garner_masked(const BinaryWord& x, ConvTrace& trace) {
    return garner_masked_impl<true>(x, &trace);
}

CsdRep garner_revisited(const BinaryWord& x) {
    return garner_revisited_impl<false>(x, nullptr);
}
CsdRep garner_revisited(const BinaryWord& x, ConvTrace& trace) {
    return garner_revisited_impl<true>(x, &trace);
}

CsdRep naf(const BinaryWord& x) {
    std::uint64_t v = x.value();
    std::uint64_t plus = 0, minus = 0;
    unsigned i = 0;
    while (v >= 1) {
        if (v & 1u) {
            const int y = 2 - static_cast<int>(v & 3u);
            if (y > 0) {
                plus |= 1ull << i;
                v -= 1;
            } else {
                minus |= 1ull << i;
                v += 1;
            }
        }
        v >>= 1;
        ++i;
    }
    return CsdRep{plus, minus, x.wordlength()};
}

CsdRep bin2naf(const BinaryWord& x) { return bin2naf_impl<false>(x, nullptr); }
CsdRep bin2naf(const BinaryWord& x, ConvTrace& trace) {
    return bin2naf_impl<true>(x, &trace);
}

HkSequences get_hk(const BinaryWord& x) {
    const int n = static_cast<int>(x.wordlength());
    std::uint64_t h = 0, k = 0;
    unsigned h_prev = 0, k_prev = 0;
    for (int i = 0; i <= n; ++i) {
        const unsigned xi = x.bit(i);
        unsigned hi, ki;
        if (i % 2 == 0) {
            hi = xi | h_prev;
            ki = xi & k_prev;
        } else {
            hi = xi & h_prev;
            ki = xi | k_prev;
        }
        h |= static_cast<std::uint64_t>(hi) << i;
        k |= static_cast<std::uint64_t>(ki) << i;
        h_prev = hi;
        k_prev = ki;
    }
    return HkSequences{h, k};
}

CsdRep ruiz_granda(const BinaryWord& x) { return ruiz_granda_impl<false>(x, nullptr); }
CsdRep ruiz_granda(const BinaryWord& x, ConvTrace& trace) {
    return ruiz_granda_impl<true>(x, &trace);
}

ConverterFn converter_fn(ConverterId id) {
    switch (id) {
        case ConverterId::reitwiesner: return [](const BinaryWord& x) { return reitwiesner(x); };
        case ConverterId::reitwiesner_modified:
            return [](const BinaryWord& x) { return reitwiesner_modified(x); };
        case ConverterId::garner_arith: return [](const BinaryWord& x) { return garner_arith(x); };
        case ConverterId::garner_logic: return [](const BinaryWord& x) { return garner_logic(x); };
        case ConverterId::garner_masked:
            return [](const BinaryWord& x) { return garner_masked(x); };
        case ConverterId::garner_revisited:
            return [](const BinaryWord& x) { return garner_revisited(x); };
        case ConverterId::naf: return [](const BinaryWord& x) { return naf(x); };
        case ConverterId::bin2naf: return [](const BinaryWord& x) { return bin2naf(x); };
        case ConverterId::ruiz_granda: return [](const BinaryWord& x) { return ruiz_granda(x); };
        case ConverterId::string_0: return [](const BinaryWord& x) { return string_0(x); };
        case ConverterId::string_1: return [](const BinaryWord& x) { return string_1(x); };
    }
    throw std::invalid_argument("convert: unknown converter id");
}

CsdRep convert(ConverterId id, const BinaryWord& x) { return converter_fn(id)(x); }

}  // namespace csd
