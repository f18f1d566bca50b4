#include "fp16.hpp"

#include <array>
#include <cstring>

namespace macko {

float half_to_float(Half h) {
    const uint32_t b = h.bits;
    const uint32_t sign = (b & 0x8000u) << 16;
    uint32_t exp = (b >> 10) & 0x1Fu;
    uint32_t man = b & 0x3FFu;
    uint32_t f;
    if (exp == 0x1F) {
        f = sign | 0x7F800000u | (man << 13); // inf / nan
    } else if (exp == 0) {
        if (man == 0) {
            f = sign;
        } else {
            // subnormal: renormalize into a float with explicit exponent
            exp = 127 - 15 + 1;
            while ((man & 0x400u) == 0) {
                man <<= 1;
                --exp;
            }
            man &= 0x3FFu;
            f = sign | (exp << 23) | (man << 13);
        }
    } else {
        f = sign | ((exp - 15 + 127) << 23) | (man << 13);
    }
    float out;
    std::memcpy(&out, &f, sizeof(out));
    return out;
}

Half float_to_half(float x) {
    uint32_t f;
    std::memcpy(&f, &x, sizeof(f));
    const uint16_t sign = static_cast<uint16_t>((f >> 16) & 0x8000u);
    const uint32_t aexp = (f >> 23) & 0xFFu;
    uint32_t man = f & 0x7FFFFFu;

    if (aexp == 0xFF) { // inf / nan
        const uint16_t payload = man ? static_cast<uint16_t>(0x200u | (man >> 13)) : 0;
        return Half{static_cast<uint16_t>(sign | 0x7C00u | payload)};
    }

    int e = static_cast<int>(aexp) - 127 + 15;
    if (e >= 0x1F) return Half{static_cast<uint16_t>(sign | 0x7C00u)}; // overflow

    if (e <= 0) {
        if (e < -10) return Half{sign}; // below half the smallest subnormal
        man |= 0x800000u;               // make the leading 1 explicit
        const int shift = 14 - e;       // in [14, 24]
        const uint32_t round = (1u << (shift - 1)) - 1;
        const uint32_t odd = (man >> shift) & 1u;
        const uint32_t m = (man + round + odd) >> shift;
        // a carry out of the mantissa lands in the exponent field, which is
        // exactly the smallest normal
        return Half{static_cast<uint16_t>(sign | m)};
    }

    // normal: 23 -> 10 mantissa bits, ties to even
    const uint32_t odd = (man >> 13) & 1u;
    man = man + 0xFFFu + odd;
    if (man & 0x800000u) {
        man = 0;
        ++e;
        if (e >= 0x1F) return Half{static_cast<uint16_t>(sign | 0x7C00u)};
    }
    return Half{static_cast<uint16_t>(sign | (e << 10) | (man >> 13))};
}

const float* half_table() {
    static const std::array<float, 65536> table = [] {
        std::array<float, 65536> t{};
        for (uint32_t i = 0; i < 65536; ++i) t[i] = half_to_float(Half{static_cast<uint16_t>(i)});
        return t;
    }();
    return table.data();
}

} // namespace macko
