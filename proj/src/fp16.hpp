#pragma once

#include <cstdint>

namespace macko {

// IEEE 754 binary16 value kept as raw bits. All matrix/vector payloads use
// this type so that storage, serialization and arithmetic agree bit for bit.
struct Half {
    uint16_t bits = 0;

    friend bool operator==(Half a, Half b) { return a.bits == b.bits; }
    friend bool operator!=(Half a, Half b) { return a.bits != b.bits; }
};

// +0.0 or -0.0
inline bool half_is_zero(Half h) { return (h.bits & 0x7FFFu) == 0; }

float half_to_float(Half h);

// Round-to-nearest-even, with subnormal and overflow-to-infinity handling.
Half float_to_half(float x);

// 65536-entry decode table; built once, used by the hot SpMV paths.
const float* half_table();

inline float half_to_float_fast(Half h) { return half_table()[h.bits]; }

inline Half half_zero() { return Half{0}; }
inline Half half_from_int(int v) { return float_to_half(static_cast<float>(v)); }

} // namespace macko
