#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace macko {

// Fixed-width packing of column deltas. A delta d in [1, 2^bits] is stored as
// the codeword d-1 in `bits` bits; 8/bits codewords share a byte, the first
// one in the least significant bits. bits must divide 8, i.e. one of 1,2,4,8.

bool is_valid_delta_bits(unsigned bits);

std::vector<uint8_t> pack_deltas(const std::vector<uint32_t>& deltas, unsigned bits);
std::vector<uint32_t> unpack_deltas(const uint8_t* bytes, size_t count, unsigned bits);

inline uint32_t unpack_delta_at(const uint8_t* bytes, size_t index, unsigned bits) {
    const unsigned per_byte = 8u / bits;
    const uint32_t mask = (bits == 8) ? 0xFFu : ((1u << bits) - 1u);
    const unsigned shift = static_cast<unsigned>(index % per_byte) * bits;
    return ((bytes[index / per_byte] >> shift) & mask) + 1u;
}

void pack_delta_at(uint8_t* bytes, size_t index, unsigned bits, uint32_t delta);

} // namespace macko
