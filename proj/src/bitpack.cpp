#include "bitpack.hpp"

#include <stdexcept>
#include <string>

namespace macko {

bool is_valid_delta_bits(unsigned bits) {
    return bits == 1 || bits == 2 || bits == 4 || bits == 8;
}

static void check_bits(unsigned bits) {
    if (!is_valid_delta_bits(bits))
        throw std::invalid_argument("delta width must be one of 1, 2, 4, 8 bits; got " +
                                    std::to_string(bits));
}

std::vector<uint8_t> pack_deltas(const std::vector<uint32_t>& deltas, unsigned bits) {
    check_bits(bits);
    const unsigned per_byte = 8u / bits;
    const uint32_t max_delta = 1u << bits;
    std::vector<uint8_t> bytes((deltas.size() + per_byte - 1) / per_byte, 0);
    for (size_t i = 0; i < deltas.size(); ++i) {
        const uint32_t d = deltas[i];
        if (d < 1 || d > max_delta)
            throw std::invalid_argument("delta " + std::to_string(d) + " out of range [1, " +
                                        std::to_string(max_delta) + "]");
        const unsigned shift = static_cast<unsigned>(i % per_byte) * bits;
        bytes[i / per_byte] |= static_cast<uint8_t>((d - 1) << shift);
    }
    return bytes;
}

std::vector<uint32_t> unpack_deltas(const uint8_t* bytes, size_t count, unsigned bits) {
    check_bits(bits);
    std::vector<uint32_t> out(count);
    for (size_t i = 0; i < count; ++i) out[i] = unpack_delta_at(bytes, i, bits);
    return out;
}

void pack_delta_at(uint8_t* bytes, size_t index, unsigned bits, uint32_t delta) {
    check_bits(bits);
    const uint32_t max_delta = 1u << bits;
    if (delta < 1 || delta > max_delta)
        throw std::invalid_argument("delta " + std::to_string(delta) + " out of range [1, " +
                                    std::to_string(max_delta) + "]");
    const unsigned per_byte = 8u / bits;
    const uint32_t mask = (bits == 8) ? 0xFFu : ((1u << bits) - 1u);
    const unsigned shift = static_cast<unsigned>(index % per_byte) * bits;
    uint8_t& b = bytes[index / per_byte];
    b = static_cast<uint8_t>((b & ~(mask << shift)) | ((delta - 1) << shift));
}

} // namespace macko
