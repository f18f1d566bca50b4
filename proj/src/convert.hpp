#pragma once

#include "bitpack.hpp"
#include "matrix.hpp"

namespace macko {

// Exact nonzeros in row-major order; anything that compares equal to zero in
// binary16 is treated as pruned and dropped.
CsrMatrix csr_from_dense(const DenseMatrix& m, unsigned index_width = 32);

// Greedy left-to-right encoding. Within a row the previous column starts at
// the virtual position -1; whenever the gap to the next nonzero exceeds
// max_delta a zero-valued padding entry is emitted max_delta columns further.
// No padding is emitted after a row's last nonzero.
MackoMatrix macko_from_csr(const CsrMatrix& m, MackoParams params);

// Lossless reconstruction; padding entries write an explicit zero onto a
// position that was zero in the source.
DenseMatrix dense_from_macko(const MackoMatrix& m);

// Number of padding entries (pad_nnz minus source nnz).
size_t padding_count(const MackoMatrix& m);

// Throws std::invalid_argument / FormatError when an invariant is broken.
void validate_csr(const CsrMatrix& m);
void validate_macko(const MackoMatrix& m);

// Walks the stored elements of one row, padding entries included, and calls
// fn(element_offset, column, value). Decoding reads exactly the elements in
// [row_pointers[r], row_pointers[r+1]); tail padding is never touched.
template <typename Fn>
inline void for_each_row_element(const MackoMatrix& m, size_t row, Fn&& fn) {
    const unsigned bd = m.params.b_delta;
    const uint8_t* bytes = m.packed_deltas.data();
    long long col = -1;
    const size_t end = m.row_pointers[row + 1];
    for (size_t e = m.row_pointers[row]; e < end; ++e) {
        col += unpack_delta_at(bytes, e, bd);
        fn(e, static_cast<size_t>(col), m.values[e]);
    }
}

} // namespace macko
