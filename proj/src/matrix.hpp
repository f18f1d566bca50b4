#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fp16.hpp"

namespace macko {

// Row-major dense matrix of binary16 values. Ground truth for conversions.
struct DenseMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Half> data; // rows*cols entries

    Half at(size_t r, size_t c) const { return data[r * cols + c]; }
    Half& at(size_t r, size_t c) { return data[r * cols + c]; }

    static DenseMatrix zeros(size_t rows, size_t cols) {
        return DenseMatrix{rows, cols, std::vector<Half>(rows * cols)};
    }

    size_t nnz() const {
        size_t n = 0;
        for (Half h : data)
            if (!half_is_zero(h)) ++n;
        return n;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

// Classic three-array CSR. Canonical form: no stored zeros, columns strictly
// increasing within a row. index_width (16 or 32) is bookkeeping for the
// storage cost models; column indices are always held as u32 in memory.
struct CsrMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Half> values;
    std::vector<uint32_t> column_indices;
    std::vector<uint32_t> row_pointers; // rows+1, row_pointers[0] == 0
    unsigned index_width = 32;

    size_t nnz() const { return values.size(); }
};

struct MackoParams {
    unsigned b_val = 16;  // bits per stored value
    unsigned b_delta = 4; // bits per delta, one of {1,2,4,8}

    uint32_t max_delta() const { return 1u << b_delta; }
};

// The compressed format: values with padding zeros, fixed-width packed deltas
// and element-offset row pointers. Both payload arrays are zero-padded at the
// end to a 16-byte multiple so vector-width loads never run off the buffer.
struct MackoMatrix {
    size_t rows = 0;
    size_t cols = 0;
    MackoParams params;
    std::vector<Half> values;           // >= pad_nnz entries
    std::vector<uint8_t> packed_deltas; // >= ceil(pad_nnz*b_delta/8) bytes
    std::vector<uint32_t> row_pointers; // rows+1 element offsets

    size_t pad_nnz() const { return row_pointers.empty() ? 0 : row_pointers.back(); }
};

using Vector = std::vector<Half>;

inline size_t align_up(size_t n, size_t alignment) {
    return (n + alignment - 1) / alignment * alignment;
}

// Payload byte sizes as stored (tail padding included).
inline size_t macko_values_bytes(size_t pad_nnz) { return align_up(pad_nnz * 2, 16); }
inline size_t macko_delta_bytes(size_t pad_nnz, unsigned b_delta) {
    return align_up((pad_nnz * b_delta + 7) / 8, 16);
}

} // namespace macko
