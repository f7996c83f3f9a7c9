#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "llwy/fp.hpp"

namespace llwy {

// Dense matrix over F_p with entries packed four per 64-bit word (16-bit
// lanes).  Row operations use delayed reduction: a lane accumulates saxpy
// results until it could overflow, and is only then folded back to [0,p).
// This is the workhorse behind every elimination in the project; p <= 64.
class FpMat {
public:
    static constexpr uint32_t kLaneBits = 16;
    static constexpr uint32_t kLanes = 4;
    static constexpr uint64_t kLaneMask = 0xFFFFull;

    FpMat() = default;
    FpMat(uint16_t p, uint32_t rows, uint32_t cols);
    static FpMat identity(uint16_t p, uint32_t n);
    static FpMat fromRows(uint16_t p, const std::vector<FpVec>& rows, uint32_t cols);

    uint16_t p() const { return p_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    size_t wordsPerRow() const { return wpr_; }

    uint16_t get(uint32_t r, uint32_t c) const {
        uint64_t w = w_[r * wpr_ + (c >> 2)];
        return static_cast<uint16_t>((w >> ((c & 3u) * kLaneBits)) & kLaneMask);
    }
    void set(uint32_t r, uint32_t c, uint16_t v) {
        uint64_t& w = w_[r * wpr_ + (c >> 2)];
        uint32_t sh = (c & 3u) * kLaneBits;
        w = (w & ~(kLaneMask << sh)) | (uint64_t(v) << sh);
    }

    uint64_t* rowPtr(uint32_t r) { return w_.data() + r * wpr_; }
    const uint64_t* rowPtr(uint32_t r) const { return w_.data() + r * wpr_; }

    FpVec row(uint32_t r) const;
    void setRow(uint32_t r, const FpVec& v);

    bool operator==(const FpMat& o) const;
    bool isZero() const;

    FpMat mul(const FpMat& b) const;
    FpVec apply(const FpVec& v) const;          // this * v
    FpVec applyTransposed(const FpVec& v) const; // v^T * this (as column result)
    FpMat transposed() const;
    void addInPlace(const FpMat& o, uint16_t scale = 1);
    FpMat scaled(uint16_t c) const;

    struct Rref;
    Rref rref() const;
    uint32_t rank() const;
    FpMat nullspaceRows() const;                   // basis of {x : A x = 0} as rows
    std::optional<FpVec> solve(const FpVec& b) const;
    std::optional<FpMat> inverse() const;

    // Binary cache encoding: magic "LLWY", version u16, p u16, rows u32,
    // cols u32, then the digits in column-major order packed four per word.
    void write(std::ostream& os) const;
    static FpMat read(std::istream& is);

private:
    uint16_t p_ = 0;
    uint32_t rows_ = 0, cols_ = 0;
    size_t wpr_ = 0;
    std::vector<uint64_t> w_;
};

struct FpMat::Rref {
    FpMat r;
    std::vector<uint32_t> pivots;
    uint32_t rank = 0;
};

inline uint32_t FpMat::rank() const { return rref().rank; }

// Packed-row helpers shared by the elimination kernels.
namespace packed {

// dst += src * c, lanewise, no reduction.  Caller tracks headroom.
inline void axpy(uint64_t* dst, const uint64_t* src, size_t words, uint16_t c) {
    for (size_t i = 0; i < words; ++i) dst[i] += src[i] * uint64_t(c);
}

inline void normalize(uint16_t p, uint64_t* row, size_t words) {
    for (size_t i = 0; i < words; ++i) {
        uint64_t w = row[i];
        uint64_t r = 0;
        for (uint32_t l = 0; l < 4; ++l) {
            uint64_t v = (w >> (16 * l)) & 0xFFFFull;
            r |= (v % p) << (16 * l);
        }
        row[i] = r;
    }
}

// Number of unreduced axpys (with c<p, src normalized) a normalized row can
// absorb before a lane can overflow 16 bits.
inline uint32_t axpyBudget(uint16_t p) {
    uint32_t step = uint32_t(p - 1) * (p - 1);
    return (0xFFFFu - (p - 1)) / step;
}

}  // namespace packed

// Sparse matrix (row lists of (col, value)), used for module action matrices.
class FpSparse {
public:
    FpSparse() = default;
    FpSparse(uint16_t p, uint32_t rows, uint32_t cols)
        : p_(p), rows_(rows), cols_(cols), row_(rows) {}
    static FpSparse fromDense(const FpMat& m);
    FpMat toDense() const;

    uint16_t p() const { return p_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    const std::vector<std::pair<uint32_t, uint16_t>>& rowEntries(uint32_t r) const { return row_[r]; }

    void add(uint32_t r, uint32_t c, uint16_t v);  // accumulate entry
    size_t nnz() const;
    bool isZero() const { return nnz() == 0; }

    FpVec apply(const FpVec& v) const;
    FpSparse transposed() const;
    FpSparse scaled(uint16_t c) const;
    void addInPlace(const FpSparse& o, uint16_t scale = 1);
    // this * dense (dense given row-wise): out.row(r) = sum_c v * dense.row(c)
    FpMat mulDense(const FpMat& dense) const;
    FpSparse mulSparse(const FpSparse& o) const;
    bool operator==(const FpSparse& o) const;

private:
    uint16_t p_ = 0;
    uint32_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<uint32_t, uint16_t>>> row_;
};

}  // namespace llwy
