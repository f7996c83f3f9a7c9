#include "llwy/fmatrix.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>

namespace llwy {

FpMat::FpMat(uint16_t p, uint32_t rows, uint32_t cols)
    : p_(p), rows_(rows), cols_(cols), wpr_((cols + kLanes - 1) / kLanes), w_(size_t(rows) * wpr_, 0) {
    if (!fp_is_prime(p)) throw Error("FpMat: p=" + std::to_string(p) + " is not prime");
    if (p > 64) throw Error("FpMat: p=" + std::to_string(p) + " exceeds supported bound 64");
}

FpMat FpMat::identity(uint16_t p, uint32_t n) {
    FpMat m(p, n, n);
    for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::fromRows(uint16_t p, const std::vector<FpVec>& rows, uint32_t cols) {
    FpMat m(p, static_cast<uint32_t>(rows.size()), cols);
    for (uint32_t i = 0; i < rows.size(); ++i) m.setRow(i, rows[i]);
    return m;
}

FpVec FpMat::row(uint32_t r) const {
    FpVec v(cols_);
    for (uint32_t c = 0; c < cols_; ++c) v[c] = get(r, c);
    return v;
}

void FpMat::setRow(uint32_t r, const FpVec& v) {
    for (uint32_t c = 0; c < cols_ && c < v.size(); ++c) set(r, c, v[c]);
}

bool FpMat::operator==(const FpMat& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
}

bool FpMat::isZero() const {
    for (uint64_t w : w_) if (w) return false;
    return true;
}

FpMat FpMat::mul(const FpMat& b) const {
    if (cols_ != b.rows_ || p_ != b.p_) throw Error("FpMat::mul: shape/field mismatch");
    FpMat c(p_, rows_, b.cols_);
    const uint32_t budget = packed::axpyBudget(p_);
    for (uint32_t i = 0; i < rows_; ++i) {
        uint64_t* dst = c.rowPtr(i);
        uint32_t used = 0;
        for (uint32_t k = 0; k < cols_; ++k) {
            uint16_t a = get(i, k);
            if (!a) continue;
            if (used == budget) {
                packed::normalize(p_, dst, c.wpr_);
                used = 0;
            }
            packed::axpy(dst, b.rowPtr(k), c.wpr_, a);
            ++used;
        }
        packed::normalize(p_, dst, c.wpr_);
    }
    return c;
}

FpVec FpMat::apply(const FpVec& v) const {
    if (v.size() != cols_) throw Error("FpMat::apply: size mismatch");
    FpVec out(rows_, 0);
    for (uint32_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        uint32_t used = 0;
        uint32_t sum32guard = 0;
        (void)sum32guard;
        uint64_t s = 0;
        for (uint32_t c = 0; c < cols_; ++c) {
            s += uint64_t(get(i, c)) * v[c];
            if (++used == 0xFFFFFF) { s %= p_; used = 0; }
        }
        acc = s % p_;
        out[i] = static_cast<uint16_t>(acc);
    }
    return out;
}

FpVec FpMat::applyTransposed(const FpVec& v) const {
    if (v.size() != rows_) throw Error("FpMat::applyTransposed: size mismatch");
    FpVec out(cols_, 0);
    std::vector<uint64_t> acc(cols_, 0);
    for (uint32_t r = 0; r < rows_; ++r) {
        if (!v[r]) continue;
        for (uint32_t c = 0; c < cols_; ++c) acc[c] += uint64_t(get(r, c)) * v[r];
    }
    for (uint32_t c = 0; c < cols_; ++c) out[c] = static_cast<uint16_t>(acc[c] % p_);
    return out;
}

FpMat FpMat::transposed() const {
    FpMat t(p_, cols_, rows_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = 0; c < cols_; ++c) {
            uint16_t v = get(r, c);
            if (v) t.set(c, r, v);
        }
    return t;
}

void FpMat::addInPlace(const FpMat& o, uint16_t scale) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("FpMat::addInPlace: shape mismatch");
    for (uint32_t r = 0; r < rows_; ++r) {
        packed::axpy(rowPtr(r), o.rowPtr(r), wpr_, scale);
        packed::normalize(p_, rowPtr(r), wpr_);
    }
}

FpMat FpMat::scaled(uint16_t c) const {
    FpMat m(p_, rows_, cols_);
    for (uint32_t r = 0; r < rows_; ++r) {
        packed::axpy(m.rowPtr(r), rowPtr(r), wpr_, c);
        packed::normalize(p_, m.rowPtr(r), wpr_);
    }
    return m;
}

FpMat::Rref FpMat::rref() const {
    Rref out;
    out.r = *this;
    FpMat& m = out.r;
    const uint32_t budget = packed::axpyBudget(p_);
    std::vector<uint32_t> dirt(rows_, 0);  // unreduced axpys absorbed per row
    std::vector<uint16_t> inv(p_, 0);
    for (uint16_t a = 1; a < p_; ++a) inv[a] = fp_inv(p_, a);

    uint32_t r = 0;
    for (uint32_t col = 0; col < cols_ && r < rows_; ++col) {
        uint32_t pr = rows_;
        for (uint32_t i = r; i < rows_; ++i) {
            if (dirt[i]) { packed::normalize(p_, m.rowPtr(i), wpr_); dirt[i] = 0; }
            if (m.get(i, col)) { pr = i; break; }
        }
        if (pr == rows_) continue;
        if (pr != r)
            for (size_t k = 0; k < wpr_; ++k) std::swap(m.rowPtr(pr)[k], m.rowPtr(r)[k]);
        uint16_t lead = m.get(r, col);
        if (lead != 1) {
            packed::axpy(m.rowPtr(r), m.rowPtr(r), wpr_, inv[lead] - 1);
            packed::normalize(p_, m.rowPtr(r), wpr_);
        }
        for (uint32_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            if (dirt[i]) { packed::normalize(p_, m.rowPtr(i), wpr_); dirt[i] = 0; }
            uint16_t c = m.get(i, col);
            if (!c) continue;
            packed::axpy(m.rowPtr(i), m.rowPtr(r), wpr_, uint16_t(p_ - c));
            if (++dirt[i] >= budget) { packed::normalize(p_, m.rowPtr(i), wpr_); dirt[i] = 0; }
        }
        out.pivots.push_back(col);
        ++r;
    }
    for (uint32_t i = 0; i < rows_; ++i)
        if (dirt[i]) packed::normalize(p_, m.rowPtr(i), wpr_);
    out.rank = r;
    return out;
}

FpMat FpMat::nullspaceRows() const {
    Rref e = rref();
    std::vector<bool> isPivot(cols_, false);
    for (uint32_t c : e.pivots) isPivot[c] = true;
    std::vector<uint32_t> freeCols;
    for (uint32_t c = 0; c < cols_; ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    FpMat ns(p_, static_cast<uint32_t>(freeCols.size()), cols_);
    for (uint32_t k = 0; k < freeCols.size(); ++k) {
        uint32_t fc = freeCols[k];
        ns.set(k, fc, 1);
        for (uint32_t i = 0; i < e.rank; ++i) {
            uint16_t v = e.r.get(i, fc);
            if (v) ns.set(k, e.pivots[i], fp_neg(p_, v));
        }
    }
    return ns;
}

std::optional<FpVec> FpMat::solve(const FpVec& b) const {
    if (b.size() != rows_) throw Error("FpMat::solve: size mismatch");
    FpMat aug(p_, rows_, cols_ + 1);
    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
        aug.set(r, cols_, b[r]);
    }
    Rref e = aug.rref();
    FpVec x(cols_, 0);
    for (uint32_t i = 0; i < e.rank; ++i) {
        if (e.pivots[i] == cols_) return std::nullopt;  // inconsistent
        x[e.pivots[i]] = e.r.get(i, cols_);
    }
    return x;
}

std::optional<FpMat> FpMat::inverse() const {
    if (rows_ != cols_) throw Error("FpMat::inverse: not square");
    FpMat aug(p_, rows_, 2 * cols_);
    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
        aug.set(r, cols_ + r, 1);
    }
    Rref e = aug.rref();
    if (e.rank != rows_) return std::nullopt;
    for (uint32_t i = 0; i < rows_; ++i)
        if (e.pivots[i] != i) return std::nullopt;
    FpMat inv(p_, rows_, cols_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = 0; c < cols_; ++c) inv.set(r, c, e.r.get(r, cols_ + c));
    return inv;
}

namespace {
template <class T>
void putRaw(std::ostream& os, T v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); }
template <class T>
T getRaw(std::istream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw Error("matrix cache: truncated stream");
    return v;
}
}  // namespace

void FpMat::write(std::ostream& os) const {
    os.write("LLWY", 4);
    putRaw<uint16_t>(os, 1);  // version
    putRaw<uint16_t>(os, p_);
    putRaw<uint32_t>(os, rows_);
    putRaw<uint32_t>(os, cols_);
    uint64_t w = 0;
    uint32_t lane = 0;
    for (uint32_t c = 0; c < cols_; ++c)
        for (uint32_t r = 0; r < rows_; ++r) {
            w |= uint64_t(get(r, c)) << (16 * lane);
            if (++lane == 4) { putRaw<uint64_t>(os, w); w = 0; lane = 0; }
        }
    if (lane) putRaw<uint64_t>(os, w);
}

FpMat FpMat::read(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "LLWY", 4) != 0) throw Error("matrix cache: bad magic");
    uint16_t ver = getRaw<uint16_t>(is);
    if (ver != 1) throw Error("matrix cache: version-mismatch (got " + std::to_string(ver) + ")");
    uint16_t p = getRaw<uint16_t>(is);
    uint32_t rows = getRaw<uint32_t>(is), cols = getRaw<uint32_t>(is);
    FpMat m(p, rows, cols);
    uint64_t w = 0;
    uint32_t lane = 4;
    for (uint32_t c = 0; c < cols; ++c)
        for (uint32_t r = 0; r < rows; ++r) {
            if (lane == 4) { w = getRaw<uint64_t>(is); lane = 0; }
            uint16_t v = static_cast<uint16_t>((w >> (16 * lane)) & 0xFFFF);
            if (v >= p) throw Error("matrix cache: digit out of range");
            m.set(r, c, v);
            ++lane;
        }
    return m;
}

FpSparse FpSparse::fromDense(const FpMat& m) {
    FpSparse s(m.p(), m.rows(), m.cols());
    for (uint32_t r = 0; r < m.rows(); ++r)
        for (uint32_t c = 0; c < m.cols(); ++c) {
            uint16_t v = m.get(r, c);
            if (v) s.row_[r].emplace_back(c, v);
        }
    return s;
}

FpMat FpSparse::toDense() const {
    FpMat m(p_, rows_, cols_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : row_[r]) m.set(r, c, v);
    return m;
}

void FpSparse::add(uint32_t r, uint32_t c, uint16_t v) {
    if (!v) return;
    auto& lst = row_[r];
    for (auto& e : lst)
        if (e.first == c) {
            e.second = fp_add(p_, e.second, v);
            if (e.second == 0) { e = lst.back(); lst.pop_back(); }
            return;
        }
    lst.emplace_back(c, v);
}

size_t FpSparse::nnz() const {
    size_t n = 0;
    for (auto& r : row_) n += r.size();
    return n;
}

FpVec FpSparse::apply(const FpVec& v) const {
    FpVec out(rows_, 0);
    for (uint32_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        for (auto& [c, x] : row_[r]) acc += uint64_t(x) * v[c];
        out[r] = static_cast<uint16_t>(acc % p_);
    }
    return out;
}

FpSparse FpSparse::transposed() const {
    FpSparse t(p_, cols_, rows_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : row_[r]) t.row_[c].emplace_back(r, v);
    return t;
}

FpSparse FpSparse::scaled(uint16_t c) const {
    FpSparse s(p_, rows_, cols_);
    if (c % p_ == 0) return s;
    for (uint32_t r = 0; r < rows_; ++r)
        for (auto& [col, v] : row_[r]) s.row_[r].emplace_back(col, fp_mul(p_, v, c));
    return s;
}

void FpSparse::addInPlace(const FpSparse& o, uint16_t scale) {
    for (uint32_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : o.row_[r]) add(r, c, fp_mul(p_, v, scale));
}

FpMat FpSparse::mulDense(const FpMat& dense) const {
    if (cols_ != dense.rows() || p_ != dense.p()) throw Error("FpSparse::mulDense: mismatch");
    FpMat out(p_, rows_, dense.cols());
    const uint32_t budget = packed::axpyBudget(p_);
    for (uint32_t r = 0; r < rows_; ++r) {
        uint64_t* dst = out.rowPtr(r);
        uint32_t used = 0;
        for (auto& [c, v] : row_[r]) {
            if (used == budget) { packed::normalize(p_, dst, out.wordsPerRow()); used = 0; }
            packed::axpy(dst, dense.rowPtr(c), out.wordsPerRow(), v);
            ++used;
        }
        packed::normalize(p_, dst, out.wordsPerRow());
    }
    return out;
}

FpSparse FpSparse::mulSparse(const FpSparse& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw Error("FpSparse::mulSparse: mismatch");
    FpSparse out(p_, rows_, o.cols_);
    std::vector<uint32_t> acc(o.cols_, 0);
    std::vector<uint32_t> touched;
    for (uint32_t r = 0; r < rows_; ++r) {
        touched.clear();
        for (auto& [k, v] : row_[r])
            for (auto& [c, w] : o.row_[k]) {
                if (!acc[c]) touched.push_back(c);
                acc[c] = (acc[c] + uint32_t(v) * w) % p_;
            }
        for (uint32_t c : touched) {
            if (acc[c]) out.row_[r].emplace_back(c, static_cast<uint16_t>(acc[c]));
            acc[c] = 0;
        }
        std::sort(out.row_[r].begin(), out.row_[r].end());
    }
    return out;
}

bool FpSparse::operator==(const FpSparse& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) return false;
    for (uint32_t r = 0; r < rows_; ++r) {
        auto a = row_[r];
        auto b = o.row_[r];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

}  // namespace llwy
