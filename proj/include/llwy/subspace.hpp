#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "llwy/fmatrix.hpp"

namespace llwy {

// Growing echelonized span with membership tests.  With `record` set, each
// inserted vector's expression over the raw inserted family is tracked, which
// the spinning homomorphism engine needs for its dependency relations.
class Ech {
public:
    Ech(uint16_t p, uint32_t width, bool record = false);

    // Reduce v against the current rows.  Returns the remainder; if exprOut is
    // non-null and recording is on, *exprOut holds coefficients over the raw
    // inserted vectors such that v = sum expr_i * raw_i + remainder.
    FpVec reduce(const FpVec& v, FpVec* exprOut = nullptr) const;
    // Insert v.  Returns true if independent (a new echelon row was stored).
    // An independent insert always registers a new raw vector; a dependent one
    // registers a raw vector only with forceRaw (its expression over the
    // earlier raws is then reported through exprOut).
    bool insert(const FpVec& v, FpVec* exprOut = nullptr, bool forceRaw = false);

    uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
    uint32_t width() const { return width_; }
    bool contains(const FpVec& v) const { return fpv_is_zero(reduce(v)); }
    const std::vector<FpVec>& rows() const { return rows_; }
    const std::vector<uint32_t>& pivots() const { return piv_; }
    uint32_t rawCount() const { return nraw_; }

private:
    uint16_t p_;
    uint32_t width_;
    bool record_;
    uint32_t nraw_ = 0;
    std::vector<FpVec> rows_;      // echelon rows (pivot-normalized, not full RREF)
    std::vector<uint32_t> piv_;    // pivot column per row
    std::vector<FpVec> comb_;      // expression of each row over raw vectors
};

// Immutable subspace in reduced row-echelon form.
struct Subspace {
    uint16_t p = 0;
    uint32_t ambient = 0;
    FpMat basis;                    // RREF rows
    std::vector<uint32_t> pivots;

    uint32_t dim() const { return basis.rows(); }
    bool contains(const FpVec& v) const;
    FpVec reduce(const FpVec& v) const;                  // remainder mod the span
    FpVec coordsOf(const FpVec& v) const;                // expression over basis rows (throws if outside)
    static Subspace fromVectors(uint16_t p, uint32_t ambient, const std::vector<FpVec>& vs);
    static Subspace fromMatRows(const FpMat& m);
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
    bool containsSubspace(const Subspace& o) const;
    static Subspace sum(const Subspace& a, const Subspace& b);
    static Subspace intersect(const Subspace& a, const Subspace& b);
};

// Spin: smallest subspace containing the seeds and stable under all
// generators.  With `record`, the discovery schedule and the dependency
// relations gen*raw_src = sum coef_j raw_j are kept.
struct SpinOut {
    std::vector<FpVec> raw;                     // seeds first, then discovered images
    std::vector<std::array<int32_t, 2>> prov;   // {genIdx, srcIdx}; {-1, seedIdx} for seeds
    std::vector<uint8_t> indep;                 // raw[i] grew the span when inserted
    struct Rel {
        int32_t gen, src;
        FpVec coef;                             // over raw, length = raw.size() at completion
    };
    std::vector<Rel> rels;                      // only when recorded
    Subspace space;
};

SpinOut spin(uint16_t p, uint32_t ambient, const std::vector<FpVec>& seeds,
             const std::vector<const FpSparse*>& gens, bool record = false);

// Induced action of each generator on ambient/S in the non-pivot coordinates.
// Throws "not-invariant" if S is not stable.
struct QuotientAction {
    std::vector<FpSparse> act;
    std::vector<uint32_t> keptCoords;  // ambient coordinates indexing the quotient basis
};
QuotientAction quotient_action(const std::vector<const FpSparse*>& gens, const Subspace& s);

// Action of each generator on S itself, in the coordinates of S's RREF basis.
std::vector<FpSparse> restricted_action(const std::vector<const FpSparse*>& gens, const Subspace& s);

}  // namespace llwy
