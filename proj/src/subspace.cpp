#include "llwy/subspace.hpp"

#include <algorithm>

namespace llwy {

Ech::Ech(uint16_t p, uint32_t width, bool record) : p_(p), width_(width), record_(record) {}

FpVec Ech::reduce(const FpVec& v, FpVec* exprOut) const {
    FpVec r = v;
    FpVec expr;
    if (exprOut) expr.assign(nraw_, 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint16_t c = r[piv_[i]];
        if (!c) continue;
        fpv_axpy(p_, r, rows_[i], fp_neg(p_, c));
        if (exprOut && record_)
            fpv_axpy(p_, expr, comb_[i], c);
    }
    if (exprOut) *exprOut = std::move(expr);
    return r;
}

bool Ech::insert(const FpVec& v, FpVec* exprOut, bool forceRaw) {
    FpVec expr;
    FpVec r = reduce(v, record_ ? &expr : nullptr);
    uint32_t pv = width_;
    for (uint32_t c = 0; c < width_; ++c)
        if (r[c]) { pv = c; break; }
    if (pv == width_) {
        // dependent: v = sum expr_i raw_i over the raws registered so far
        if (exprOut && record_) *exprOut = expr;
        if (forceRaw) {
            ++nraw_;
            if (record_) for (auto& cb : comb_) cb.resize(nraw_, 0);
        }
        return false;
    }
    uint16_t leadInv = fp_inv(p_, r[pv]);
    fpv_scale(p_, r, leadInv);
    if (record_) {
        // new echelon row = leadInv * (v - sum expr_i raw_i), over raws incl. the new one
        FpVec cb(nraw_ + 1, 0);
        cb[nraw_] = leadInv;
        for (uint32_t i = 0; i < nraw_; ++i) cb[i] = fp_mul(p_, fp_neg(p_, expr[i]), leadInv);
        ++nraw_;
        for (auto& old : comb_) old.resize(nraw_, 0);
        comb_.push_back(std::move(cb));
    } else {
        ++nraw_;
    }
    rows_.push_back(std::move(r));
    piv_.push_back(pv);
    if (exprOut && record_) exprOut->clear();
    return true;
}

bool Subspace::contains(const FpVec& v) const { return fpv_is_zero(reduce(v)); }

FpVec Subspace::reduce(const FpVec& v) const {
    FpVec r = v;
    for (uint32_t i = 0; i < basis.rows(); ++i) {
        uint16_t c = r[pivots[i]];
        if (!c) continue;
        uint16_t nc = fp_neg(p, c);
        for (uint32_t j = 0; j < ambient; ++j)
            r[j] = static_cast<uint16_t>((r[j] + uint32_t(basis.get(i, j)) * nc) % p);
    }
    return r;
}

FpVec Subspace::coordsOf(const FpVec& v) const {
    FpVec r = v;
    FpVec coords(basis.rows(), 0);
    for (uint32_t i = 0; i < basis.rows(); ++i) {
        uint16_t c = r[pivots[i]];
        if (!c) continue;
        coords[i] = c;
        uint16_t nc = fp_neg(p, c);
        for (uint32_t j = 0; j < ambient; ++j)
            r[j] = static_cast<uint16_t>((r[j] + uint32_t(basis.get(i, j)) * nc) % p);
    }
    if (!fpv_is_zero(r)) throw Error("Subspace::coordsOf: vector outside the span");
    return coords;
}

Subspace Subspace::fromVectors(uint16_t p, uint32_t ambient, const std::vector<FpVec>& vs) {
    return fromMatRows(FpMat::fromRows(p, vs, ambient));
}

Subspace Subspace::fromMatRows(const FpMat& m) {
    auto e = m.rref();
    Subspace s;
    s.p = m.p();
    s.ambient = m.cols();
    s.pivots = e.pivots;
    s.basis = FpMat(m.p(), e.rank, m.cols());
    for (uint32_t r = 0; r < e.rank; ++r)
        for (uint32_t c = 0; c < m.cols(); ++c) s.basis.set(r, c, e.r.get(r, c));
    return s;
}

bool Subspace::containsSubspace(const Subspace& o) const {
    for (uint32_t r = 0; r < o.basis.rows(); ++r)
        if (!contains(o.basis.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    std::vector<FpVec> rows;
    for (uint32_t r = 0; r < a.basis.rows(); ++r) rows.push_back(a.basis.row(r));
    for (uint32_t r = 0; r < b.basis.rows(); ++r) rows.push_back(b.basis.row(r));
    return fromVectors(a.p, a.ambient, rows);
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
    // Zassenhaus: row-reduce [A A; B 0]; intersection appears in the right
    // half of rows whose left half vanished.
    uint32_t n = a.ambient;
    FpMat m(a.p, a.dim() + b.dim(), 2 * n);
    for (uint32_t r = 0; r < a.dim(); ++r)
        for (uint32_t c = 0; c < n; ++c) {
            uint16_t v = a.basis.get(r, c);
            m.set(r, c, v);
            m.set(r, n + c, v);
        }
    for (uint32_t r = 0; r < b.dim(); ++r)
        for (uint32_t c = 0; c < n; ++c) m.set(a.dim() + r, c, b.basis.get(r, c));
    auto e = m.rref();
    std::vector<FpVec> rows;
    for (uint32_t r = 0; r < e.rank; ++r) {
        if (e.pivots[r] < n) continue;
        FpVec v(n);
        for (uint32_t c = 0; c < n; ++c) v[c] = e.r.get(r, n + c);
        rows.push_back(std::move(v));
    }
    return fromVectors(a.p, n, rows);
}

SpinOut spin(uint16_t p, uint32_t ambient, const std::vector<FpVec>& seeds,
             const std::vector<const FpSparse*>& gens, bool record) {
    SpinOut out;
    Ech ech(p, ambient, record);
    for (size_t s = 0; s < seeds.size(); ++s) {
        FpVec expr;
        bool indep = ech.insert(seeds[s], record ? &expr : nullptr, /*forceRaw=*/true);
        out.raw.push_back(seeds[s]);
        out.prov.push_back({-1, static_cast<int32_t>(s)});
        out.indep.push_back(indep ? 1 : 0);
        if (!indep && record) {
            // dependent seed: identity relation seed = sum expr_i raw_i
            SpinOut::Rel rel;
            rel.gen = -1;
            rel.src = static_cast<int32_t>(out.raw.size()) - 1;
            rel.coef = expr;
            out.rels.push_back(std::move(rel));
        }
    }
    for (size_t i = 0; i < out.raw.size(); ++i) {
        for (size_t g = 0; g < gens.size(); ++g) {
            FpVec img = gens[g]->apply(out.raw[i]);
            FpVec expr;
            if (ech.insert(img, record ? &expr : nullptr)) {
                out.raw.push_back(std::move(img));
                out.prov.push_back({static_cast<int32_t>(g), static_cast<int32_t>(i)});
                out.indep.push_back(1);
            } else if (record) {
                SpinOut::Rel rel;
                rel.gen = static_cast<int32_t>(g);
                rel.src = static_cast<int32_t>(i);
                rel.coef = std::move(expr);
                out.rels.push_back(std::move(rel));
            }
        }
    }
    if (record)
        for (auto& rel : out.rels) rel.coef.resize(out.raw.size(), 0);
    std::vector<FpVec> rows = out.raw;
    out.space = Subspace::fromVectors(p, ambient, rows);
    return out;
}

QuotientAction quotient_action(const std::vector<const FpSparse*>& gens, const Subspace& s) {
    QuotientAction q;
    std::vector<bool> isPivot(s.ambient, false);
    for (uint32_t c : s.pivots) isPivot[c] = true;
    for (uint32_t c = 0; c < s.ambient; ++c)
        if (!isPivot[c]) q.keptCoords.push_back(c);
    uint32_t qd = static_cast<uint32_t>(q.keptCoords.size());
    std::vector<uint32_t> pos(s.ambient, UINT32_MAX);
    for (uint32_t k = 0; k < qd; ++k) pos[q.keptCoords[k]] = k;

    for (auto* g : gens) {
        // stability check: each basis row of S must map inside S
        for (uint32_t r = 0; r < s.dim(); ++r)
            if (!s.contains(g->apply(s.basis.row(r))))
                throw Error("quotient_action: not-invariant (generator moves the subspace out)");
        FpSparse a(s.p, qd, qd);
        for (uint32_t k = 0; k < qd; ++k) {
            FpVec e(s.ambient, 0);
            e[q.keptCoords[k]] = 1;
            FpVec img = s.reduce(g->apply(e));
            for (uint32_t c = 0; c < s.ambient; ++c)
                if (img[c]) a.add(pos[c], k, img[c]);  // column k of the action
        }
        q.act.push_back(std::move(a));
    }
    return q;
}

std::vector<FpSparse> restricted_action(const std::vector<const FpSparse*>& gens, const Subspace& s) {
    std::vector<FpSparse> out;
    for (auto* g : gens) {
        FpSparse a(s.p, s.dim(), s.dim());
        for (uint32_t r = 0; r < s.dim(); ++r) {
            FpVec img = g->apply(s.basis.row(r));
            FpVec coords;
            try {
                coords = s.coordsOf(img);
            } catch (const Error&) {
                throw Error("restricted_action: not-invariant (generator moves the subspace out)");
            }
            for (uint32_t j = 0; j < s.dim(); ++j)
                if (coords[j]) a.add(j, r, coords[j]);  // column r of the action
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace llwy
