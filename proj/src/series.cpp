#include "llwy/series.hpp"

#include <algorithm>
#include <random>

namespace llwy {

std::string SimpleId::str() const {
    std::string s = "L(";
    for (size_t i = 0; i < rep.size(); ++i) s += (i ? "," : "") + std::to_string(rep[i]);
    return s + ")";
}

uint32_t ChopResult::length() const {
    uint32_t n = 0;
    for (auto& f : factors) n += f.mult;
    return n;
}

const ChopFactor* ChopResult::find(const SimpleId& id) const {
    for (auto& f : factors)
        if (f.id == id) return &f;
    return nullptr;
}

bool ChopResult::sameMultiset(const ChopResult& o) const {
    if (factors.size() != o.factors.size()) return false;
    for (auto& f : factors) {
        const ChopFactor* g = o.find(f.id);
        if (!g || g->mult != f.mult) return false;
    }
    return true;
}

std::string ChopResult::str() const {
    std::string s = "{";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ", ";
        s += factors[i].id.str();
        if (factors[i].mult > 1) s += "^" + std::to_string(factors[i].mult);
    }
    return s + "}";
}

SimpleId identify_simple(const GradedModule& m) {
    const LieAlgebra& g = *m.L;
    const uint16_t p = m.p();
    // intersection of the kernels of the simple positive root vectors in the
    // acting set (n+ is generated by them)
    std::vector<FpVec> stackRows;
    uint32_t nGen = 0;
    for (int i = 0; i < g.rd->rank; ++i) {
        const FpSparse* a = m.actionOf(g.eIdx(g.rd->simpleRootPos(i)));
        if (a) ++nGen;
    }
    FpMat big(p, nGen * m.dim, m.dim);
    uint32_t off = 0;
    for (int i = 0; i < g.rd->rank; ++i) {
        const FpSparse* a = m.actionOf(g.eIdx(g.rd->simpleRootPos(i)));
        if (!a) continue;
        for (uint32_t r = 0; r < m.dim; ++r)
            for (auto& [c, v] : a->rowEntries(r)) big.set(off + r, c, v);
        off += m.dim;
    }
    FpMat ker = big.nullspaceRows();
    if (ker.rows() == 0) throw Error("identify_simple: no highest-weight vectors");
    Subspace K = Subspace::fromMatRows(ker);
    auto pure = block_refine(m, K);

    SimpleId id;
    bool first = true;
    for (auto& v : pure) {
        uint32_t lead = 0;
        while (lead < m.dim && !v[lead]) ++lead;
        // lift (weight mod p, degree class) to an exact weight mu:
        // mu = classRep + x with x in ZI, x = wt - classRep (mod p)
        const Weight& cls = m.deg[lead].rep;
        const auto& w = m.wt[lead];
        int rank = g.rd->rank;
        std::vector<Weight> zi;
        for (int i : g.rd->levi) zi.push_back(g.rd->pos[g.rd->simpleRootPos(i)].w);
        Weight target(rank);
        for (int k = 0; k < rank; ++k) target[k] = fp_norm(p, (int64_t)w[k] - cls[k]);
        // enumerate ZI/pZI
        size_t nz = zi.size();
        std::vector<int> ns(nz, 0);
        bool found = false;
        Weight mu;
        while (true) {
            Weight x(rank, 0);
            for (size_t i = 0; i < nz; ++i) x = wadd(x, wscale(ns[i], zi[i]));
            bool ok = true;
            for (int k = 0; k < rank; ++k)
                if (fp_norm(p, x[k]) != target[k]) ok = false;
            if (ok) {
                mu = wadd(cls, x);
                found = true;
                break;
            }
            size_t i = 0;
            while (i < nz && ++ns[i] == p) ns[i++] = 0;
            if (i == nz) break;
        }
        if (!found) throw Error("identify_simple: weight and degree labels are inconsistent");
        Weight rep = g.rd->canonical_linkage_rep(mu, p);
        if (first) {
            id.rep = rep;
            first = false;
        } else if (!(id.rep == rep)) {
            throw Error("identify_simple: highest-weight vectors in different linkage classes");
        }
    }
    return id;
}

void assert_split(const GradedModule& simple) {
    auto ends = hom_space(simple, simple);
    if (ends.size() != 1)
        throw Error("split-field-needed: End(L) is larger than F_p (dim " +
                    std::to_string(ends.size()) + "); quadratic escalation not implemented");
}

namespace {

// random algebra element as a dense matrix: a product of random sums of the
// generator matrices (plus identity offsets), seeded
FpMat randomWord(const GradedModule& m, std::mt19937_64& rng) {
    const uint16_t p = m.p();
    auto randomSum = [&]() {
        FpMat s(p, m.dim, m.dim);
        for (auto& a : m.act) {
            uint16_t c = static_cast<uint16_t>(rng() % p);
            if (!c) continue;
            s.addInPlace(a.toDense(), c);
        }
        return s;
    };
    FpMat w = randomSum();
    int len = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < len; ++t) {
        FpMat nxt = randomSum();
        uint16_t shiftC = static_cast<uint16_t>(rng() % p);
        for (uint32_t i = 0; i < m.dim; ++i) nxt.set(i, i, fp_add(p, nxt.get(i, i), shiftC));
        w = w.mul(nxt);
    }
    return w;
}

void chopRec(const GradedModule& m, std::mt19937_64& rng, std::vector<GradedModule>& out) {
    if (m.dim == 0) return;
    const uint16_t p = m.p();
    std::vector<const FpSparse*> gens = m.actPtrs();
    auto splitBy = [&](const Subspace& s) {
        auto sub = submodule(m, s);
        auto quo = quotient(m, s);
        chopRec(sub, rng, out);
        chopRec(quo, rng, out);
    };
    std::vector<FpSparse> tAct;
    for (auto& a : m.act) tAct.push_back(a.transposed());
    std::vector<const FpSparse*> tGens;
    for (auto& a : tAct) tGens.push_back(&a);

    for (int attempt = 0;; ++attempt) {
        if (attempt > 400) throw Error("chop: no decisive word found");
        FpMat w = randomWord(m, rng);
        FpMat ker = w.nullspaceRows();
        const uint32_t d = ker.rows();
        if (d == 0) continue;
        // kernel lines to try: all of them when the nullity is small (needed
        // for Norton's certificate), otherwise a sample
        std::vector<FpVec> lines;
        if (d <= 3) {
            std::vector<uint16_t> coef(d, 0);
            while (true) {
                size_t i = 0;
                while (i < d && ++coef[i] == p) coef[i++] = 0;
                if (i == d) break;
                size_t lead = 0;
                while (lead < d && !coef[lead]) ++lead;
                if (coef[lead] != 1) continue;
                FpVec v(m.dim, 0);
                for (uint32_t j = 0; j < d; ++j)
                    if (coef[j]) fpv_axpy(p, v, ker.row(j), coef[j]);
                lines.push_back(std::move(v));
            }
        } else {
            for (uint32_t r = 0; r < d && r < 6; ++r) lines.push_back(ker.row(r));
            for (int t = 0; t < 6; ++t) {
                FpVec v(m.dim, 0);
                for (uint32_t j = 0; j < d; ++j) {
                    uint16_t c = static_cast<uint16_t>(rng() % p);
                    if (c) fpv_axpy(p, v, ker.row(j), c);
                }
                if (!fpv_is_zero(v)) lines.push_back(std::move(v));
            }
        }
        bool allFull = true;
        for (auto& v : lines) {
            auto sp = spin(p, m.dim, {v}, gens, false);
            if (sp.space.dim() < m.dim) {
                splitBy(sp.space);
                return;
            }
        }
        // transpose side: a proper spin there yields a proper submodule as its
        // annihilator, independently of the primal outcome
        FpMat kerT = w.transposed().nullspaceRows();
        auto spT = spin(p, m.dim, {kerT.row(0)}, tGens, false);
        if (spT.space.dim() < m.dim) {
            splitBy(Subspace::fromMatRows(spT.space.basis.nullspaceRows()));
            return;
        }
        if (d <= 3 && allFull) {
            out.push_back(m);  // Norton's criterion certifies irreducibility
            return;
        }
    }
}

}  // namespace

ChopResult chop(const GradedModule& m, uint64_t seed) {
    if (m.dim == 0) throw Error("chop: zero module");
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    std::vector<GradedModule> pieces;
    chopRec(m, rng, pieces);
    ChopResult res;
    res.inputDim = m.dim;
    uint32_t total = 0;
    for (auto& piece : pieces) {
        total += piece.dim;
        SimpleId id = identify_simple(piece);
        bool foundIt = false;
        for (auto& f : res.factors)
            if (f.id == id) {
                if (f.module.dim != piece.dim)
                    throw Error("chop: equal ids with different dimensions");
                ++f.mult;
                foundIt = true;
            }
        if (!foundIt) {
            assert_split(piece);
            ChopFactor f;
            f.module = std::move(piece);
            f.id = id;
            f.mult = 1;
            res.factors.push_back(std::move(f));
        }
    }
    if (total != m.dim) throw Error("chop: dimensions do not sum up");
    std::sort(res.factors.begin(), res.factors.end(),
              [](const ChopFactor& a, const ChopFactor& b) { return a.id < b.id; });
    return res;
}

Subspace radical_subspace(const GradedModule& m, const std::vector<const GradedModule*>& simples) {
    // intersection of kernels of all maps onto block simples (exact grading:
    // simples of the same class are isomorphic without shift)
    Subspace rad = Subspace::fromMatRows(FpMat::identity(m.p(), m.dim));
    for (auto* Ls : simples) {
        auto homs = hom_space(m, *Ls);
        for (auto& F : homs) rad = Subspace::intersect(rad, kernel_of(F));
    }
    // the quotient must be semisimple; cheap sanity: head is nonzero for m != 0
    if (m.dim && rad.dim() == m.dim) throw Error("radical: rad M = M for a nonzero module");
    return rad;
}

Subspace socle_subspace(const GradedModule& m, const std::vector<const GradedModule*>& simples) {
    std::vector<FpVec> rows;
    for (auto* Ls : simples) {
        auto homs = hom_space(*Ls, m);
        for (auto& F : homs) {
            FpMat t = F.transposed();
            for (uint32_t r = 0; r < t.rows(); ++r) rows.push_back(t.row(r));
        }
    }
    auto soc = Subspace::fromVectors(m.p(), m.dim, rows);
    if (m.dim && soc.dim() == 0) throw Error("socle: soc M = 0 for a nonzero module");
    return soc;
}

std::vector<Subspace> radical_chain(const GradedModule& m,
                                    const std::vector<const GradedModule*>& simples) {
    std::vector<Subspace> chain;
    chain.push_back(Subspace::fromMatRows(FpMat::identity(m.p(), m.dim)));
    GradedModule cur = m;
    // ambient rows of the current term
    std::vector<FpVec> curRows;
    for (uint32_t i = 0; i < m.dim; ++i) {
        FpVec e(m.dim, 0);
        e[i] = 1;
        curRows.push_back(e);
    }
    while (cur.dim > 0) {
        Subspace rad = radical_subspace(cur, simples);
        std::vector<FpVec> absRows;
        for (uint32_t r = 0; r < rad.dim(); ++r) {
            FpVec row = rad.basis.row(r);
            FpVec abs(m.dim, 0);
            for (uint32_t j = 0; j < cur.dim; ++j)
                if (row[j]) fpv_axpy(m.p(), abs, curRows[j], row[j]);
            absRows.push_back(abs);
        }
        chain.push_back(Subspace::fromVectors(m.p(), m.dim, absRows));
        if (rad.dim() == 0) break;
        std::vector<FpVec> subRows;
        cur = submodule(cur, rad, &subRows);
        std::vector<FpVec> nextRows;
        for (auto& row : subRows) {
            FpVec abs(m.dim, 0);
            for (uint32_t j = 0; j < row.size(); ++j)
                if (row[j]) fpv_axpy(m.p(), abs, curRows[j], row[j]);
            nextRows.push_back(abs);
        }
        curRows = nextRows;
    }
    return chain;
}

std::vector<Subspace> socle_chain(const GradedModule& m,
                                  const std::vector<const GradedModule*>& simples) {
    std::vector<Subspace> chain;
    Subspace S = Subspace::fromVectors(m.p(), m.dim, {});
    chain.push_back(S);
    while (S.dim() < m.dim) {
        std::vector<uint32_t> kept;
        GradedModule q = quotient(m, S, &kept);
        Subspace socQ = socle_subspace(q, simples);
        std::vector<FpVec> rows;
        for (uint32_t r = 0; r < S.dim(); ++r) rows.push_back(S.basis.row(r));
        for (uint32_t r = 0; r < socQ.dim(); ++r) {
            FpVec row = socQ.basis.row(r);
            FpVec abs(m.dim, 0);
            for (uint32_t j = 0; j < q.dim; ++j)
                if (row[j]) abs[kept[j]] = row[j];
            rows.push_back(abs);
        }
        Subspace next = Subspace::fromVectors(m.p(), m.dim, rows);
        if (next.dim() == S.dim()) throw Error("socle_chain: stalled");
        S = next;
        chain.push_back(S);
    }
    return chain;
}

LoewySeries loewy(const GradedModule& m, uint64_t seed) {
    LoewySeries out;
    if (m.dim == 0) return out;
    ChopResult all = chop(m, seed);
    std::vector<const GradedModule*> lib;
    for (auto& f : all.factors) lib.push_back(&f.module);

    // radical series
    {
        GradedModule cur = m;
        while (cur.dim > 0) {
            Subspace rad = radical_subspace(cur, lib);
            out.radLayers.push_back(chop(quotient(cur, rad), seed + 7));
            if (rad.dim() == 0) break;
            cur = submodule(cur, rad);
        }
    }
    // socle series
    {
        GradedModule cur = m;
        while (cur.dim > 0) {
            Subspace soc = socle_subspace(cur, lib);
            out.socLayers.push_back(chop(submodule(cur, soc), seed + 11));
            if (soc.dim() == cur.dim) break;
            cur = quotient(cur, soc);
        }
    }
    if (out.radLayers.size() != out.socLayers.size())
        throw Error("loewy: radical and socle series lengths differ");
    out.ll = static_cast<uint32_t>(out.radLayers.size());
    // radical layers are semisimple: rad of each layer must vanish; this is
    // implied by the construction, but the multiset conservation is cheap
    uint32_t sum = 0;
    for (auto& l : out.radLayers)
        for (auto& f : l.factors) sum += f.mult * f.module.dim;
    if (sum != m.dim) throw Error("loewy: radical layers do not fill the module");
    return out;
}

}  // namespace llwy
