#include "llwy/hom.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace llwy {

namespace {

// split module generators into (degree, weight)-pure components
std::vector<FpVec> pureSeeds(const GradedModule& M) {
    std::vector<FpVec> seeds;
    for (auto& g : M.gens) {
        std::map<std::pair<std::vector<int32_t>, std::vector<uint16_t>>, FpVec> parts;
        for (uint32_t i = 0; i < M.dim; ++i) {
            if (!g[i]) continue;
            auto key = std::make_pair(M.deg[i].rep, M.wt[i]);
            auto it = parts.find(key);
            if (it == parts.end()) it = parts.emplace(key, FpVec(M.dim, 0)).first;
            it->second[i] = g[i];
        }
        for (auto& [k, v] : parts) seeds.push_back(v);
    }
    return seeds;
}

struct Candidates {
    // per seed: list of N-coordinates forming the admissible block
    std::vector<std::vector<uint32_t>> block;
    uint32_t total = 0;
};

Candidates candidateBlocks(const GradedModule& M, const GradedModule& N,
                           const std::vector<FpVec>& seeds, bool graded, const DegreeClass& shift) {
    Candidates c;
    for (auto& s : seeds) {
        uint32_t lead = 0;
        while (lead < M.dim && !s[lead]) ++lead;
        std::vector<uint32_t> blk;
        if (lead < M.dim) {
            DegreeClass want = M.L->rd->class_add(M.deg[lead], shift);
            for (uint32_t k = 0; k < N.dim; ++k) {
                if (N.wt[k] != M.wt[lead]) continue;
                if (graded && !(N.deg[k] == want)) continue;
                blk.push_back(k);
            }
        }
        c.total += static_cast<uint32_t>(blk.size());
        c.block.push_back(std::move(blk));
    }
    return c;
}

// propagate one candidate assignment through the spin schedule
std::vector<FpVec> propagate(const SpinOut& rec, const GradedModule& N,
                             const std::vector<const FpSparse*>& nAct, const FpVec& w,
                             const Candidates& cand) {
    std::vector<FpVec> f(rec.raw.size());
    uint32_t off = 0;
    std::vector<FpVec> seedVal(cand.block.size(), FpVec(N.dim, 0));
    for (size_t s = 0; s < cand.block.size(); ++s) {
        for (uint32_t t = 0; t < cand.block[s].size(); ++t)
            seedVal[s][cand.block[s][t]] = w[off + t];
        off += static_cast<uint32_t>(cand.block[s].size());
    }
    for (size_t i = 0; i < rec.raw.size(); ++i) {
        auto [g, src] = rec.prov[i];
        if (g < 0)
            f[i] = seedVal[src];
        else
            f[i] = nAct[g]->apply(f[src]);
    }
    return f;
}

FpMat assembleF(const SpinOut& rec, const GradedModule& M, const GradedModule& N,
                const std::vector<FpVec>& f, const FpMat& Binv,
                const std::vector<uint32_t>& indepIdx) {
    // F = (columns f[i] over the independent raws) * Binv
    FpMat FB(M.p(), N.dim, M.dim);
    for (uint32_t c = 0; c < indepIdx.size(); ++c)
        for (uint32_t r = 0; r < N.dim; ++r) {
            uint16_t v = f[indepIdx[c]][r];
            if (v) FB.set(r, c, v);
        }
    return FB.mul(Binv);
}

bool intertwines(const GradedModule& M, const GradedModule& N, const FpMat& F) {
    for (size_t ai = 0; ai < M.acting.size(); ++ai) {
        const FpSparse* nA = N.actionOf(M.acting[ai]);
        if (!nA) return false;
        FpMat lhs = nA->mulDense(F);
        FpMat rhs = M.act[ai].transposed().mulDense(F.transposed()).transposed();
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::vector<FpMat> homCore(const GradedModule& M, const GradedModule& N, bool graded,
                           const DegreeClass& shift, uint64_t seed) {
    const uint16_t p = M.p();
    if (M.dim == 0 || N.dim == 0) return {};
    const_cast<GradedModule&>(M).ensureGenerators();
    std::vector<FpVec> seeds = pureSeeds(M);
    if (seeds.empty()) return {};

    auto rec = spin(p, M.dim, seeds, M.actPtrs(), /*record=*/true);
    if (rec.space.dim() != M.dim)
        throw Error("hom_space: generators fail to span the source module");
    Candidates cand = candidateBlocks(M, N, seeds, graded, shift);
    const uint32_t u = cand.total;
    if (u == 0) return {};

    std::vector<uint32_t> indepIdx;
    for (size_t i = 0; i < rec.raw.size(); ++i)
        if (rec.indep[i]) indepIdx.push_back(static_cast<uint32_t>(i));
    FpMat B(p, M.dim, M.dim);
    for (uint32_t r = 0; r < indepIdx.size(); ++r) B.setRow(r, rec.raw[indepIdx[r]]);
    auto BinvOpt = B.inverse();
    if (!BinvOpt) throw Error("hom_space: standard basis not invertible");
    // columns of F correspond to basis vectors; we need F * raw_i = f_i, i.e.
    // F * B^T = FB, so F = FB * (B^T)^{-1}
    FpMat Binv = BinvOpt->transposed();

    std::vector<const FpSparse*> nAct;
    for (int b : M.acting) {
        const FpSparse* a = N.actionOf(b);
        if (!a) throw Error("hom_space: acting sets differ");
        nAct.push_back(a);
    }

    std::vector<FpSparse> nActT;
    for (auto* a : nAct) nActT.push_back(a->transposed());

    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
    uint32_t T = 12;
    const size_t nraw = rec.raw.size();
    for (int attempt = 0; attempt < 3; ++attempt, T *= 2) {
        // Random functionals pi_t and relation weights rho; every relation
        // residual is folded into one test matrix R_t per projection with
        // S_t(c) = sum_j R_t[j] . f_c[j], linear in the candidate c.
        std::vector<std::vector<FpVec>> R(T, std::vector<FpVec>(nraw, FpVec(N.dim, 0)));
        for (uint32_t t = 0; t < T; ++t) {
            FpVec pi(N.dim);
            for (auto& x : pi) x = static_cast<uint16_t>(rng() % p);
            FpVec b(nraw, 0);  // b_j = sum_rel rho_rel coef_j
            for (auto& rel : rec.rels) {
                uint16_t rho = static_cast<uint16_t>(1 + rng() % (p - 1));
                FpVec qa = rel.gen >= 0 ? nActT[rel.gen].apply(pi) : pi;
                fpv_axpy(p, R[t][rel.src], qa, rho);
                for (size_t j = 0; j < nraw; ++j)
                    if (rel.coef[j]) b[j] = fp_add(p, b[j], fp_mul(p, rho, rel.coef[j]));
            }
            for (size_t j = 0; j < nraw; ++j)
                if (b[j]) fpv_axpy(p, R[t][j], pi, fp_neg(p, b[j]));
        }
        // evaluate S on each candidate unit vector
        FpMat S(p, T, u);
        for (uint32_t c = 0; c < u; ++c) {
            FpVec w(u, 0);
            w[c] = 1;
            auto f = propagate(rec, N, nAct, w, cand);
            for (uint32_t t = 0; t < T; ++t) {
                uint64_t acc = 0;
                for (size_t j = 0; j < nraw; ++j) {
                    const FpVec& fj = f[j];
                    const FpVec& rj = R[t][j];
                    for (uint32_t k = 0; k < N.dim; ++k)
                        if (rj[k]) acc += uint64_t(rj[k]) * fj[k];
                }
                S.set(t, c, static_cast<uint16_t>(acc % p));
            }
        }
        FpMat ker = S.nullspaceRows();
        std::vector<FpMat> out;
        bool allGood = true;
        for (uint32_t r = 0; r < ker.rows(); ++r) {
            FpVec w = ker.row(r);
            auto f = propagate(rec, N, nAct, w, cand);
            FpMat F = assembleF(rec, M, N, f, Binv, indepIdx);
            if (!intertwines(M, N, F)) { allGood = false; break; }
            out.push_back(std::move(F));
        }
        if (allGood) return out;
    }
    throw Error("hom_space: random projections failed to stabilize");
}

}  // namespace

std::vector<FpMat> hom_space(const GradedModule& M, const GradedModule& N, bool graded,
                             const DegreeClass& shift, uint64_t seed) {
    if (M.L != N.L) throw Error("hom_space: different algebras");
    if (M.chi.chiF != N.chi.chiF) throw Error("hom_space: different p-characters");
    if (M.dim > N.dim) {
        // Hom(M, N) = Hom(N*, M*) via transposition (dual has -chi)
        auto nd = plain_dual(N);
        auto md = plain_dual(M);
        auto duals = hom_space(nd, md, graded, shift, seed);
        std::vector<FpMat> out;
        for (auto& G : duals) out.push_back(G.transposed());
        return out;
    }
    return homCore(M, N, graded, shift, seed);
}

std::vector<FpMat> hom_space(const GradedModule& M, const GradedModule& N) {
    return hom_space(M, N, true, zero_shift(M));
}

Subspace image_of(const FpMat& F) { return Subspace::fromMatRows(F.transposed()); }

Subspace kernel_of(const FpMat& F) { return Subspace::fromMatRows(F.nullspaceRows()); }

FpMat compose(const FpMat& G, const FpMat& F) { return G.mul(F); }

IsoResult iso_test(const GradedModule& M, const GradedModule& N, bool allowShift, uint64_t seed) {
    IsoResult res;
    res.shift = zero_shift(M);
    if (M.dim != N.dim) return res;
    if (M.dim == 0) {
        res.iso = true;
        return res;
    }
    std::set<std::vector<int32_t>> shifts;
    if (!allowShift) {
        shifts.insert(zero_shift(M).rep);
    } else {
        const_cast<GradedModule&>(M).ensureGenerators();
        auto seeds = pureSeeds(M);
        if (seeds.empty()) return res;
        uint32_t lead = 0;
        while (lead < M.dim && !seeds[0][lead]) ++lead;
        for (uint32_t k = 0; k < N.dim; ++k)
            if (N.wt[k] == M.wt[lead])
                shifts.insert(M.L->rd->class_add(N.deg[k], M.L->rd->class_neg(M.deg[lead])).rep);
    }
    std::mt19937_64 rng(seed + 17);
    for (auto& sh : shifts) {
        DegreeClass shift{sh};
        auto homs = hom_space(M, N, true, shift, seed);
        if (homs.empty()) continue;
        for (auto& F : homs)
            if (F.rank() == M.dim) {
                res.iso = true;
                res.map = F;
                res.shift = shift;
                return res;
            }
        for (int t = 0; t < 200; ++t) {
            FpMat F(M.p(), N.dim, M.dim);
            for (auto& H : homs) F.addInPlace(H, static_cast<uint16_t>(rng() % M.p()));
            if (F.rank() == M.dim) {
                res.iso = true;
                res.map = F;
                res.shift = shift;
                return res;
            }
        }
    }
    return res;
}

}  // namespace llwy
