#include "llwy/quasi.hpp"

#include <algorithm>
#include <set>

namespace llwy {

BlockContext BlockContext::make(std::shared_ptr<const LieAlgebra> L, const PChar& chi) {
    BlockContext ctx;
    ctx.L = L;
    ctx.chi = chi;
    ctx.AI = regular_algebra(L, chi, L->subalgebra(Subalg::levi_gI));
    ctx.leviSimpleList = levi_simples(L, chi);
    return ctx;
}

const GradedModule& BlockContext::leviPim(const Weight& lam) {
    auto it = pimCache.find(lam);
    if (it != pimCache.end()) return it->second;
    std::vector<const GradedModule*> lib;
    for (auto& z : leviSimpleList) lib.push_back(&z);
    GradedModule s = levi_baby_verma(L, chi, lam);
    GradedModule q = pim(AI, s, lib);
    return pimCache.emplace(lam, std::move(q)).first->second;
}

GradedModule standard_module(BlockContext& ctx, const Weight& lam) {
    return parabolic_induce(ctx.L, ctx.chi, false, ctx.leviPim(lam));
}

GradedModule costandard_module(BlockContext& ctx, const Weight& muTwisted) {
    return parabolic_induce(ctx.L, ctx.chi, true, ctx.leviPim(muTwisted));
}

namespace {

// indices of the coordinates in a given degree class
std::vector<uint32_t> classSlice(const GradedModule& m, const DegreeClass& cls) {
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < m.dim; ++i)
        if (m.deg[i] == cls) idx.push_back(i);
    return idx;
}

bool sliceInvertible(const GradedModule& A, const GradedModule& B, const FpMat& F,
                     const DegreeClass& cls) {
    auto srcIdx = classSlice(A, cls);
    auto dstIdx = classSlice(B, cls);
    if (srcIdx.size() != dstIdx.size() || srcIdx.empty()) return false;
    FpMat sub(A.p(), static_cast<uint32_t>(dstIdx.size()), static_cast<uint32_t>(srcIdx.size()));
    for (uint32_t r = 0; r < dstIdx.size(); ++r)
        for (uint32_t c = 0; c < srcIdx.size(); ++c) sub.set(r, c, F.get(dstIdx[r], srcIdx[c]));
    return sub.rank() == srcIdx.size();
}

// enumerate nonzero combinations of the hom basis up to scalars
std::vector<FpMat> homCombos(const std::vector<FpMat>& homs, uint16_t p) {
    std::vector<FpMat> out;
    size_t d = homs.size();
    if (d == 0) return out;
    if (d > 3) {
        out = homs;  // fall back to the basis itself
        return out;
    }
    std::vector<uint16_t> c(d, 0);
    while (true) {
        size_t i = 0;
        while (i < d && ++c[i] == p) c[i++] = 0;
        if (i == d) break;
        size_t lead = 0;
        while (lead < d && !c[lead]) ++lead;
        if (c[lead] != 1) continue;  // one per scalar line
        FpMat F(homs[0].p(), homs[0].rows(), homs[0].cols());
        for (size_t j = 0; j < d; ++j)
            if (c[j]) F.addInPlace(homs[j], c[j]);
        out.push_back(std::move(F));
    }
    return out;
}

}  // namespace

QuasiSimple quasi_simple(BlockContext& ctx, const Weight& lam, const std::vector<Weight>& lamRScan,
                         uint64_t seed) {
    const auto& rd = *ctx.L->rd;
    const uint16_t p = ctx.L->p;
    QuasiSimple out;
    out.lam = lam;
    out.lamR = lam;

    int orbLam = rd.levi_dot_orbit_size(lam, p);
    int orbLamR = orbLam;
    if (!rd.is_p_regular(lam, p)) {
        // locate lam_r: the weight whose Verma has socle L(lam)
        std::vector<Weight> cands = lamRScan;
        if (cands.empty()) {
            // default window: W-orbit translated by p times a positive root
            for (size_t e = 0; e < rd.w.size(); ++e)
                for (int r = -1; r <= 1; ++r)
                    for (int g = 0; g < rd.nPos(); ++g) {
                        Weight c = rd.dot(static_cast<int>(e), lam);
                        c = wadd(c, wscale(r * p, rd.pos[g].w));
                        cands.push_back(c);
                    }
        }
        Weight lamCanon = rd.canonical_linkage_rep(lam, p);
        std::set<Weight> seen;
        for (auto& mu : cands) {
            Weight cm = rd.canonical_linkage_rep(mu, p);
            if (seen.count(cm)) continue;
            seen.insert(cm);
            auto z = baby_verma(ctx.L, ctx.chi, mu);
            auto c = chop(z, seed);
            std::vector<const GradedModule*> lib;
            for (auto& f : c.factors) lib.push_back(&f.module);
            auto socM = submodule(z, socle_subspace(z, lib));
            auto socC = chop(socM, seed + 3);
            if (socC.factors.size() == 1 && socC.factors[0].mult == 1 &&
                socC.factors[0].id.rep == lamCanon)
                out.lamRCandidates.push_back(mu);
        }
        if (out.lamRCandidates.empty())
            throw Error("quasi_simple: no lambda_r candidate found in the scan window");
        std::sort(out.lamRCandidates.begin(), out.lamRCandidates.end());
        out.lamR = out.lamRCandidates.front();
        orbLamR = rd.levi_dot_orbit_size(out.lamR, p);
    }
    out.multiplicity = std::min(orbLam, orbLamR);

    GradedModule A, B;
    DegreeClass sliceCls{};
    if (orbLam <= orbLamR) {
        Weight lamTw = rd.lambda_twist(lam, rd.idWIhat, p);
        A = standard_module(ctx, lam);
        B = costandard_module(ctx, lamTw);
        sliceCls = rd.degree_class(lam);
    } else {
        Weight lamRTw = rd.lambda_twist(out.lamR, rd.idWIhat, p);
        A = costandard_module(ctx, lamRTw);
        B = standard_module(ctx, out.lamR);
        sliceCls = rd.degree_class(lamRTw);
    }
    auto homs = hom_space(A, B, true, zero_shift(A), seed);
    if (homs.empty()) throw Error("quasi_simple: no canonical homomorphism");
    std::vector<Subspace> images;
    for (auto& F : homCombos(homs, p)) {
        if (!sliceInvertible(A, B, F, sliceCls)) continue;
        Subspace img = image_of(F);
        bool known = false;
        for (auto& s : images)
            if (s == img) known = true;
        if (!known) images.push_back(std::move(img));
    }
    if (images.empty()) throw Error("quasi_simple: no map restricts invertibly to the slice");
    GradedModule Lq = submodule(B, images[0]);
    Lq.prov = {"quasi", lam, -1, ""};
    // hom-image independence: all admissible images are isomorphic
    for (size_t i = 1; i < images.size() && i < 3; ++i) {
        auto other = submodule(B, images[i]);
        if (!iso_test(Lq, other).iso)
            throw Error("ambiguous-image: admissible canonical maps give non-isomorphic images");
    }
    // postconditions: composition multiset, simple head and socle, tau-self-duality
    auto c = chop(Lq, seed + 5);
    Weight lamCanon = rd.canonical_linkage_rep(lam, p);
    if (c.factors.size() != 1 || c.factors[0].id.rep != lamCanon ||
        c.factors[0].mult != static_cast<uint32_t>(out.multiplicity))
        throw Error("quasi_simple: composition factors are not m copies of L(lam)");
    std::vector<const GradedModule*> lib{&c.factors[0].module};
    auto head = quotient(Lq, radical_subspace(Lq, lib));
    auto socM = submodule(Lq, socle_subspace(Lq, lib));
    if (identify_simple(head).rep != lamCanon || identify_simple(socM).rep != lamCanon)
        throw Error("quasi_simple: head or socle is not L(lam)");
    if (head.dim != c.factors[0].module.dim || socM.dim != head.dim)
        throw Error("quasi_simple: head or socle is not simple");
    if (!iso_test(tau_dual(Lq), Lq).iso) throw Error("quasi_simple: not tau-self-dual");
    out.module = std::move(Lq);
    return out;
}

std::vector<std::pair<Weight, GradedModule>> restrict_to_levi_blocks(const GradedModule& m) {
    const LieAlgebra& g = *m.L;
    const uint16_t p = m.p();
    if (g.rd->levi.size() > 1)
        throw Error("restrict_to_levi_blocks: implemented for |I| <= 1");
    std::vector<int> sub = g.subalgebra(Subalg::levi_gI);

    // group coordinates by degree class
    std::map<std::vector<int32_t>, std::vector<uint32_t>> slices;
    for (uint32_t i = 0; i < m.dim; ++i) slices[m.deg[i].rep].push_back(i);

    std::vector<std::pair<Weight, GradedModule>> out;
    for (auto& [cls, coords] : slices) {
        // Fitting decomposition inside the slice: coordinates split by the
        // central torus character, then by generalized Casimir eigenspace
        std::map<std::vector<uint16_t>, std::vector<uint32_t>> torusParts;
        if (g.rd->levi.empty()) {
            for (uint32_t c : coords) torusParts[m.wt[c]].push_back(c);
        } else {
            int li = g.rd->levi[0];
            for (uint32_t c : coords) {
                // central character: weight modulo the beta-coroot direction
                std::vector<uint16_t> key = m.wt[c];
                // project out the beta component: subtract t*beta until the
                // li-pairing is zero is not canonical mod p; instead store the
                // invariant <wt, z> for an integer z with <beta, z> = 0
                key.clear();
                for (int k = 0; k < g.rd->rank; ++k) {
                    if (k == li) continue;
                    // pairing with alpha_k^vee of wt - (wt_li / 2)*beta is not
                    // integral; use 2*wt_k*<beta,beta_li>-free combination:
                    int64_t v = 2 * int64_t(m.wt[c][k]) -
                                int64_t(m.wt[c][li]) * g.rd->cartan[k][li];
                    key.push_back(fp_norm(p, v));
                }
                torusParts[key].push_back(c);
            }
        }
        for (auto& [tkey, tcoords] : torusParts) {
            std::vector<uint32_t> part = tcoords;
            auto makeBlock = [&](const std::vector<FpVec>& vecs) {
                GradedModule slice;
                slice.L = m.L;
                slice.chi = m.chi;
                slice.dim = m.dim;
                slice.acting = sub;
                for (int b : sub) {
                    const FpSparse* a = m.actionOf(b);
                    if (!a) throw Error("restrict_to_levi_blocks: missing g_I action");
                    slice.act.push_back(*a);
                }
                slice.deg = m.deg;
                slice.wt = m.wt;
                slice.prov = {"restriction", {}, -1, m.prov.str()};
                auto blockM = submodule(slice, Subspace::fromVectors(p, m.dim, vecs));
                auto cres = chop(blockM, 99);
                Weight rep = m.L->rd->canonical_mod_p_rep(cres.factors[0].id.rep, p);
                for (auto& f : cres.factors)
                    if (m.L->rd->canonical_mod_p_rep(f.id.rep, p) != rep)
                        throw Error("restrict_to_levi_blocks: block is not linkage-pure");
                out.emplace_back(rep, std::move(blockM));
            };
            if (g.rd->levi.empty()) {
                std::vector<FpVec> vecs;
                for (uint32_t c : part) {
                    FpVec v(m.dim, 0);
                    v[c] = 1;
                    vecs.push_back(v);
                }
                makeBlock(vecs);
                continue;
            }
            // e, f of the Levi root preserve the (class, central character)
            // part, so the Casimir can be restricted before Fitting
            int li = g.rd->levi[0];
            int rpos = g.rd->simpleRootPos(li);
            const FpSparse* ae = m.actionOf(g.eIdx(rpos));
            const FpSparse* af = m.actionOf(g.fIdx(rpos));
            uint32_t d = static_cast<uint32_t>(part.size());
            std::vector<uint32_t> pos(m.dim, UINT32_MAX);
            for (uint32_t i2 = 0; i2 < d; ++i2) pos[part[i2]] = i2;
            auto restrictTo = [&](const FpSparse* a) {
                FpMat out2(p, d, d);
                for (uint32_t j2 = 0; j2 < d; ++j2) {
                    FpVec e(m.dim, 0);
                    e[part[j2]] = 1;
                    FpVec img = a->apply(e);
                    for (uint32_t c2 = 0; c2 < m.dim; ++c2)
                        if (img[c2]) {
                            if (pos[c2] == UINT32_MAX)
                                throw Error("restrict_to_levi_blocks: part not e/f-stable");
                            out2.set(pos[c2], j2, img[c2]);
                        }
                }
                return out2;
            };
            FpMat E = restrictTo(ae), F = restrictTo(af);
            FpMat cas = E.mul(F);
            cas.addInPlace(F.mul(E));
            uint16_t inv2 = fp_inv(p, 2);
            for (uint32_t i2 = 0; i2 < d; ++i2) {
                uint16_t hv = m.wt[part[i2]][li];
                cas.set(i2, i2, fp_add(p, cas.get(i2, i2), fp_mul(p, fp_mul(p, hv, hv), inv2)));
            }
            uint32_t covered = 0;
            for (uint16_t s = 0; s < p && covered < d; ++s) {
                FpMat shifted = cas;
                for (uint32_t i2 = 0; i2 < d; ++i2)
                    shifted.set(i2, i2, fp_sub(p, shifted.get(i2, i2), s));
                FpMat pw = FpMat::identity(p, d);
                for (uint32_t t = 0; t < d; ++t) pw = pw.mul(shifted);
                FpMat ns = pw.nullspaceRows();
                if (ns.rows() == 0) continue;
                covered += ns.rows();
                std::vector<FpVec> vecs;
                for (uint32_t r2 = 0; r2 < ns.rows(); ++r2) {
                    FpVec v(m.dim, 0);
                    for (uint32_t j2 = 0; j2 < d; ++j2)
                        if (ns.get(r2, j2)) v[part[j2]] = ns.get(r2, j2);
                    vecs.push_back(v);
                }
                makeBlock(vecs);
            }
            if (covered != d)
                throw Error("restrict_to_levi_blocks: Casimir Fitting did not fill the part");
        }
    }
    // conservation
    uint32_t total = 0;
    for (auto& [rep, blk] : out) total += blk.dim;
    if (total != m.dim) throw Error("restrict_to_levi_blocks: parts do not fill the module");
    return out;
}

namespace {

bool peel(BlockContext& ctx, const GradedModule& m,
          std::vector<std::pair<Weight, uint32_t>> remaining,
          std::map<Weight, QuasiSimple>& quasiCache, std::vector<Weight>& order, uint64_t seed) {
    if (m.dim == 0) {
        for (auto& [w, k] : remaining)
            if (k) return false;
        return true;
    }
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (!remaining[i].second) continue;
        const Weight& lam = remaining[i].first;
        auto& q = quasiCache.at(lam);
        auto homs = hom_space(q.module, m, true, zero_shift(q.module), seed);
        for (auto& F : homCombos(homs, m.p())) {
            if (F.rank() != q.module.dim) continue;  // need an embedding
            auto sub = image_of(F);
            GradedModule m2;
            try {
                m2 = quotient(m, sub);
            } catch (const Error&) {
                continue;
            }
            auto rem2 = remaining;
            --rem2[i].second;
            if (peel(ctx, m2, rem2, quasiCache, order, seed)) {
                order.push_back(lam);
                return true;
            }
        }
    }
    return false;
}

}  // namespace

LFiltration l_filtration_verify(BlockContext& ctx, const GradedModule& m,
                                const std::vector<std::pair<Weight, uint32_t>>& expected,
                                uint64_t seed) {
    LFiltration out;
    uint32_t expDim = 0;
    std::map<Weight, QuasiSimple> cache;
    for (auto& [lam, mult] : expected) {
        if (!cache.count(lam)) cache.emplace(lam, quasi_simple(ctx, lam, {}, seed));
        expDim += mult * cache.at(lam).module.dim;
    }
    if (expDim != m.dim) {
        out.note = "expected multiset dimension mismatch";
        return out;
    }
    std::vector<Weight> order;
    if (peel(ctx, m, expected, cache, order, seed)) {
        out.ok = true;
        std::reverse(order.begin(), order.end());  // unwinding pushes top first
        out.bottomToTop = order;
    } else {
        out.note = "no quasi-socle peeling order realizes the multiset";
    }
    return out;
}

}  // namespace llwy
