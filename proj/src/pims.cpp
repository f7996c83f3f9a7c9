#include "llwy/pims.hpp"

#include <algorithm>
#include <set>

namespace llwy {

namespace {

uint64_t monoRank(const std::vector<uint8_t>& exps, uint16_t p) {
    uint64_t r = 0;
    for (size_t i = exps.size(); i > 0; --i) r = r * p + exps[i - 1];
    return r;
}

}  // namespace

FpVec MatAlgebra::mul(const FpVec& a, const FpVec& b) const {
    const uint16_t p = L->p;
    FpVec out(dim, 0);
    std::vector<uint8_t> exps(sub.size());
    for (uint32_t m = 0; m < dim; ++m) {
        if (!a[m]) continue;
        // decode the monomial and apply its letters right-to-left
        uint64_t r = m;
        for (size_t i = 0; i < sub.size(); ++i) {
            exps[i] = static_cast<uint8_t>(r % p);
            r /= p;
        }
        FpVec v = b;
        for (size_t i = sub.size(); i > 0; --i)
            for (int t = 0; t < exps[i - 1]; ++t) v = leftMul[i - 1].apply(v);
        fpv_axpy(p, out, v, a[m]);
    }
    return out;
}

std::vector<const FpSparse*> MatAlgebra::genPtrs() const {
    std::vector<const FpSparse*> ps;
    for (auto& a : leftMul) ps.push_back(&a);
    return ps;
}

MatAlgebra regular_algebra(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                           const std::vector<int>& sub, uint32_t dimBudget) {
    MatAlgebra A;
    A.L = L;
    A.chi = chi;
    A.sub = sub;
    const uint16_t p = L->p;
    uint64_t d = 1;
    for (size_t i = 0; i < sub.size(); ++i) {
        d *= p;
        if (d > dimBudget) throw Error("budget-exceeded: regular module of dimension p^" +
                                       std::to_string(sub.size()));
    }
    A.dim = static_cast<uint32_t>(d);
    A.one.assign(A.dim, 0);
    A.one[0] = 1;

    Pbw pbw(L, chi);
    PbwOrder ord = PbwOrder::identity(L->n);
    // letters must appear in global order inside sub
    for (size_t i = 0; i + 1 < sub.size(); ++i)
        if (sub[i] >= sub[i + 1]) throw Error("regular_algebra: letters out of order");

    for (size_t li = 0; li < sub.size(); ++li) {
        FpSparse M(p, A.dim, A.dim);
        std::vector<uint8_t> exps(sub.size(), 0);
        for (uint32_t cm = 0;; ++cm) {
            std::vector<uint8_t> word;
            word.push_back(static_cast<uint8_t>(sub[li]));
            for (size_t i = 0; i < sub.size(); ++i)
                for (int t = 0; t < exps[i]; ++t) word.push_back(static_cast<uint8_t>(sub[i]));
            std::map<std::vector<uint8_t>, uint16_t> acc;
            pbw.straightenWord(1, std::move(word), ord, acc);
            for (auto& [w, c] : acc) {
                std::vector<uint8_t> e2(sub.size(), 0);
                for (uint8_t letter : w) {
                    auto it = std::find(sub.begin(), sub.end(), int(letter));
                    if (it == sub.end()) throw Error("regular_algebra: letter escaped the subalgebra");
                    ++e2[std::distance(sub.begin(), it)];
                }
                M.add(static_cast<uint32_t>(monoRank(e2, p)), cm, c);
            }
            size_t i = 0;
            while (i < sub.size() && ++exps[i] == p) exps[i++] = 0;
            if (i == sub.size()) break;
        }
        A.leftMul.push_back(std::move(M));
    }
    return A;
}

std::vector<GradedModule> levi_simples(std::shared_ptr<const LieAlgebra> L, const PChar& chi) {
    const uint16_t p = L->p;
    const int rank = L->rd->rank;
    std::set<Weight> reps;
    std::vector<int> exps(rank, 0);
    while (true) {
        Weight lam(exps.begin(), exps.end());
        reps.insert(L->rd->canonical_mod_p_rep(lam, p));
        int i = 0;
        while (i < rank && ++exps[i] == p) exps[i++] = 0;
        if (i == rank) break;
    }
    std::vector<GradedModule> out;
    for (auto& lam : reps) out.push_back(levi_baby_verma(L, chi, lam));
    return out;
}

namespace {

// the map A -> (+) End(S_i), columns indexed by PBW monomials
FpMat annihilatorSystem(const MatAlgebra& A, const std::vector<const GradedModule*>& simples) {
    const uint16_t p = A.L->p;
    uint32_t rows = 0;
    for (auto* s : simples) rows += s->dim * s->dim;
    FpMat phi(p, rows, A.dim);
    // rho(m) incrementally: strip the first letter
    for (size_t si = 0; si < simples.size(); ++si) {
        const GradedModule& S = *simples[si];
        uint32_t off = 0;
        for (size_t t = 0; t < si; ++t) off += simples[t]->dim * simples[t]->dim;
        std::vector<FpMat> rho(A.dim, FpMat());
        rho[0] = FpMat::identity(p, S.dim);
        std::vector<const FpSparse*> acts;
        for (int b : A.sub) {
            const FpSparse* a = S.actionOf(b);
            if (!a) throw Error("annihilatorSystem: simple lacks an action letter");
            acts.push_back(a);
        }
        for (uint32_t m = 1; m < A.dim; ++m) {
            // first letter = lowest index with nonzero exponent
            uint64_t r = m;
            size_t first = 0;
            uint64_t sub = 0;
            uint64_t pw = 1;
            for (size_t i = 0; i < A.sub.size(); ++i) {
                uint16_t e = static_cast<uint16_t>(r % p);
                r /= p;
                if (e) { first = i; sub = m - pw; break; }
                pw *= p;
            }
            rho[m] = acts[first]->mulDense(rho[sub]);
            for (uint32_t i2 = 0; i2 < S.dim; ++i2)
                for (uint32_t j2 = 0; j2 < S.dim; ++j2) {
                    uint16_t v = rho[m].get(i2, j2);
                    if (v) phi.set(off + i2 * S.dim + j2, m, v);
                }
        }
        for (uint32_t i2 = 0; i2 < S.dim; ++i2) phi.set(off + i2 * S.dim + i2, 0, 1);
    }
    return phi;
}

}  // namespace

Subspace jacobson_radical(const MatAlgebra& A, const std::vector<const GradedModule*>& simples) {
    FpMat phi = annihilatorSystem(A, simples);
    Subspace rad = Subspace::fromMatRows(phi.nullspaceRows());
    uint32_t ssdim = 0;
    for (auto* s : simples) ssdim += s->dim * s->dim;
    if (rad.dim() + ssdim != A.dim)
        throw Error("jacobson_radical: dimension violates the Wedderburn count (simples list "
                    "incomplete or not split)");
    return rad;
}

FpVec lift_idempotent(const MatAlgebra& A, const FpVec& e0, int iterCap) {
    const uint16_t p = A.L->p;
    FpVec e = e0;
    for (int it = 0; it < iterCap; ++it) {
        FpVec e2 = A.mul(e, e);
        if (e2 == e) return e;
        if (p == 3) {
            // 3e^2 - 2e^3 degenerates mod 3; e -> e^p converges instead
            // (F_p[e] is finite commutative, so Frobenius kills the radical part)
            e = A.mul(e2, e);
            continue;
        }
        FpVec e3 = A.mul(e2, e);
        FpVec nxt(A.dim, 0);
        fpv_axpy(p, nxt, e2, 3 % p);
        fpv_axpy(p, nxt, e3, fp_norm(p, -2));
        e = nxt;
    }
    throw Error("lift_idempotent: no convergence (radical not nilpotent?)");
}

GradedModule pim(const MatAlgebra& A, const GradedModule& S,
                 const std::vector<const GradedModule*>& simples, uint64_t seed) {
    (void)seed;
    const uint16_t p = A.L->p;
    // Wedderburn projection: find a with rho_S(a) = E_00 and rho_{S'}(a) = 0
    FpMat phi = annihilatorSystem(A, simples);
    FpVec rhs(phi.rows(), 0);
    uint32_t off = 0;
    bool found = false;
    for (auto* t : simples) {
        if (t == &S || (t->dim == S.dim && iso_test(*t, S).iso)) {
            rhs[off + 0 * t->dim + 0] = 1;
            found = true;
            break;
        }
        off += t->dim * t->dim;
    }
    if (!found) throw Error("pim: target simple not in the supplied list");
    auto e0 = phi.solve(rhs);
    if (!e0) throw Error("pim: Wedderburn projection not surjective (split field violated?)");
    FpVec e = lift_idempotent(A, *e0);
    // left ideal A e
    auto sp = spin(p, A.dim, {e}, A.genPtrs(), false);
    auto acts = restricted_action(A.genPtrs(), sp.space);
    // labels: one degree class (that of S), h-eigenbasis rebuilt
    FpVec gen = sp.space.coordsOf(e);
    GradedModule q = rebase_weight_diagonal(A.L, A.chi, A.sub, std::move(acts), S.deg[0], gen,
                                            {"pim", S.prov.lam, -1, ""});
    // projective cover checks: simple head isomorphic to S
    auto homs = hom_space(q, S);
    if (homs.size() != 1) throw Error("pim: head multiplicity is not one");
    return q;
}

GradedModule projective_from_torus(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                                   const Weight& lam, uint32_t dimBudget) {
    // coset letters: all f's then all e's; inner: k_lambda over h
    uint64_t d = 1;
    for (int i = 0; i < 2 * L->m; ++i) {
        d *= L->p;
        if (d > dimBudget) throw Error("budget-exceeded: torus-induced projective too large");
    }
    std::vector<int> coset;
    for (int r = 0; r < L->m; ++r) coset.push_back(L->fIdx(r));
    for (int r = 0; r < L->m; ++r) coset.push_back(L->eIdx(r));
    std::vector<int> torus;
    for (int i = 0; i < L->rd->rank; ++i) torus.push_back(L->hIdx(i));
    auto line = character_line(L, chi, torus, lam);
    std::vector<int> full(L->n);
    for (int i = 0; i < L->n; ++i) full[i] = i;
    return induce(L, chi, full, coset, line, {"torusproj", lam, -1, ""});
}

}  // namespace llwy
