#include "llwy/module.hpp"

#include <algorithm>
#include <map>

namespace llwy {

std::string Provenance::str() const {
    std::string s = kind;
    if (!lam.empty()) {
        s += "(";
        for (size_t i = 0; i < lam.size(); ++i) s += (i ? "," : "") + std::to_string(lam[i]);
        s += ")";
    }
    if (weyl >= 0) s += "@w" + std::to_string(weyl);
    if (!note.empty()) s += "[" + note + "]";
    return s;
}

const FpSparse* GradedModule::actionOf(int basisIdx) const {
    for (size_t i = 0; i < acting.size(); ++i)
        if (acting[i] == basisIdx) return &act[i];
    return nullptr;
}

FpVec GradedModule::applyBasis(int basisIdx, const FpVec& v) const {
    const FpSparse* a = actionOf(basisIdx);
    if (!a) return FpVec(dim, 0);
    return a->apply(v);
}

std::vector<const FpSparse*> GradedModule::actPtrs() const {
    std::vector<const FpSparse*> ps;
    for (auto& a : act) ps.push_back(&a);
    return ps;
}

void GradedModule::validate() const {
    const uint16_t pp = p();
    const LieAlgebra& g = *L;
    // h-diagonality and label consistency of the h-action
    for (int i = 0; i < g.rd->rank; ++i) {
        const FpSparse* ah = actionOf(g.hIdx(i));
        if (!ah) continue;
        for (uint32_t r = 0; r < dim; ++r)
            for (auto& [c, v] : ah->rowEntries(r)) {
                if (c != r) throw Error("module invariant: h-action not diagonal");
                if (v != wt[r][i]) throw Error("module invariant: h-eigenvalue label mismatch");
            }
        // zero diagonal entries must match zero labels
        for (uint32_t r = 0; r < dim; ++r) {
            uint16_t got = 0;
            for (auto& [c, v] : ah->rowEntries(r))
                if (c == r) got = v;
            if (got != wt[r][i]) throw Error("module invariant: h-eigenvalue label mismatch");
        }
    }
    // degree/weight shifts of the root-vector actions
    for (size_t ai = 0; ai < acting.size(); ++ai) {
        int b = acting[ai];
        if (g.isH(b)) continue;
        DegreeClass shift = g.classShift(b);
        auto wshift = g.weightShiftModP(b);
        for (uint32_t r = 0; r < dim; ++r)
            for (auto& [c, v] : act[ai].rowEntries(r)) {
                (void)v;
                if (g.rd->class_add(deg[c], shift) != deg[r])
                    throw Error("module invariant: degree shift violated by " + prov.str());
                for (int k = 0; k < g.rd->rank; ++k)
                    if (fp_add(pp, wt[c][k], wshift[k]) != wt[r][k])
                        throw Error("module invariant: weight shift violated");
            }
    }
    // bracket identity on the acting set
    for (size_t ai = 0; ai < acting.size(); ++ai)
        for (size_t bi = 0; bi < acting.size(); ++bi) {
            int a = acting[ai], b = acting[bi];
            if (a >= b) continue;
            FpSparse lhs = act[ai].mulSparse(act[bi]);
            lhs.addInPlace(act[bi].mulSparse(act[ai]), fp_neg(pp, 1));
            FpSparse rhs(pp, dim, dim);
            for (auto& [k, v] : g.brk[a][b]) {
                const FpSparse* ak = actionOf(k);
                if (!ak) {
                    if (v) throw Error("module invariant: bracket leaves the acting set");
                    continue;
                }
                rhs.addInPlace(*ak, v);
            }
            if (!(lhs == rhs)) throw Error("module invariant: bracket identity failed for " + prov.str());
        }
    // p-power identity rho(x)^p = rho(x^[p]) + chi(x)^p id
    for (size_t ai = 0; ai < acting.size(); ++ai) {
        int b = acting[ai];
        FpSparse pw = act[ai];
        for (int k = 1; k < pp; ++k) pw = pw.mulSparse(act[ai]);
        FpSparse expect(pp, dim, dim);
        if (g.pPowerIsSelf(b)) expect.addInPlace(act[ai]);
        uint16_t scal = g.isF(b) ? chi.onF(g.rootOf(b)) : 0;
        if (scal)
            for (uint32_t r = 0; r < dim; ++r) expect.add(r, r, scal);
        if (!(pw == expect)) throw Error("module invariant: p-power identity failed for " + prov.str());
    }
}

void GradedModule::ensureGenerators() {
    if (!gens.empty()) return;
    std::vector<const FpSparse*> ps = actPtrs();
    Ech ech(p(), dim, false);
    std::vector<FpVec> seeds;
    for (uint32_t i = 0; i < dim && ech.dim() < dim; ++i) {
        FpVec e(dim, 0);
        e[i] = 1;
        if (ech.contains(e)) continue;
        auto out = spin(p(), dim, {e}, ps, false);
        bool grew = false;
        for (uint32_t r = 0; r < out.space.dim(); ++r)
            if (ech.insert(out.space.basis.row(r))) grew = true;
        if (grew) seeds.push_back(e);
    }
    // drop redundant seeds greedily (later seeds often absorb earlier ones)
    for (size_t i = 0; i + 1 <= seeds.size() && seeds.size() > 1;) {
        std::vector<FpVec> rest;
        for (size_t j = 0; j < seeds.size(); ++j)
            if (j != i) rest.push_back(seeds[j]);
        auto out = spin(p(), dim, rest, ps, false);
        if (out.space.dim() == dim)
            seeds = rest;
        else
            ++i;
    }
    gens = seeds;
}

GradedModule character_line(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                            const std::vector<int>& acting, const Weight& lam) {
    GradedModule m;
    m.L = L;
    m.chi = chi;
    m.dim = 1;
    m.acting = acting;
    const uint16_t p = L->p;
    for (int b : acting) {
        FpSparse a(p, 1, 1);
        if (L->isH(b)) a.add(0, 0, fp_norm(p, lam[b - L->m]));
        m.act.push_back(std::move(a));
    }
    m.deg.push_back(L->rd->degree_class(lam));
    std::vector<uint16_t> w(L->rd->rank);
    for (int k = 0; k < L->rd->rank; ++k) w[k] = fp_norm(p, lam[k]);
    m.wt.push_back(w);
    m.gens.push_back(FpVec{1});
    m.prov = {"line", lam, -1, ""};
    m.validate();
    return m;
}

GradedModule induce(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                    const std::vector<int>& resultActing, const std::vector<int>& cosetAlphabet,
                    const GradedModule& inner, Provenance prov) {
    const uint16_t p = L->p;
    const int k = static_cast<int>(cosetAlphabet.size());
    const uint32_t di = inner.dim;
    uint64_t dimOut64 = di;
    for (int i = 0; i < k; ++i) dimOut64 *= p;
    if (dimOut64 > (1u << 26)) throw Error("budget-exceeded: induced dimension too large");
    const uint32_t dimOut = static_cast<uint32_t>(dimOut64);

    Pbw pbw(L, chi);
    PbwOrder ord = PbwOrder::split(L->n, cosetAlphabet);

    // enumerate coset exponent vectors in ascending mixed-radix rank
    auto rankOfExp = [&](const std::vector<uint8_t>& e) {
        uint64_t r = 0;
        for (int i = k - 1; i >= 0; --i) r = r * p + e[i];
        return r;
    };
    std::vector<std::vector<uint8_t>> expOfRank(dimOut / std::max<uint32_t>(di, 1));
    {
        std::vector<uint8_t> e(k, 0);
        for (uint64_t r = 0;; ++r) {
            expOfRank[r] = e;
            int i = 0;
            while (i < k && ++e[i] == p) e[i++] = 0;
            if (i == k) break;
            if (r + 1 >= expOfRank.size()) break;
        }
    }
    const uint64_t nCoset = expOfRank.size();

    // labels
    GradedModule out;
    out.L = L;
    out.chi = chi;
    out.dim = dimOut;
    out.acting = resultActing;
    out.prov = std::move(prov);
    out.deg.resize(dimOut);
    out.wt.resize(dimOut);
    for (uint64_t cm = 0; cm < nCoset; ++cm) {
        DegreeClass dshift = L->rd->degree_class(Weight(L->rd->rank, 0));
        std::vector<int32_t> wshift(L->rd->rank, 0);
        for (int i = 0; i < k; ++i) {
            int b = cosetAlphabet[i];
            Weight rw = L->rd->pos[L->rootOf(b)].w;
            if (L->isF(b)) rw = wscale(-1, rw);
            for (int t = 0; t < expOfRank[cm][i]; ++t) {
                dshift = L->rd->class_add(dshift, L->rd->degree_class(rw));
                for (int kk = 0; kk < L->rd->rank; ++kk) wshift[kk] += rw[kk];
            }
        }
        for (uint32_t j = 0; j < di; ++j) {
            uint32_t idx = static_cast<uint32_t>(cm * di + j);
            out.deg[idx] = L->rd->class_add(inner.deg[j], dshift);
            std::vector<uint16_t> w(L->rd->rank);
            for (int kk = 0; kk < L->rd->rank; ++kk)
                w[kk] = fp_norm(p, inner.wt[j][kk] + wshift[kk]);
            out.wt[idx] = w;
        }
    }

    // tail operators as dense matrices on the inner module
    std::vector<FpMat> tailMat(L->n);
    std::vector<bool> tailZero(L->n, false);
    for (int b = 0; b < L->n; ++b) {
        if (std::find(cosetAlphabet.begin(), cosetAlphabet.end(), b) != cosetAlphabet.end()) continue;
        const FpSparse* a = inner.actionOf(b);
        if (a)
            tailMat[b] = a->toDense();
        else {
            tailMat[b] = FpMat(p, di, di);
            tailZero[b] = true;
            if (pbw.chiPowP(b) != 0)
                throw Error("induce: chi nonzero on a letter acting by zero");
        }
    }

    // assemble action matrices column by column
    for (size_t ai = 0; ai < resultActing.size(); ++ai) {
        int x = resultActing[ai];
        FpSparse A(p, dimOut, dimOut);
        std::map<std::vector<uint8_t>, std::vector<std::pair<uint64_t, FpMat>>> memo;
        for (uint64_t cm = 0; cm < nCoset; ++cm) {
            auto it = memo.find(expOfRank[cm]);
            if (it == memo.end()) {
                // straighten x * (coset monomial)
                std::vector<uint8_t> word;
                word.push_back(static_cast<uint8_t>(x));
                for (int i = 0; i < k; ++i)
                    for (int t = 0; t < expOfRank[cm][i]; ++t)
                        word.push_back(static_cast<uint8_t>(cosetAlphabet[i]));
                std::map<std::vector<uint8_t>, uint16_t> acc;
                pbw.straightenWord(1, std::move(word), ord, acc);
                std::vector<std::pair<uint64_t, FpMat>> terms;
                for (auto& [w, c] : acc) {
                    // split: leading coset letters, trailing tail letters
                    std::vector<uint8_t> ce(k, 0);
                    size_t pos = 0;
                    while (pos < w.size()) {
                        int idxInCoset = -1;
                        for (int i = 0; i < k; ++i)
                            if (cosetAlphabet[i] == w[pos]) idxInCoset = i;
                        if (idxInCoset < 0) break;
                        ++ce[idxInCoset];
                        ++pos;
                    }
                    FpMat op = FpMat::identity(p, di);
                    bool dead = false;
                    for (size_t t = w.size(); t > pos; --t) {
                        int b = w[t - 1];
                        if (tailZero[b]) { dead = true; break; }
                        op = tailMat[b].mul(op);
                    }
                    if (dead) continue;
                    op = op.scaled(c);
                    if (op.isZero()) continue;
                    uint64_t r = rankOfExp(ce);
                    bool merged = false;
                    for (auto& [er, em] : terms)
                        if (er == r) { em.addInPlace(op); merged = true; break; }
                    if (!merged) terms.emplace_back(r, std::move(op));
                }
                it = memo.emplace(expOfRank[cm], std::move(terms)).first;
            }
            for (auto& [r, op] : it->second)
                for (uint32_t i2 = 0; i2 < di; ++i2)
                    for (uint32_t j2 = 0; j2 < di; ++j2) {
                        uint16_t v = op.get(i2, j2);
                        if (v) A.add(static_cast<uint32_t>(r * di + i2),
                                     static_cast<uint32_t>(cm * di + j2), v);
                    }
        }
        out.act.push_back(std::move(A));
    }
    // generators: 1 (x) inner generators
    for (auto& g : inner.gens) {
        FpVec v(dimOut, 0);
        for (uint32_t j = 0; j < di; ++j) v[j] = g[j];
        out.gens.push_back(std::move(v));
    }
    out.validate();
    return out;
}

namespace {
std::vector<int> fullActing(const LieAlgebra& L) {
    std::vector<int> a(L.n);
    for (int i = 0; i < L.n; ++i) a[i] = i;
    return a;
}
}  // namespace

GradedModule baby_verma(std::shared_ptr<const LieAlgebra> L, const PChar& chi, const Weight& lam) {
    std::vector<int> coset;
    for (int r = 0; r < L->m; ++r) coset.push_back(L->fIdx(r));
    auto line = character_line(L, chi, L->subalgebra(Subalg::borel_plus), lam);
    return induce(L, chi, fullActing(*L), coset, line, {"verma", lam, -1, ""});
}

GradedModule twisted_baby_verma(std::shared_ptr<const LieAlgebra> L, const PChar& chi, int weylIdx,
                                const Weight& lam) {
    if (weylIdx == L->rd->idE) {
        auto m = baby_verma(L, chi, lam);
        m.prov = {"tverma", lam, weylIdx, ""};
        return m;
    }
    std::vector<int> borel = L->twistedBorel(weylIdx);
    std::vector<int> coset;
    for (int r = 0; r < L->m; ++r) {
        Weight im = wscale(-1, L->rd->act(weylIdx, L->rd->pos[r].w));
        int pi = L->rd->rootIndex(im);
        coset.push_back(pi >= 0 ? L->eIdx(pi) : L->fIdx(L->rd->rootIndex(wscale(-1, im))));
    }
    auto line = character_line(L, chi, borel, lam);
    return induce(L, chi, fullActing(*L), coset, line, {"tverma", lam, weylIdx, ""});
}

GradedModule levi_baby_verma(std::shared_ptr<const LieAlgebra> L, const PChar& chi, const Weight& lam) {
    std::vector<int> coset;
    for (int r = 0; r < L->m; ++r)
        if (L->rd->inLevi(r)) coset.push_back(L->fIdx(r));
    // inner: k_lam over h + n_I^+ (plus the zero-acting u-parts never referenced)
    std::vector<int> sub;
    for (int i = 0; i < L->rd->rank; ++i) sub.push_back(L->hIdx(i));
    for (int r = 0; r < L->m; ++r)
        if (L->rd->inLevi(r)) sub.push_back(L->eIdx(r));
    auto line = character_line(L, chi, sub, lam);
    return induce(L, chi, L->subalgebra(Subalg::levi_gI), coset, line, {"leviverma", lam, -1, ""});
}

GradedModule parabolic_induce(std::shared_ptr<const LieAlgebra> L, const PChar& chi, bool primeSide,
                              const GradedModule& inner) {
    // inner must be a g_I-module with trivial u-action
    for (int r = 0; r < L->m; ++r) {
        if (L->rd->inLevi(r)) continue;
        const FpSparse* au = inner.actionOf(primeSide ? L->fIdx(r) : L->eIdx(r));
        if (au && !au->isZero())
            throw Error("inner-not-parabolic: nontrivial nilradical action on the inner module");
    }
    std::vector<int> coset;
    for (int r = 0; r < L->m; ++r)
        if (!L->rd->inLevi(r)) coset.push_back(primeSide ? L->eIdx(r) : L->fIdx(r));
    return induce(L, chi, fullActing(*L), coset, inner,
                  {primeSide ? "costd" : "std", inner.prov.lam, -1, inner.prov.kind});
}

GradedModule tau_dual(const GradedModule& m) {
    const LieAlgebra& g = *m.L;
    const uint16_t p = m.p();
    GradedModule out;
    out.L = m.L;
    out.chi = m.chi;
    out.dim = m.dim;
    out.acting = m.acting;
    out.prov = {"tdual", m.prov.lam, -1, m.prov.str()};
    for (size_t ai = 0; ai < m.acting.size(); ++ai) {
        int b = m.acting[ai];
        FpVec pre(g.n, 0);
        pre[b] = 1;
        FpVec c = g.applyTau(pre, /*inverse=*/true);
        FpSparse a(p, m.dim, m.dim);
        for (int t = 0; t < g.n; ++t) {
            if (!c[t]) continue;
            const FpSparse* at = m.actionOf(t);
            if (!at) throw Error("tau_dual: tau^{-1} leaves the acting set");
            a.addInPlace(at->transposed(), fp_mul(p, c[t], fp_neg(p, 1)));
        }
        out.act.push_back(std::move(a));
    }
    // labels: degree classes persist (w_I acts trivially on X(T)/ZI);
    // h-eigenvalues transform by w_I
    out.deg = m.deg;
    out.wt.resize(m.dim);
    for (uint32_t i = 0; i < m.dim; ++i) {
        Weight w(g.rd->rank);
        for (int k = 0; k < g.rd->rank; ++k) w[k] = m.wt[i][k];
        Weight im = g.rd->act(g.rd->idWI, w);
        std::vector<uint16_t> nw(g.rd->rank);
        for (int k = 0; k < g.rd->rank; ++k) nw[k] = fp_norm(p, im[k]);
        out.wt[i] = nw;
    }
    out.validate();
    return out;
}

GradedModule plain_dual(const GradedModule& m) {
    const uint16_t p = m.p();
    GradedModule out;
    out.L = m.L;
    out.chi = m.chi;
    for (auto& c : out.chi.chiF) c = fp_neg(p, c);
    out.dim = m.dim;
    out.acting = m.acting;
    out.prov = {"dual", m.prov.lam, -1, m.prov.str()};
    for (auto& a : m.act) out.act.push_back(a.transposed().scaled(fp_neg(p, 1)));
    out.deg.resize(m.dim);
    out.wt.resize(m.dim);
    for (uint32_t i = 0; i < m.dim; ++i) {
        out.deg[i] = m.L->rd->class_neg(m.deg[i]);
        std::vector<uint16_t> nw(m.L->rd->rank);
        for (int k = 0; k < m.L->rd->rank; ++k) nw[k] = fp_neg(p, m.wt[i][k]);
        out.wt[i] = nw;
    }
    out.validate();
    return out;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    GradedModule out;
    out.L = a.L;
    out.chi = a.chi;
    out.dim = a.dim + b.dim;
    out.acting = a.acting;
    out.prov = {"sum", {}, -1, a.prov.str() + "+" + b.prov.str()};
    for (size_t i = 0; i < a.acting.size(); ++i) {
        FpSparse m(a.p(), out.dim, out.dim);
        for (uint32_t r = 0; r < a.dim; ++r)
            for (auto& [c, v] : a.act[i].rowEntries(r)) m.add(r, c, v);
        const FpSparse* bb = b.actionOf(a.acting[i]);
        if (!bb) throw Error("direct_sum: acting sets differ");
        for (uint32_t r = 0; r < b.dim; ++r)
            for (auto& [c, v] : bb->rowEntries(r)) m.add(a.dim + r, a.dim + c, v);
        out.act.push_back(std::move(m));
    }
    out.deg = a.deg;
    out.deg.insert(out.deg.end(), b.deg.begin(), b.deg.end());
    out.wt = a.wt;
    out.wt.insert(out.wt.end(), b.wt.begin(), b.wt.end());
    for (auto& g : a.gens) {
        FpVec v(out.dim, 0);
        std::copy(g.begin(), g.end(), v.begin());
        out.gens.push_back(v);
    }
    for (auto& g : b.gens) {
        FpVec v(out.dim, 0);
        std::copy(g.begin(), g.end(), v.begin() + a.dim);
        out.gens.push_back(v);
    }
    return out;
}

std::vector<FpVec> block_refine(const GradedModule& m, const Subspace& s) {
    // group coordinates by (degree, weight) label
    std::map<std::pair<std::vector<int32_t>, std::vector<uint16_t>>, std::vector<uint32_t>> blocks;
    for (uint32_t i = 0; i < m.dim; ++i) blocks[{m.deg[i].rep, m.wt[i]}].push_back(i);
    Ech ech(m.p(), m.dim, false);
    std::vector<FpVec> pure;
    for (uint32_t r = 0; r < s.dim(); ++r) {
        FpVec row = s.basis.row(r);
        for (auto& [lab, coords] : blocks) {
            FpVec pr(m.dim, 0);
            bool nz = false;
            for (uint32_t c : coords)
                if (row[c]) { pr[c] = row[c]; nz = true; }
            if (nz && ech.insert(pr)) pure.push_back(pr);
        }
    }
    if (static_cast<uint32_t>(pure.size()) != s.dim())
        throw Error("block_refine: subspace is not label-homogeneous");
    return pure;
}

namespace {
struct BasisSolver {
    FpMat bmat;        // rows = chosen basis vectors
    Subspace rref;
    FpMat mix;         // mix * bmat = rref.basis
    explicit BasisSolver(uint16_t p, uint32_t ambient, const std::vector<FpVec>& rows) {
        bmat = FpMat::fromRows(p, rows, ambient);
        // RREF with transformation: eliminate [bmat | I]
        uint32_t nr = bmat.rows();
        FpMat aug(p, nr, ambient + nr);
        for (uint32_t r = 0; r < nr; ++r) {
            for (uint32_t c = 0; c < ambient; ++c) aug.set(r, c, bmat.get(r, c));
            aug.set(r, ambient + r, 1);
        }
        auto e = aug.rref();
        if (e.rank != nr) throw Error("BasisSolver: dependent basis rows");
        rref.p = p;
        rref.ambient = ambient;
        rref.basis = FpMat(p, nr, ambient);
        mix = FpMat(p, nr, nr);
        for (uint32_t r = 0; r < nr; ++r) {
            for (uint32_t c = 0; c < ambient; ++c) rref.basis.set(r, c, e.r.get(r, c));
            for (uint32_t c = 0; c < nr; ++c) mix.set(r, c, e.r.get(r, ambient + c));
            rref.pivots.push_back(e.pivots[r]);
        }
    }
    FpVec coords(const FpVec& v) const {
        FpVec overR = rref.coordsOf(v);
        return mix.applyTransposed(overR);  // coords over original rows
    }
};
}  // namespace

GradedModule submodule(const GradedModule& m, const Subspace& s, std::vector<FpVec>* rowsOut) {
    std::vector<FpVec> rows = block_refine(m, s);
    // stable order: sort by (label of block, pivot)
    std::sort(rows.begin(), rows.end(), [&](const FpVec& a, const FpVec& b) {
        uint32_t pa = 0, pb = 0;
        while (pa < a.size() && !a[pa]) ++pa;
        while (pb < b.size() && !b[pb]) ++pb;
        return pa < pb;
    });
    BasisSolver bs(m.p(), m.dim, rows);
    GradedModule out;
    out.L = m.L;
    out.chi = m.chi;
    out.dim = static_cast<uint32_t>(rows.size());
    out.acting = m.acting;
    out.prov = {"submodule", {}, -1, m.prov.str()};
    for (size_t ai = 0; ai < m.acting.size(); ++ai) {
        FpSparse a(m.p(), out.dim, out.dim);
        for (uint32_t j = 0; j < out.dim; ++j) {
            FpVec img = m.act[ai].apply(rows[j]);
            if (fpv_is_zero(img)) continue;
            FpVec c;
            try {
                c = bs.coords(img);
            } catch (const Error&) {
                throw Error("submodule: not-invariant under the module action");
            }
            for (uint32_t i2 = 0; i2 < out.dim; ++i2)
                if (c[i2]) a.add(i2, j, c[i2]);
        }
        out.act.push_back(std::move(a));
    }
    for (uint32_t j = 0; j < out.dim; ++j) {
        uint32_t lead = 0;
        while (lead < m.dim && !rows[j][lead]) ++lead;
        out.deg.push_back(m.deg[lead]);
        out.wt.push_back(m.wt[lead]);
    }
    if (rowsOut) *rowsOut = rows;
    out.validate();
    return out;
}

GradedModule quotient(const GradedModule& m, const Subspace& s, std::vector<uint32_t>* keptOut) {
    auto qa = quotient_action(m.actPtrs(), s);
    GradedModule out;
    out.L = m.L;
    out.chi = m.chi;
    out.dim = static_cast<uint32_t>(qa.keptCoords.size());
    out.acting = m.acting;
    out.act = std::move(qa.act);
    out.prov = {"quotient", {}, -1, m.prov.str()};
    for (uint32_t c : qa.keptCoords) {
        out.deg.push_back(m.deg[c]);
        out.wt.push_back(m.wt[c]);
    }
    if (keptOut) *keptOut = qa.keptCoords;
    // generators: images of the parent generators (refreshed lazily if needed)
    std::vector<uint32_t> pos(m.dim, UINT32_MAX);
    for (uint32_t i = 0; i < out.dim; ++i) pos[qa.keptCoords[i]] = i;
    for (auto& g : m.gens) {
        FpVec red = s.reduce(g);
        FpVec v(out.dim, 0);
        bool nz = false;
        for (uint32_t c2 = 0; c2 < m.dim; ++c2)
            if (red[c2]) { v[pos[c2]] = red[c2]; nz = true; }
        if (nz) out.gens.push_back(v);
    }
    out.validate();
    return out;
}

GradedModule rebase_weight_diagonal(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                                    const std::vector<int>& acting, std::vector<FpSparse> rawAct,
                                    const DegreeClass& cls, const FpVec& generator, Provenance prov) {
    const uint16_t p = L->p;
    const uint32_t d = rawAct.empty() ? 0 : rawAct[0].rows();
    // split into simultaneous eigenspaces of the h-action
    std::vector<std::vector<FpVec>> blocks{{}};
    blocks[0].reserve(d);
    for (uint32_t i = 0; i < d; ++i) {
        FpVec e(d, 0);
        e[i] = 1;
        blocks[0].push_back(e);
    }
    for (int hi = 0; hi < L->rd->rank; ++hi) {
        const FpSparse* ah = nullptr;
        for (size_t ai = 0; ai < acting.size(); ++ai)
            if (acting[ai] == L->hIdx(hi)) ah = &rawAct[ai];
        if (!ah) throw Error("rebase: torus action missing");
        std::vector<std::vector<FpVec>> next;
        for (auto& blk : blocks) {
            if (blk.empty()) continue;
            BasisSolver bs(p, d, blk);
            // matrix of h on the block
            FpMat hb(p, static_cast<uint32_t>(blk.size()), static_cast<uint32_t>(blk.size()));
            for (size_t j = 0; j < blk.size(); ++j) {
                FpVec c = bs.coords(ah->apply(blk[j]));
                for (size_t i2 = 0; i2 < blk.size(); ++i2) hb.set(static_cast<uint32_t>(i2), static_cast<uint32_t>(j), c[i2]);
            }
            uint32_t found = 0;
            for (uint16_t ev = 0; ev < p && found < blk.size(); ++ev) {
                FpMat shifted = hb;
                for (uint32_t i2 = 0; i2 < shifted.rows(); ++i2)
                    shifted.set(i2, i2, fp_sub(p, shifted.get(i2, i2), ev));
                FpMat ns = shifted.nullspaceRows();
                if (ns.rows() == 0) continue;
                std::vector<FpVec> sub;
                for (uint32_t r = 0; r < ns.rows(); ++r) {
                    FpVec v(d, 0);
                    for (size_t j = 0; j < blk.size(); ++j)
                        if (ns.get(r, static_cast<uint32_t>(j)))
                            fpv_axpy(p, v, blk[j], ns.get(r, static_cast<uint32_t>(j)));
                    sub.push_back(v);
                }
                found += ns.rows();
                next.push_back(std::move(sub));
            }
            if (found != blk.size()) throw Error("rebase: torus action not semisimple");
        }
        blocks = std::move(next);
    }
    std::vector<FpVec> basis;
    for (auto& blk : blocks)
        for (auto& v : blk) basis.push_back(v);
    BasisSolver bs(p, d, basis);
    GradedModule out;
    out.L = L;
    out.chi = chi;
    out.dim = d;
    out.acting = acting;
    out.prov = std::move(prov);
    for (auto& a : rawAct) {
        FpSparse na(p, d, d);
        for (uint32_t j = 0; j < d; ++j) {
            FpVec c = bs.coords(a.apply(basis[j]));
            for (uint32_t i2 = 0; i2 < d; ++i2)
                if (c[i2]) na.add(i2, j, c[i2]);
        }
        out.act.push_back(std::move(na));
    }
    out.deg.assign(d, cls);
    out.wt.resize(d);
    for (uint32_t j = 0; j < d; ++j) {
        std::vector<uint16_t> w(L->rd->rank);
        for (int hi = 0; hi < L->rd->rank; ++hi) {
            const FpSparse* ah = out.actionOf(L->hIdx(hi));
            uint16_t ev = 0;
            for (auto& [c2, v] : ah->rowEntries(j))
                if (c2 == j) ev = v;
            w[hi] = ev;
        }
        out.wt[j] = w;
    }
    out.gens.push_back(bs.coords(generator));
    out.validate();
    return out;
}

}  // namespace llwy
