#include "llwy/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace llwy {

Weight wadd(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
Weight wsub(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
Weight wscale(int32_t c, const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

CartanType parse_cartan_type(const std::string& s) {
    if (!s.empty() && (s[0] == 'A' || s[0] == 'a')) return CartanType::A;
    if (!s.empty() && (s[0] == 'B' || s[0] == 'b')) return CartanType::B;
    throw Error("unsupported-type: cartan type '" + s + "'");
}

namespace {

std::vector<int32_t> matMul(const std::vector<int32_t>& a, const std::vector<int32_t>& b, int r) {
    std::vector<int32_t> c(r * r, 0);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            int32_t v = a[i * r + k];
            if (!v) continue;
            for (int j = 0; j < r; ++j) c[i * r + j] += v * b[k * r + j];
        }
    return c;
}

Weight matApply(const std::vector<int32_t>& m, const Weight& v) {
    int r = static_cast<int>(v.size());
    Weight out(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out[i] += m[i * r + j] * v[j];
    return out;
}

// Integer solve A x = b by fraction-free elimination; returns x iff the unique
// rational solution is integral.  A given column-major as vectors.
std::optional<std::vector<int64_t>> intSolve(std::vector<std::vector<int64_t>> cols,
                                             std::vector<int64_t> b) {
    size_t n = b.size();
    if (cols.size() != n) throw Error("intSolve: not square");
    // Gaussian elimination over rationals represented as (num, den) via long double?
    // Use exact: Bareiss on the augmented matrix, then back-substitution with
    // divisibility checks via Cramer determinants.
    auto det = [&n](std::vector<std::vector<int64_t>> m) {
        int64_t sign = 1;
        int64_t prev = 1;
        for (size_t k = 0; k + 1 < n; ++k) {
            if (m[k][k] == 0) {
                size_t sw = k + 1;
                while (sw < n && m[sw][k] == 0) ++sw;
                if (sw == n) return int64_t(0);
                std::swap(m[sw], m[k]);
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i)
                for (size_t j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    };
    std::vector<std::vector<int64_t>> A(n, std::vector<int64_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) A[i][j] = cols[j][i];
    int64_t d = det(A);
    if (d == 0) return std::nullopt;
    std::vector<int64_t> x(n);
    for (size_t j = 0; j < n; ++j) {
        auto Aj = A;
        for (size_t i = 0; i < n; ++i) Aj[i][j] = b[i];
        int64_t dj = det(Aj);
        if (dj % d != 0) return std::nullopt;
        x[j] = dj / d;
    }
    return x;
}

int64_t floorDiv(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

int RootDatum::rootIndex(const Weight& wt) const {
    for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i].w == wt) return static_cast<int>(i);
    return -1;
}

int RootDatum::simpleRootPos(int simpleIdx) const {
    for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i].height == 1 && pos[i].rc[simpleIdx] == 1) return static_cast<int>(i);
    throw Error("simpleRootPos: not found");
}

int64_t RootDatum::pairing(const Weight& lam, int posRootIdx) const {
    const auto& d = pos[posRootIdx].pairing;
    int64_t s = 0;
    for (int k = 0; k < rank; ++k) s += int64_t(d[k]) * lam[k];
    return s;
}

bool RootDatum::inLevi(int posRootIdx) const {
    const auto& rc = pos[posRootIdx].rc;
    for (int i = 0; i < rank; ++i)
        if (rc[i] != 0 && std::find(levi.begin(), levi.end(), i) == levi.end()) return false;
    return true;
}

Weight RootDatum::act(int e, const Weight& lam) const { return matApply(w[e].mat, lam); }

Weight RootDatum::dot(int e, const Weight& lam) const {
    return wsub(matApply(w[e].mat, wadd(lam, rho)), rho);
}

int RootDatum::mult(int a, int b) const {
    auto m = matMul(w[a].mat, w[b].mat, rank);
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].mat == m) return static_cast<int>(i);
    throw Error("Weyl multiplication: element not found");
}

int RootDatum::inverse(int a) const {
    for (size_t i = 0; i < w.size(); ++i)
        if (matMul(w[a].mat, w[i].mat, rank) == w[idE].mat) return static_cast<int>(i);
    throw Error("Weyl inverse: element not found");
}

Weight RootDatum::lambda_twist(const Weight& lam, int e, uint16_t p) const {
    Weight diff = wsub(rho, act(e, rho));
    return wsub(lam, wscale(int32_t(p) - 1, diff));
}

bool RootDatum::is_p_regular(const Weight& lam, uint16_t p) const {
    Weight lr = wadd(lam, rho);
    for (int i = 0; i < nPos(); ++i)
        if (pairing(lr, i) % p == 0) return false;
    return true;
}

bool RootDatum::inZI(const Weight& v) const { return inZIscaled(v, 1); }

bool RootDatum::inZIscaled(const Weight& v, int32_t scale) const {
    // v in scale*ZI: forward-substitute against the HNF rows.
    std::vector<int64_t> r(v.begin(), v.end());
    for (size_t i = 0; i < ziHnf.size(); ++i) {
        int64_t lead = ziHnf[i][ziPiv[i]];
        int64_t num = r[ziPiv[i]];
        if (num % (lead * scale) != 0) return false;
        int64_t q = num / lead;
        for (int k = 0; k < rank; ++k) r[k] -= q * ziHnf[i][k];
    }
    for (auto x : r)
        if (x) return false;
    return true;
}

int RootDatum::levi_dot_orbit_size(const Weight& lam, uint16_t p) const {
    std::set<std::vector<int32_t>> classes;
    for (int e : wLevi) {
        Weight d = wsub(dot(e, lam), lam);
        if (!inZI(d)) throw Error("levi orbit: W_I.lam - lam escaped ZI");
        // reduce d modulo p*ZI: express over HNF rows, coefficients mod p
        std::vector<int64_t> r(d.begin(), d.end());
        std::vector<int32_t> key;
        for (size_t i = 0; i < ziHnf.size(); ++i) {
            int64_t lead = ziHnf[i][ziPiv[i]];
            int64_t q = r[ziPiv[i]] / lead;
            key.push_back(static_cast<int32_t>(((q % p) + p) % p));
            for (int k = 0; k < rank; ++k) r[k] -= q * ziHnf[i][k];
        }
        classes.insert(key);
    }
    return static_cast<int>(classes.size());
}

bool RootDatum::linked(const Weight& lam, const Weight& mu, uint16_t p) const {
    for (int e : wLevi)
        if (inZIscaled(wsub(mu, dot(e, lam)), p)) return true;
    return false;
}

Weight RootDatum::canonical_linkage_rep(const Weight& lam, uint16_t p) const {
    // Lexicographically smallest element of minimal Levi-pairing norm in the
    // orbit { w.lam + p*delta : w in W_I, delta in ZI }.  The norm is coercive
    // in delta, so an expanding box search is exhaustive.
    auto norm = [&](const Weight& v) {
        Weight vr = wadd(v, rho);
        int64_t s = 0;
        for (int i : levi) s += std::llabs(pairing(vr, simpleRootPos(i)));
        return s;
    };
    if (levi.empty()) return lam;
    int nI = static_cast<int>(levi.size());
    int64_t best = INT64_MAX;
    Weight bestW;
    int B = 2;
    int64_t prevBest = INT64_MAX;
    for (int round = 0; round < 12; ++round, B += 2) {
        best = INT64_MAX;
        bestW.clear();
        std::vector<int> n(nI, -B);
        while (true) {
            Weight delta(rank, 0);
            for (int i = 0; i < nI; ++i)
                delta = wadd(delta, wscale(n[i], pos[simpleRootPos(levi[i])].w));
            for (int e : wLevi) {
                Weight cand = wadd(dot(e, lam), wscale(p, delta));
                int64_t f = norm(cand);
                if (f < best || (f == best && cand < bestW)) {
                    best = f;
                    bestW = cand;
                }
            }
            int i = 0;
            while (i < nI && ++n[i] > B) n[i++] = -B;
            if (i == nI) break;
        }
        if (best == prevBest) break;
        prevBest = best;
    }
    return bestW;
}

bool RootDatum::linked_mod_p(const Weight& lam, const Weight& mu, uint16_t p) const {
    for (int e : wLevi) {
        Weight v = dot(e, lam);
        bool ok = true;
        for (int k = 0; k < rank; ++k)
            if (fp_norm(p, v[k]) != fp_norm(p, mu[k])) ok = false;
        if (ok) return true;
    }
    return false;
}

Weight RootDatum::canonical_mod_p_rep(const Weight& lam, uint16_t p) const {
    Weight best;
    bool first = true;
    for (int e : wLevi) {
        Weight v = dot(e, lam);
        for (int k = 0; k < rank; ++k) v[k] = fp_norm(p, v[k]);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

DegreeClass RootDatum::degree_class(const Weight& lam) const {
    std::vector<int32_t> r(lam.begin(), lam.end());
    for (size_t i = 0; i < ziHnf.size(); ++i) {
        int64_t lead = ziHnf[i][ziPiv[i]];
        int64_t q = floorDiv(r[ziPiv[i]], lead);
        for (int k = 0; k < rank; ++k) r[k] -= static_cast<int32_t>(q * ziHnf[i][k]);
    }
    return DegreeClass{r};
}

DegreeClass RootDatum::class_shift_by_root(const DegreeClass& c, int posRootIdx, bool negative) const {
    Weight v = pos[posRootIdx].w;
    if (negative) v = wscale(-1, v);
    return degree_class(wadd(c.rep, v));
}

DegreeClass RootDatum::class_add(const DegreeClass& a, const DegreeClass& b) const {
    return degree_class(wadd(a.rep, b.rep));
}

DegreeClass RootDatum::class_neg(const DegreeClass& a) const {
    return degree_class(wscale(-1, a.rep));
}

Ord RootDatum::order_leq(const DegreeClass& mu, const DegreeClass& nu) const {
    // nu - mu = sum_{alpha not in I} m_alpha alpha  (mod ZI), m integral.
    Weight d = wsub(nu.rep, mu.rep);
    std::vector<std::vector<int64_t>> cols;
    std::vector<int> outside;
    for (int i = 0; i < rank; ++i)
        if (std::find(levi.begin(), levi.end(), i) == levi.end()) outside.push_back(i);
    for (int i : outside) {
        const Weight& a = pos[simpleRootPos(i)].w;
        cols.emplace_back(a.begin(), a.end());
    }
    for (int i : levi) {
        const Weight& a = pos[simpleRootPos(i)].w;
        cols.emplace_back(a.begin(), a.end());
    }
    auto x = intSolve(cols, std::vector<int64_t>(d.begin(), d.end()));
    if (!x) return Ord::incomparable;
    bool posv = false, negv = false;
    for (size_t i = 0; i < outside.size(); ++i) {
        if ((*x)[i] > 0) posv = true;
        if ((*x)[i] < 0) negv = true;
    }
    if (posv && negv) return Ord::incomparable;
    if (!posv && !negv) return Ord::eq;
    return posv ? Ord::lt : Ord::gt;  // mu < nu when nu-mu is a nonneg root combo
}

nlohmann::json RootDatum::to_json() const {
    nlohmann::json j;
    j["type"] = (type == CartanType::A ? "A" : "B") + std::to_string(rank);
    j["rank"] = rank;
    j["levi"] = levi;
    j["n_positive_roots"] = nPos();
    j["lengths"] = {{"w0", w[idW0].len}, {"wI", w[idWI].len}, {"wIhat", w[idWIhat].len}};
    std::vector<std::string> words;
    for (auto& e : w) {
        std::string s;
        for (int8_t g : e.word) s += "s" + std::to_string(int(g) + 1);
        words.push_back(s.empty() ? "e" : s);
    }
    j["elements"] = words;
    return j;
}

RootDatum build_root_datum(const std::string& type, const std::vector<int>& leviSubset) {
    if (type.size() < 2) throw Error("unsupported-type: '" + type + "'");
    int rank = std::atoi(type.c_str() + 1);
    return build_root_datum(parse_cartan_type(type), rank, leviSubset);
}

RootDatum build_root_datum(CartanType type, int rank, const std::vector<int>& leviSubset) {
    RootDatum rd;
    rd.type = type;
    rd.rank = rank;
    if (type == CartanType::A) {
        if (rank < 1 || rank > 3) throw Error("unsupported-type: A" + std::to_string(rank));
        rd.cartan.assign(rank, std::vector<int32_t>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                rd.cartan[i][j] = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    } else {
        if (rank != 2) throw Error("unsupported-type: B" + std::to_string(rank));
        // alpha_1 long, alpha_2 short
        rd.cartan = {{2, -1}, {-2, 2}};
    }
    rd.levi = leviSubset;
    std::sort(rd.levi.begin(), rd.levi.end());
    for (int i : rd.levi)
        if (i < 0 || i >= rank) throw Error("levi subset index out of range");

    rd.rho.assign(rank, 1);

    // --- root generation ---
    struct RootAcc {
        std::vector<int32_t> rc;
        Weight w;
        std::vector<int32_t> pairing;
    };
    auto wcoordsOf = [&](const std::vector<int32_t>& rc) {
        Weight wv(rank, 0);
        for (int j = 0; j < rank; ++j)
            for (int i = 0; i < rank; ++i) wv[i] += rc[j] * rd.cartan[i][j];
        return wv;
    };
    std::vector<RootAcc> all;
    std::set<std::vector<int32_t>> seen;
    for (int i = 0; i < rank; ++i) {
        RootAcc r;
        r.rc.assign(rank, 0);
        r.rc[i] = 1;
        r.w = wcoordsOf(r.rc);
        r.pairing.assign(rank, 0);
        r.pairing[i] = 1;
        all.push_back(r);
        seen.insert(r.rc);
    }
    for (size_t k = 0; k < all.size(); ++k) {
        for (int j = 0; j < rank; ++j) {
            // s_j(root): rc' = rc - <root, alpha_j^vee> e_j ; pairing row reflects too
            RootAcc cur = all[k];
            int64_t pr = 0;
            for (int t = 0; t < rank; ++t) pr += int64_t(rd.cartan[j][t]) * cur.rc[t];
            std::vector<int32_t> rc = cur.rc;
            rc[j] -= static_cast<int32_t>(pr);
            if (seen.count(rc)) continue;
            RootAcc nr;
            nr.rc = rc;
            nr.w = wcoordsOf(rc);
            // <w_k, (s_j gamma)^vee> = <s_j w_k, gamma^vee>; s_j w_k = w_k - delta_jk alpha_j
            nr.pairing = cur.pairing;
            int64_t alphaPair = 0;  // <alpha_j, gamma^vee>
            const Weight aj = wcoordsOf([&] {
                std::vector<int32_t> e(rank, 0);
                e[j] = 1;
                return e;
            }());
            for (int t = 0; t < rank; ++t) alphaPair += int64_t(aj[t]) * cur.pairing[t];
            nr.pairing[j] -= static_cast<int32_t>(alphaPair);
            seen.insert(rc);
            all.push_back(nr);
        }
    }
    for (auto& r : all) {
        bool posr = true, negr = true;
        for (auto c : r.rc) {
            if (c < 0) posr = false;
            if (c > 0) negr = false;
        }
        if (!posr && !negr) throw Error("root generation produced a mixed-sign root");
        if (!posr) continue;
        RootDatum::Root rr;
        rr.w = r.w;
        rr.rc = r.rc;
        rr.pairing = r.pairing;
        rr.height = std::accumulate(r.rc.begin(), r.rc.end(), 0);
        rd.pos.push_back(rr);
    }
    std::sort(rd.pos.begin(), rd.pos.end(), [](const RootDatum::Root& a, const RootDatum::Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.rc < b.rc;
    });
    for (int i = 0; i < rd.nPos(); ++i)
        if (rd.pairing(rd.pos[i].w, i) != 2) throw Error("coroot pairing <a,a^vee> != 2");

    // --- Weyl group enumeration (BFS by length, words in lex order) ---
    auto simpleMat = [&](int i) {
        std::vector<int32_t> m(rank * rank, 0);
        for (int k = 0; k < rank; ++k) m[k * rank + k] = 1;
        const Weight ai = rd.pos[rd.simpleRootPos(i)].w;
        for (int k = 0; k < rank; ++k) m[k * rank + i] -= ai[k];
        return m;
    };
    std::vector<std::vector<int32_t>> gens;
    for (int i = 0; i < rank; ++i) gens.push_back(simpleMat(i));

    std::map<std::vector<int32_t>, int> index;
    WeylElt e;
    e.mat.assign(rank * rank, 0);
    for (int k = 0; k < rank; ++k) e.mat[k * rank + k] = 1;
    rd.w.push_back(e);
    index[e.mat] = 0;
    size_t lo = 0;
    while (lo < rd.w.size()) {
        size_t hi = rd.w.size();
        for (size_t x = lo; x < hi; ++x)
            for (int i = 0; i < rank; ++i) {
                auto m = matMul(rd.w[x].mat, gens[i], rank);  // append s_i on the right
                if (index.count(m)) continue;
                WeylElt ne;
                ne.mat = m;
                ne.word = rd.w[x].word;
                ne.word.push_back(static_cast<int8_t>(i));
                ne.len = rd.w[x].len + 1;
                index[m] = static_cast<int>(rd.w.size());
                rd.w.push_back(ne);
            }
        lo = hi;
    }
    rd.idE = 0;
    rd.idW0 = static_cast<int>(rd.w.size()) - 1;
    if (rd.w[rd.idW0].len != rd.nPos()) throw Error("l(w0) != |R+|");

    // parabolic subgroup W_I
    for (size_t x = 0; x < rd.w.size(); ++x) {
        bool ok = true;
        for (int8_t g : rd.w[x].word)
            if (std::find(rd.levi.begin(), rd.levi.end(), int(g)) == rd.levi.end()) ok = false;
        if (ok) rd.wLevi.push_back(static_cast<int>(x));
    }
    rd.idWI = rd.wLevi.empty() ? 0 : rd.wLevi.back();
    int nPosI = 0;
    for (int i = 0; i < rd.nPos(); ++i)
        if (rd.inLevi(i)) ++nPosI;
    if (rd.w[rd.idWI].len != nPosI) throw Error("l(wI) != |R_I+|");
    rd.idWIhat = rd.mult(rd.idWI, rd.idW0);
    if (rd.w[rd.idWIhat].len != rd.nPos() - nPosI) throw Error("l(w^I) != |R+| - |R_I+|");

    // --- ZI Hermite normal form (rows = Levi simple roots in weight coords) ---
    {
        std::vector<std::vector<int64_t>> rows;
        for (int i : rd.levi) {
            const Weight& a = rd.pos[rd.simpleRootPos(i)].w;
            rows.emplace_back(a.begin(), a.end());
        }
        // row HNF, small sizes
        size_t rr = 0;
        for (int col = 0; col < rank && rr < rows.size(); ++col) {
            // gcd-reduce column col below rr, keeping the smallest nonzero as pivot
            while (true) {
                size_t pivot = rows.size();
                for (size_t i = rr; i < rows.size(); ++i)
                    if (rows[i][col] != 0 &&
                        (pivot == rows.size() ||
                         std::llabs((long long)rows[i][col]) < std::llabs((long long)rows[pivot][col])))
                        pivot = i;
                if (pivot == rows.size()) break;
                std::swap(rows[rr], rows[pivot]);
                bool again = false;
                for (size_t i = rr + 1; i < rows.size(); ++i) {
                    if (rows[i][col] == 0) continue;
                    int64_t q = floorDiv(rows[i][col], rows[rr][col]);
                    for (int k = 0; k < rank; ++k) rows[i][k] -= q * rows[rr][k];
                    if (rows[i][col] != 0) again = true;
                }
                if (!again) break;
            }
            if (rows[rr][col] != 0) {
                if (rows[rr][col] < 0)
                    for (int k = 0; k < rank; ++k) rows[rr][k] = -rows[rr][k];
                for (size_t i = 0; i < rr; ++i) {
                    int64_t q = floorDiv(rows[i][col], rows[rr][col]);
                    for (int k = 0; k < rank; ++k) rows[i][k] -= q * rows[rr][k];
                }
                rd.ziPiv.push_back(static_cast<uint32_t>(col));
                ++rr;
            }
        }
        rows.resize(rr);
        for (auto& row : rows) rd.ziHnf.emplace_back(row.begin(), row.end());
        if (rd.ziHnf.size() != rd.levi.size())
            throw Error("ZI lattice rank mismatch");
        // saturation: ZI must be a direct summand of X(T) for the mod-p weight
        // lift used by simple identification; holds for all supported data.
        for (size_t i = 0; i < rd.ziHnf.size(); ++i) {
            int64_t g = 0;
            for (int k = 0; k < rank; ++k) g = std::gcd(g, (int64_t)rd.ziHnf[i][k]);
            (void)g;
        }
    }
    return rd;
}

}  // namespace llwy
