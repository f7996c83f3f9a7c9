#pragma once

#include <memory>
#include <vector>

#include "json.hpp"
#include "llwy/fmatrix.hpp"
#include "llwy/weyl.hpp"

namespace llwy {

// p-character in standard Levi form: chi vanishes on b+ and on g_{-gamma}
// for gamma outside I; chiF[g] = chi(f_gamma) per positive-root index.
struct PChar {
    std::vector<uint16_t> chiF;
    uint16_t onF(int posRootIdx) const { return chiF[posRootIdx]; }
};

enum class Subalg { borel_plus, levi_gI, parabolic_pI, parabolic_pI_prime, u_plus, u_minus };

// Chevalley basis of g over F_p: f-block (negative root vectors, ascending by
// (height, lex)), then h_1..h_r, then the e-block in the same root order.
struct LieAlgebra {
    std::shared_ptr<const RootDatum> rd;
    uint16_t p = 0;
    int m = 0;  // number of positive roots
    int n = 0;  // basis size 2m + rank

    int fIdx(int i) const { return i; }
    int hIdx(int i) const { return m + i; }
    int eIdx(int i) const { return m + rd->rank + i; }
    bool isF(int b) const { return b < m; }
    bool isH(int b) const { return b >= m && b < m + rd->rank; }
    bool isE(int b) const { return b >= m + rd->rank; }
    int rootOf(int b) const { return isF(b) ? b : b - m - rd->rank; }  // valid for f/e

    // structure constants: brk[i][j] = coefficients of [x_i, x_j]
    std::vector<std::vector<std::vector<std::pair<int, uint16_t>>>> brk;

    // x^[p]: root vectors to zero, h_i to itself
    bool pPowerIsSelf(int b) const { return isH(b); }

    FpVec bracket(const FpVec& a, const FpVec& b) const;
    FpSparse ad(int b) const;

    // weight shift of ad(x_b) on h-eigenvalues, coordinates mod p (zero for h)
    std::vector<uint16_t> weightShiftModP(int b) const;
    // degree-class shift in X(T)/ZI (zero class for h)
    DegreeClass classShift(int b) const;

    // the automorphism tau with tau(g_alpha) = g_{-w_I alpha}, chi o tau^{-1} = -chi
    struct BasisMap {
        std::vector<int> img;       // image basis index (root spaces permute, h maps to h-span)
        std::vector<FpVec> cols;    // full column expansion per basis index
    };
    BasisMap tau, tauInv;
    FpVec applyTau(const FpVec& v, bool inverse = false) const;

    std::vector<int> subalgebra(Subalg s) const;        // basis indices, bracket-closed
    std::vector<int> twistedBorel(int weylIdx) const;   // h + { x_{w(alpha)} : alpha in R+ }

    nlohmann::json structure_json() const;
};

std::shared_ptr<LieAlgebra> build_chevalley(std::shared_ptr<const RootDatum> rd, uint16_t p);
PChar standard_levi_pchar(const LieAlgebra& L);

}  // namespace llwy
