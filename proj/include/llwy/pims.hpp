#pragma once

#include "llwy/series.hpp"

namespace llwy {

// A reduced enveloping algebra U_chi(s) for a bracket-closed subset s of the
// Lie basis, presented on its left regular module (basis = PBW monomials in
// the subalgebra letters, exponents < p).
struct MatAlgebra {
    std::shared_ptr<const LieAlgebra> L;
    PChar chi;
    std::vector<int> sub;             // subalgebra letters in global order
    uint32_t dim = 0;                 // p^{|sub|}
    std::vector<FpSparse> leftMul;    // left multiplication by each letter
    FpVec one;                        // coordinates of the empty monomial

    FpVec mul(const FpVec& a, const FpVec& b) const;  // product a*b
    std::vector<const FpSparse*> genPtrs() const;
};

MatAlgebra regular_algebra(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                           const std::vector<int>& sub, uint32_t dimBudget = 1u << 16);

// all simple U_chi(g_I)-modules Z_{chi,I}(lambda), one lambda per linkage
// class of the p^rank weight box
std::vector<GradedModule> levi_simples(std::shared_ptr<const LieAlgebra> L, const PChar& chi);

// rad A as the intersection of the annihilators of the given simples
Subspace jacobson_radical(const MatAlgebra& A, const std::vector<const GradedModule*>& simples);

// Newton iteration e <- 3e^2 - 2e^3 from an idempotent mod rad
FpVec lift_idempotent(const MatAlgebra& A, const FpVec& e0, int iterCap = 24);

// projective cover of the simple S: Wedderburn projection, primitive
// idempotent lift, spin of A*e, then an h-eigenbasis with graded labels
GradedModule pim(const MatAlgebra& A, const GradedModule& S,
                 const std::vector<const GradedModule*>& simples, uint64_t seed = 1);

// U_chi(g) (x)_{U_0(h)} k_lambda: a projective module of dimension p^{2|R+|}
// surjecting onto every simple with highest weight lambda mod p
GradedModule projective_from_torus(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                                   const Weight& lam, uint32_t dimBudget = 1u << 16);

}  // namespace llwy
