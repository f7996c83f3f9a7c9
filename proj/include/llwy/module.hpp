#pragma once

#include <memory>
#include <string>
#include <vector>

#include "llwy/pbw.hpp"
#include "llwy/subspace.hpp"

namespace llwy {

struct Provenance {
    std::string kind;   // verma | tverma | std | costd | leviverma | levipim | regular |
                        // dual | tdual | sum | submodule | quotient | image | simple | pim | line
    Weight lam;
    int weyl = -1;
    std::string note;
    std::string str() const;
};

// A U_chi-module with one action matrix per acting Lie basis element, an
// X(T)/ZI degree label and an h-eigenvalue label per basis vector.  Basis
// vectors are always simultaneous h-eigenvectors.
struct GradedModule {
    std::shared_ptr<const LieAlgebra> L;
    PChar chi;                                // values chi(f_gamma); duals carry -chi
    uint32_t dim = 0;
    std::vector<int> acting;                  // Lie basis indices with stored action
    std::vector<FpSparse> act;                // parallel to acting
    std::vector<DegreeClass> deg;             // per basis vector
    std::vector<std::vector<uint16_t>> wt;    // h-eigenvalues mod p per basis vector
    std::vector<FpVec> gens;                  // module generators (weight vectors)
    Provenance prov;

    uint16_t p() const { return L->p; }
    const FpSparse* actionOf(int basisIdx) const;
    FpVec applyBasis(int basisIdx, const FpVec& v) const;
    std::vector<const FpSparse*> actPtrs() const;
    bool actsWithFull() const { return acting.size() == static_cast<size_t>(L->n); }

    // Hard invariant check: brackets, p-powers (with the module's own chi),
    // h-diagonality and the degree/weight shifts of every action entry.
    void validate() const;

    // greedy minimal-ish generating set of weight vectors (cached in gens)
    void ensureGenerators();
};

// 1-dimensional k_lambda over the subalgebra spanned by `acting`; root
// vectors act by zero (legality enforced by validate).
GradedModule character_line(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                            const std::vector<int>& acting, const Weight& lam);

// U_chi(g') (x)_{U(sub)} inner, with g' spanned by resultActing.  The coset
// alphabet lists the complementary negative-side letters in their monomial
// order; tail letters act through `inner` (absent letters act by zero).
GradedModule induce(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                    const std::vector<int>& resultActing, const std::vector<int>& cosetAlphabet,
                    const GradedModule& inner, Provenance prov);

GradedModule baby_verma(std::shared_ptr<const LieAlgebra> L, const PChar& chi, const Weight& lam);
GradedModule twisted_baby_verma(std::shared_ptr<const LieAlgebra> L, const PChar& chi, int weylIdx,
                                const Weight& lam);
// Z_{chi,I}(lam): baby Verma of the Levi subalgebra (acting set = g_I)
GradedModule levi_baby_verma(std::shared_ptr<const LieAlgebra> L, const PChar& chi, const Weight& lam);
// standard / costandard induction from the two parabolics
GradedModule parabolic_induce(std::shared_ptr<const LieAlgebra> L, const PChar& chi, bool primeSide,
                              const GradedModule& inner);

GradedModule tau_dual(const GradedModule& m);
GradedModule plain_dual(const GradedModule& m);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

// submodule on an invariant subspace (labels block-refined), and quotient;
// rowsOut receives the chosen basis rows in ambient coordinates, keptOut the
// ambient coordinates indexing the quotient basis
GradedModule submodule(const GradedModule& m, const Subspace& s,
                       std::vector<FpVec>* rowsOut = nullptr);
GradedModule quotient(const GradedModule& m, const Subspace& s,
                      std::vector<uint32_t>* keptOut = nullptr);

// change to a basis of simultaneous h-eigenvectors (all in one degree class)
GradedModule rebase_weight_diagonal(std::shared_ptr<const LieAlgebra> L, const PChar& chi,
                                    const std::vector<int>& acting, std::vector<FpSparse> rawAct,
                                    const DegreeClass& cls, const FpVec& generator, Provenance prov);

// coordinates of every basis vector of `sub` inside `m` refined to single
// (degree, weight) blocks; throws if the subspace is not label-homogeneous
std::vector<FpVec> block_refine(const GradedModule& m, const Subspace& s);

}  // namespace llwy
