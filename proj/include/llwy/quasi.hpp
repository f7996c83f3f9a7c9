#pragma once

#include "llwy/pims.hpp"

namespace llwy {

// Shared machinery for one standard-Levi block: the Levi algebra on its
// regular module, its simples, and cached projective covers.
struct BlockContext {
    std::shared_ptr<const LieAlgebra> L;
    PChar chi;
    MatAlgebra AI;
    std::vector<GradedModule> leviSimpleList;
    std::map<Weight, GradedModule> pimCache;

    static BlockContext make(std::shared_ptr<const LieAlgebra> L, const PChar& chi);
    const GradedModule& leviPim(const Weight& lam);  // Q_{chi,I}(lam)
};

// standard module Q^I(lam) and costandard module Q^{w^I}(mu)
GradedModule standard_module(BlockContext& ctx, const Weight& lam);
GradedModule costandard_module(BlockContext& ctx, const Weight& muTwisted);

struct QuasiSimple {
    GradedModule module;
    Weight lam;
    Weight lamR;                        // = lam on the regular path
    std::vector<Weight> lamRCandidates; // all scan hits on the non-regular path
    int multiplicity = 0;               // [L : L(lam)] = min of the two orbit sizes
};

// The quasi-simple module: image of the canonical map between the standard
// and costandard modules whose restriction to the distinguished degree slice
// is invertible.  Verifies the composition-multiset, simple head/socle and
// tau-self-duality postconditions.
QuasiSimple quasi_simple(BlockContext& ctx, const Weight& lam,
                         const std::vector<Weight>& lamRScan = {}, uint64_t seed = 1);

// decomposition of M|_{g_I} into linkage-block summands (per degree class and
// Levi central character); returns (ungraded Levi class representative, part)
std::vector<std::pair<Weight, GradedModule>> restrict_to_levi_blocks(const GradedModule& m);

struct LFiltration {
    bool ok = false;
    std::vector<Weight> bottomToTop;  // quasi-simple parameters in peel order
    std::string note;
};

// Find a filtration with quasi-simple subquotients matching the expected
// multiset, by quasi-socle peeling with backtracking.  Failure is a value.
LFiltration l_filtration_verify(BlockContext& ctx, const GradedModule& m,
                                const std::vector<std::pair<Weight, uint32_t>>& expected,
                                uint64_t seed = 1);

}  // namespace llwy
