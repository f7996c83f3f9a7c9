#pragma once

#include <optional>

#include "llwy/module.hpp"

namespace llwy {

// Space of module homomorphisms M -> N.  In graded mode only maps shifting
// every degree label by exactly `shift` are produced.  Matrices act on column
// vectors: (F v) in N-coordinates for v in M-coordinates.
std::vector<FpMat> hom_space(const GradedModule& M, const GradedModule& N, bool graded,
                             const DegreeClass& shift, uint64_t seed = 0xC0FFEEULL);

inline DegreeClass zero_shift(const GradedModule& M) {
    return M.L->rd->degree_class(Weight(M.L->rd->rank, 0));
}

// convenience: graded homs with zero shift
std::vector<FpMat> hom_space(const GradedModule& M, const GradedModule& N);

struct IsoResult {
    bool iso = false;
    FpMat map;
    DegreeClass shift;
};
// Invertible intertwiner test; with allowShift the represented degree shifts
// are scanned, otherwise only shift zero is admitted.
IsoResult iso_test(const GradedModule& M, const GradedModule& N, bool allowShift = true,
                   uint64_t seed = 0xC0FFEEULL);

Subspace image_of(const FpMat& F);
Subspace kernel_of(const FpMat& F);

// composition: (G after F)
FpMat compose(const FpMat& G, const FpMat& F);

}  // namespace llwy
