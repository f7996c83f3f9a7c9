#pragma once

#include "llwy/hom.hpp"

namespace llwy {

// Identity of a graded simple: the canonical representative of the linkage
// class of its highest weight (the representative also encodes the degree
// shift, since translations outside pZI change the class).
struct SimpleId {
    Weight rep;
    bool operator==(const SimpleId& o) const { return rep == o.rep; }
    bool operator<(const SimpleId& o) const { return rep < o.rep; }
    std::string str() const;
};

SimpleId identify_simple(const GradedModule& simple);

struct ChopFactor {
    GradedModule module;  // one materialized copy
    SimpleId id;
    uint32_t mult = 0;
};

struct ChopResult {
    std::vector<ChopFactor> factors;  // distinct ids, sorted
    uint32_t inputDim = 0;
    uint32_t length() const;
    const ChopFactor* find(const SimpleId& id) const;
    bool sameMultiset(const ChopResult& o) const;
    std::string str() const;
};

// Composition factors with irreducibility certificates (random algebra words,
// kernel spins, Norton's criterion); deterministic for a fixed seed.
ChopResult chop(const GradedModule& m, uint64_t seed = 1);

// End(L) = F_p check for a chop factor (split field assertion)
void assert_split(const GradedModule& simple);

// radical: intersection of the kernels of all maps onto block simples;
// socle: sum of the images of all maps from block simples.
Subspace radical_subspace(const GradedModule& m, const std::vector<const GradedModule*>& simples);
Subspace socle_subspace(const GradedModule& m, const std::vector<const GradedModule*>& simples);

struct LoewySeries {
    std::vector<ChopResult> radLayers;  // head first: M/rad M, rad M/rad^2 M, ...
    std::vector<ChopResult> socLayers;  // socle first: soc M, soc^2/soc, ...
    uint32_t ll = 0;
};

LoewySeries loewy(const GradedModule& m, uint64_t seed = 1);

// absolute-coordinate filtrations: M = R_0 > R_1 > ... > 0 (radical) and
// 0 < S_1 < ... < M (socle)
std::vector<Subspace> radical_chain(const GradedModule& m,
                                    const std::vector<const GradedModule*>& simples);
std::vector<Subspace> socle_chain(const GradedModule& m,
                                  const std::vector<const GradedModule*>& simples);

}  // namespace llwy
