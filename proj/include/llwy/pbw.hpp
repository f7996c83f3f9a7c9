#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "llwy/chevalley.hpp"

namespace llwy {

// Elements of U_chi(g) as F_p-combinations of ordered monomials with
// exponents < p.  Keys are exponent vectors over the Lie basis in the fixed
// PBW order (f-block ascending by (height, lex), then h, then e-block).
using PbwMono = std::vector<uint8_t>;
using PbwElt = std::map<PbwMono, uint16_t>;

// A total order on basis letters used by the straightener.  rankOf[b] gives
// the position of basis element b; straightening sorts words ascending.
struct PbwOrder {
    std::vector<int> rankOf;
    static PbwOrder identity(int n);
    // coset letters first (in the given sequence), then the rest in basis order
    static PbwOrder split(int n, const std::vector<int>& cosetFirst);
};

class Pbw {
public:
    Pbw(std::shared_ptr<const LieAlgebra> L, PChar chi);

    const LieAlgebra& lie() const { return *L_; }
    const PChar& chi() const { return chi_; }

    // scalar chi(x)^p = chi(x) for a basis letter
    uint16_t chiPowP(int basisIdx) const;

    // Straighten coeff * (word of basis letters) into canonical monomials
    // under the order; words are applied left-to-right as operators.
    void straightenWord(uint16_t coeff, std::vector<uint8_t> word, const PbwOrder& ord,
                        std::map<std::vector<uint8_t>, uint16_t>& out) const;

    // product in U_chi(g) under the default order
    PbwElt multiply(const PbwElt& a, const PbwElt& b) const;
    static PbwElt one();
    static PbwElt monomial(const PbwMono& m, uint16_t c = 1);

    PbwMono monoFromWord(const std::vector<uint8_t>& sortedWord) const;
    std::vector<uint8_t> wordFromMono(const PbwMono& m, const PbwOrder& ord) const;

private:
    std::shared_ptr<const LieAlgebra> L_;
    PChar chi_;
};

}  // namespace llwy
