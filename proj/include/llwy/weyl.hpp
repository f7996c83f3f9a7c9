#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "llwy/fp.hpp"

namespace llwy {

// Element of X(T) in fundamental-weight coordinates.
using Weight = std::vector<int32_t>;

Weight wadd(const Weight& a, const Weight& b);
Weight wsub(const Weight& a, const Weight& b);
Weight wscale(int32_t c, const Weight& a);

enum class CartanType { A, B };
CartanType parse_cartan_type(const std::string& s);

struct WeylElt {
    std::vector<int8_t> word;   // ShortLex-minimal reduced word over simple reflections
    std::vector<int32_t> mat;   // rank x rank action on fundamental-weight coordinates
    int len = 0;
};

// Canonical representative of a coset in X(T)/ZI.
struct DegreeClass {
    std::vector<int32_t> rep;
    bool operator==(const DegreeClass& o) const { return rep == o.rep; }
    bool operator!=(const DegreeClass& o) const { return rep != o.rep; }
    bool operator<(const DegreeClass& o) const { return rep < o.rep; }
};

enum class Ord { lt, eq, gt, incomparable };

// Root system, finite Weyl group, Levi combinatorics and the grading lattice.
struct RootDatum {
    CartanType type;
    int rank = 0;
    std::vector<std::vector<int32_t>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>

    struct Root {
        Weight w;                    // fundamental-weight coordinates
        std::vector<int32_t> rc;     // simple-root coordinates
        std::vector<int32_t> pairing;  // <lambda, root^vee> = sum pairing[k]*lambda[k]
        int height = 0;
    };
    std::vector<Root> pos;           // positive roots, sorted by (height, lex rc)
    std::vector<int> levi;           // indices into simple roots (sorted)
    Weight rho;

    std::vector<WeylElt> w;          // all of W, sorted by (length, word)
    std::vector<int> wLevi;          // indices into w of the parabolic subgroup W_I
    int idE = 0, idW0 = 0, idWI = 0, idWIhat = 0;  // identity, w0, w_I, w^I = w_I w0

    // ZI lattice data (Hermite normal form rows over the weight coordinates)
    std::vector<std::vector<int32_t>> ziHnf;
    std::vector<uint32_t> ziPiv;

    // --- queries ---
    int nPos() const { return static_cast<int>(pos.size()); }
    int rootIndex(const Weight& w) const;                  // positive root lookup, -1 if absent
    int simpleRootPos(int simpleIdx) const;                // index of alpha_i inside pos
    int64_t pairing(const Weight& lam, int posRootIdx) const;
    bool inLevi(int posRootIdx) const;                     // root lies in R_I
    Weight act(int eltIdx, const Weight& lam) const;       // linear action
    Weight dot(int eltIdx, const Weight& lam) const;       // w.(lam) = w(lam+rho)-rho
    int mult(int a, int b) const;                          // group multiplication, table index
    int inverse(int a) const;
    int length(int eltIdx) const { return w[eltIdx].len; }

    Weight lambda_twist(const Weight& lam, int eltIdx, uint16_t p) const;
    bool is_p_regular(const Weight& lam, uint16_t p) const;
    int levi_dot_orbit_size(const Weight& lam, uint16_t p) const;
    bool linked(const Weight& lam, const Weight& mu, uint16_t p) const;
    Weight canonical_linkage_rep(const Weight& lam, uint16_t p) const;
    // ungraded linkage of U_chi(g_I)-simples: orbits of the Levi dot action on
    // weights mod p (translations by all of pX(T))
    bool linked_mod_p(const Weight& lam, const Weight& mu, uint16_t p) const;
    Weight canonical_mod_p_rep(const Weight& lam, uint16_t p) const;

    DegreeClass degree_class(const Weight& lam) const;
    DegreeClass class_shift_by_root(const DegreeClass& c, int posRootIdx, bool negative) const;
    DegreeClass class_add(const DegreeClass& a, const DegreeClass& b) const;
    DegreeClass class_neg(const DegreeClass& a) const;
    Ord order_leq(const DegreeClass& mu, const DegreeClass& nu) const;

    bool inZI(const Weight& v) const;
    bool inZIscaled(const Weight& v, int32_t scale) const;  // v in scale*ZI

    nlohmann::json to_json() const;
};

RootDatum build_root_datum(CartanType type, int rank, const std::vector<int>& leviSubset);
RootDatum build_root_datum(const std::string& type, const std::vector<int>& leviSubset);

}  // namespace llwy
