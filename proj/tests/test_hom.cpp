#include <set>
#include "doctest.h"
#include "llwy/hom.hpp"

using namespace llwy;

namespace {
struct Setup {
    std::shared_ptr<LieAlgebra> L;
    PChar chi;
    Setup(const std::string& type, std::vector<int> levi, uint16_t p)
        : L(build_chevalley(std::make_shared<RootDatum>(build_root_datum(type, levi)), p)),
          chi(standard_levi_pchar(*L)) {}
};
bool containsIdentity(const std::vector<FpMat>& homs, uint32_t n, uint16_t p) {
    // solve sum c_i H_i = id in the span
    FpMat sys(p, n * n, static_cast<uint32_t>(homs.size()));
    FpVec rhs(n * n, 0);
    for (uint32_t r = 0; r < n; ++r) rhs[r * n + r] = 1;
    for (uint32_t i = 0; i < homs.size(); ++i)
        for (uint32_t r = 0; r < n; ++r)
            for (uint32_t c = 0; c < n; ++c) sys.set(r * n + c, i, homs[i].get(r, c));
    return sys.solve(rhs).has_value();
}
}  // namespace

TEST_CASE("endomorphisms of a baby Verma are the scalars") {
    Setup s("A1", {0}, 5);
    auto z = baby_verma(s.L, s.chi, Weight{2});
    auto homs = hom_space(z, z);
    CHECK(homs.size() == 1);
    CHECK(containsIdentity(homs, z.dim, 5));

    Setup s2("A2", {0}, 5);
    auto z2 = baby_verma(s2.L, s2.chi, Weight{0, 0});
    auto homs2 = hom_space(z2, z2);
    CHECK(homs2.size() == 1);
    CHECK(containsIdentity(homs2, z2.dim, 5));
}

TEST_CASE("unique canonical map into the twisted Verma, image proper and nonzero") {
    Setup s("A2", {0}, 5);
    Weight lam{0, 0};
    Weight lamTw = s.L->rd->lambda_twist(lam, s.L->rd->idWIhat, 5);
    auto z = baby_verma(s.L, s.chi, lam);
    auto zt = twisted_baby_verma(s.L, s.chi, s.L->rd->idWIhat, lamTw);
    auto homs = hom_space(z, zt);
    REQUIRE(homs.size() == 1);
    auto img = image_of(homs[0]);
    CHECK(img.dim() > 0);
    CHECK(img.dim() < z.dim);
    // image is a submodule (stable under every generator)
    for (auto* a : zt.actPtrs())
        for (uint32_t r = 0; r < img.dim(); ++r) CHECK(img.contains(a->apply(img.basis.row(r))));
}

TEST_CASE("tau dual of a baby Verma is the twisted Verma at the twisted weight") {
    Setup s("A2", {0}, 5);
    Weight lam{0, 0};
    Weight lamTw = s.L->rd->lambda_twist(lam, s.L->rd->idWIhat, 5);
    auto z = baby_verma(s.L, s.chi, lam);
    auto zt = twisted_baby_verma(s.L, s.chi, s.L->rd->idWIhat, lamTw);
    auto td = tau_dual(z);
    auto res = iso_test(td, zt);
    CHECK(res.iso);

    // and the tau-double-dual is isomorphic to the original
    auto back = iso_test(tau_dual(td), z);
    CHECK(back.iso);
}

TEST_CASE("no homomorphisms across linkage classes at any represented shift") {
    Setup s("A2", {0}, 5);
    Weight xi0{0, 0};
    int s1 = -1, s2 = -1;
    for (size_t e = 0; e < s.L->rd->w.size(); ++e) {
        if (s.L->rd->w[e].word == std::vector<int8_t>{0}) s1 = (int)e;
        if (s.L->rd->w[e].word == std::vector<int8_t>{1}) s2 = (int)e;
    }
    Weight xi1 = s.L->rd->dot(s.L->rd->mult(s1, s2), xi0);
    REQUIRE(!s.L->rd->linked(xi0, xi1, 5));
    auto z0 = baby_verma(s.L, s.chi, xi0);
    auto z1 = baby_verma(s.L, s.chi, xi1);
    // the head class of z0 is not a factor of z1, so no map at shift zero
    CHECK(hom_space(z0, z1).empty());
    // whereas the p alpha-translated Verma of xi1 receives the canonical map
    Weight alphaHigh = s.L->rd->pos[s.L->rd->rootIndex(Weight{1, 1})].w;
    auto z1t = baby_verma(s.L, s.chi, wadd(xi1, wscale(5, alphaHigh)));
    CHECK(hom_space(z0, z1t).size() == 1);
}

TEST_CASE("iso_test distinguishes dimensions and finds identity isos") {
    Setup s("A1", {0}, 3);
    auto z1 = baby_verma(s.L, s.chi, Weight{1});
    auto z2 = baby_verma(s.L, s.chi, Weight{2});
    CHECK(iso_test(z1, z1).iso);
    CHECK(z1.dim == z2.dim);
    // lambda=1 and lambda=2: 2 = s.1 + 3Z? <1+1,a>=2: s.1 = 3-2-1=0... check directly
    auto sum = direct_sum(z1, z1);
    CHECK(!iso_test(z1, sum).iso);
}
