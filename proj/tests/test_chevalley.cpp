#include "doctest.h"
#include "llwy/chevalley.hpp"

using namespace llwy;

namespace {
std::shared_ptr<LieAlgebra> mk(const std::string& type, std::vector<int> levi, uint16_t p) {
    auto rd = std::make_shared<RootDatum>(build_root_datum(type, levi));
    return build_chevalley(rd, p);
}
FpVec unit(int n, int i) {
    FpVec v(n, 0);
    v[i] = 1;
    return v;
}
}  // namespace

TEST_CASE("sl2 brackets") {
    auto L = mk("A1", {0}, 5);
    int e = L->eIdx(0), f = L->fIdx(0), h = L->hIdx(0);
    FpVec ef = L->bracket(unit(L->n, e), unit(L->n, f));
    CHECK(ef == unit(L->n, h));
    FpVec he = L->bracket(unit(L->n, h), unit(L->n, e));
    CHECK(he[e] == 2);
    FpVec hf = L->bracket(unit(L->n, h), unit(L->n, f));
    CHECK(hf[f] == 5 - 2);
}

TEST_CASE("prime gates") {
    CHECK_THROWS_WITH_AS(mk("A2", {0}, 3), doctest::Contains("bad-prime"), Error);
    CHECK_THROWS_WITH_AS(mk("A1", {0}, 2), doctest::Contains("bad-prime"), Error);
    CHECK_THROWS_WITH_AS(mk("B2", {1}, 2), doctest::Contains("bad-prime"), Error);
    CHECK_THROWS_WITH_AS(mk("A3", {0}, 2), doctest::Contains("bad-prime"), Error);
    CHECK_NOTHROW(mk("A3", {0, 1}, 3));  // 3 does not divide 4
    CHECK_NOTHROW(mk("A2", {0}, 5));
    CHECK_NOTHROW(mk("B2", {1}, 5));
}

TEST_CASE("A2 non-simple bracket carries sign fixed by the root order") {
    auto L = mk("A2", {0}, 5);
    // [e_a1, e_a2] = N e_{a1+a2} with |N| = 1 (q = 0 in type A)
    int r12 = L->rd->rootIndex(Weight{1, 1});
    REQUIRE(r12 >= 0);
    FpVec br = L->bracket(unit(L->n, L->eIdx(0)), unit(L->n, L->eIdx(1)));
    bool plus = br == unit(L->n, L->eIdx(r12));
    FpVec neg = unit(L->n, L->eIdx(r12));
    neg[L->eIdx(r12)] = 4;
    bool minus = br == neg;
    CHECK((plus || minus));
}

TEST_CASE("B2 has a +-2 structure constant") {
    auto L = mk("B2", {1}, 5);
    // [e_beta, e_{alpha+beta}] = +-2 e_{alpha+2beta} (q = 1)
    int rs = L->rd->rootIndex(Weight{1, 0});
    int rl = L->rd->rootIndex(Weight{0, 2});
    REQUIRE(rs >= 0);
    REQUIRE(rl >= 0);
    int beta = L->rd->simpleRootPos(1);
    FpVec br = L->bracket(unit(L->n, L->eIdx(beta)), unit(L->n, L->eIdx(rs)));
    CHECK((br[L->eIdx(rl)] == 2 || br[L->eIdx(rl)] == 3));
}

TEST_CASE("p-power map consistency: ad(h)^p = ad(h) on A2 at p=5") {
    auto L = mk("A2", {0}, 5);
    for (int i = 0; i < 2; ++i) {
        FpMat adh = L->ad(L->hIdx(i)).toDense();
        FpMat pw = FpMat::identity(5, L->n);
        for (int k = 0; k < 5; ++k) pw = pw.mul(adh);
        CHECK(pw == adh);
    }
    for (int r = 0; r < L->m; ++r) {
        FpMat ade = L->ad(L->eIdx(r)).toDense();
        FpMat pw = FpMat::identity(5, L->n);
        for (int k = 0; k < 5; ++k) pw = pw.mul(ade);
        CHECK(pw.isZero());
    }
}

TEST_CASE("standard Levi p-character") {
    auto L0 = mk("A2", {}, 5);
    auto chi0 = standard_levi_pchar(*L0);
    for (auto v : chi0.chiF) CHECK(v == 0);

    auto L = mk("A2", {0}, 5);
    auto chi = standard_levi_pchar(*L);
    CHECK(chi.onF(L->rd->simpleRootPos(0)) == 1);
    CHECK(chi.onF(L->rd->simpleRootPos(1)) == 0);
    CHECK(chi.onF(L->rd->rootIndex(Weight{1, 1})) == 0);

    auto L1 = mk("A1", {0}, 5);
    CHECK(standard_levi_pchar(*L1).onF(0) == 1);
}

TEST_CASE("tau maps root spaces as x_a -> x_{-w_I a} and fixes chi up to sign") {
    // the construction itself asserts the properties; exercise several data
    for (auto& [t, levi, p] : std::vector<std::tuple<std::string, std::vector<int>, int>>{
             {"A1", {0}, 5}, {"A2", {0}, 5}, {"A2", {0, 1}, 5}, {"B2", {1}, 5}, {"A3", {0, 1}, 5}}) {
        auto L = mk(t, levi, static_cast<uint16_t>(p));
        // A1, I = Pi: -w_I(alpha) = alpha, so e stays in its own root space
        if (t == "A1") {
            FpVec img = L->applyTau(unit(L->n, L->eIdx(0)));
            for (int k = 0; k < L->n; ++k)
                if (img[k]) CHECK(k == L->eIdx(0));
        }
    }
}

TEST_CASE("subalgebra index sets are bracket-closed and sized correctly") {
    auto L = mk("A2", {0}, 5);
    CHECK(L->subalgebra(Subalg::borel_plus).size() == 5);
    CHECK(L->subalgebra(Subalg::levi_gI).size() == 4);
    CHECK(L->subalgebra(Subalg::parabolic_pI).size() == 6);
    CHECK(L->subalgebra(Subalg::parabolic_pI_prime).size() == 6);
    CHECK(L->subalgebra(Subalg::u_plus).size() == 2);
    CHECK(L->subalgebra(Subalg::u_minus).size() == 2);
    // twisted borel for w^I exists and is closed
    CHECK(L->twistedBorel(L->rd->idWIhat).size() == 5);
}

TEST_CASE("structure dump is serializable") {
    auto L = mk("A1", {0}, 5);
    auto j = L->structure_json();
    CHECK(j["p"] == 5);
    CHECK(!j["brackets"].empty());
}
