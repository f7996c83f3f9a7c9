#include "doctest.h"
#include "llwy/module.hpp"

using namespace llwy;

namespace {
struct Setup {
    std::shared_ptr<LieAlgebra> L;
    PChar chi;
    Setup(const std::string& type, std::vector<int> levi, uint16_t p)
        : L(build_chevalley(std::make_shared<RootDatum>(build_root_datum(type, levi)), p)),
          chi(standard_levi_pchar(*L)) {}
};
}  // namespace

TEST_CASE("baby Verma dimensions and top component") {
    Setup s("A1", {0}, 5);
    auto z = baby_verma(s.L, s.chi, Weight{2});
    CHECK(z.dim == 5);
    // the (top degree, weight lambda) block is one-dimensional
    auto top = s.L->rd->degree_class(Weight{2});
    int cnt = 0;
    for (uint32_t j = 0; j < z.dim; ++j)
        if (z.deg[j] == top && z.wt[j] == std::vector<uint16_t>{2}) ++cnt;
    CHECK(cnt == 1);
    // e kills the highest vector, h acts by lambda
    FpVec v(z.dim, 0);
    v[0] = 1;
    CHECK(fpv_is_zero(z.applyBasis(s.L->eIdx(0), v)));
    CHECK(z.applyBasis(s.L->hIdx(0), v)[0] == 2);

    Setup s2("A2", {0}, 5);
    auto z2 = baby_verma(s2.L, s2.chi, Weight{0, 0});
    CHECK(z2.dim == 125);

    // weight bookkeeping along the f-ladder in sl2
    for (uint32_t j = 0; j < 5; ++j) CHECK(z.wt[j][0] == fp_norm(5, 2 - 2 * (int)j));
}

TEST_CASE("A1 regular chi: baby Verma is spanned by any highest weight vector spin") {
    Setup s("A1", {0}, 3);
    auto z = baby_verma(s.L, s.chi, Weight{1});
    FpVec v(z.dim, 0);
    v[0] = 1;
    auto out = spin(3, z.dim, {v}, z.actPtrs(), false);
    CHECK(out.space.dim() == 3);
}

TEST_CASE("twisted baby Verma: w = e reduces to the ordinary one") {
    Setup s("A2", {0}, 5);
    auto a = baby_verma(s.L, s.chi, Weight{0, 0});
    auto b = twisted_baby_verma(s.L, s.chi, s.L->rd->idE, Weight{0, 0});
    CHECK(a.dim == b.dim);
    for (size_t i = 0; i < a.act.size(); ++i) CHECK(a.act[i] == b.act[i]);
}

TEST_CASE("twisted baby Verma from w^I has dimension p^{|R+|} and validates") {
    Setup s("A2", {0}, 5);
    Weight lam{0, 0};
    Weight lamTw = s.L->rd->lambda_twist(lam, s.L->rd->idWIhat, 5);
    auto zt = twisted_baby_verma(s.L, s.chi, s.L->rd->idWIhat, lamTw);
    CHECK(zt.dim == 125);
}

TEST_CASE("Levi baby Verma and parabolic induction dimensions") {
    Setup s("A2", {0}, 5);
    auto zi = levi_baby_verma(s.L, s.chi, Weight{0, 0});
    CHECK(zi.dim == 5);  // p^{|R_I^+|}
    // u+ acts trivially on 1 (x) inner inside the standard module
    auto q = parabolic_induce(s.L, s.chi, false, zi);
    CHECK(q.dim == 25 * 5);
    for (int r = 0; r < s.L->m; ++r) {
        if (s.L->rd->inLevi(r)) continue;
        FpVec v(q.dim, 0);
        v[0] = 1;  // 1 (x) first inner vector
        CHECK(fpv_is_zero(q.applyBasis(s.L->eIdx(r), v)));
    }
    // Ind_{p_I} Z_{chi,I}(lam) has the dimension of the baby Verma module
    auto z = baby_verma(s.L, s.chi, Weight{0, 0});
    CHECK(q.dim == z.dim);
}

TEST_CASE("parabolic induction rejects inner modules with nontrivial nilradical action") {
    Setup s("A2", {0}, 5);
    auto z = baby_verma(s.L, s.chi, Weight{0, 0});  // full g-module
    CHECK_THROWS_WITH_AS(parabolic_induce(s.L, s.chi, false, z),
                         doctest::Contains("inner-not-parabolic"), Error);
}

TEST_CASE("tau dual is an involution up to equality of matrices") {
    Setup s("A2", {0}, 5);
    auto z = baby_verma(s.L, s.chi, Weight{0, 0});
    auto zdd = tau_dual(tau_dual(z));
    CHECK(zdd.dim == z.dim);
    for (size_t i = 0; i < z.act.size(); ++i) CHECK(zdd.act[i] == z.act[i]);
    CHECK(zdd.deg == z.deg);
    CHECK(zdd.wt == z.wt);
}

TEST_CASE("plain dual negates chi and validates") {
    Setup s("A1", {0}, 5);
    auto z = baby_verma(s.L, s.chi, Weight{2});
    auto d = plain_dual(z);
    CHECK(d.chi.onF(0) == 4);
    auto dd = plain_dual(d);
    for (size_t i = 0; i < z.act.size(); ++i) CHECK(dd.act[i] == z.act[i]);
}

TEST_CASE("direct sum and submodule/quotient machinery on sl2") {
    Setup s("A1", {0}, 3);
    auto z = baby_verma(s.L, s.chi, Weight{1});
    auto two = direct_sum(z, z);
    CHECK(two.dim == 6);
    two.validate();

    // the diagonal copy is a submodule
    std::vector<FpVec> diag;
    for (uint32_t i = 0; i < z.dim; ++i) {
        FpVec v(6, 0);
        v[i] = 1;
        v[i + 3] = 1;
        diag.push_back(v);
    }
    auto sub = Subspace::fromVectors(3, 6, diag);
    auto subM = submodule(two, sub);
    CHECK(subM.dim == 3);
    auto quoM = quotient(two, sub);
    CHECK(quoM.dim == 3);

    // a non-invariant subspace is rejected
    FpVec bad(6, 0);
    bad[0] = 1;
    CHECK_THROWS(submodule(two, Subspace::fromVectors(3, 6, {bad})));
}

TEST_CASE("generators: induced modules are cyclic on 1 (x) generator") {
    Setup s("A2", {0}, 5);
    auto z = baby_verma(s.L, s.chi, Weight{0, 0});
    REQUIRE(!z.gens.empty());
    auto out = spin(5, z.dim, z.gens, z.actPtrs(), false);
    CHECK(out.space.dim() == z.dim);
}
