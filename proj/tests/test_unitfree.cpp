#include <catch2/catch_amalgamated.hpp>

#include "smckit/fixtures.hpp"
#include "smckit/unitfree.hpp"

using namespace smck;
using namespace smck::fixtures;

TEST_CASE("free unit: generator homs are permutations") {
    FreeUnitSmc u;
    auto star = u.star();
    auto ss = u.tensor(star, star);
    CHECK(u.hom_arrows(ss, ss).size() == 2);   // identity and the swap
    CHECK(u.hom_arrows(star, ss).empty());     // leaf counts differ
    CHECK(u.hom_arrows(star, star).size() == 1);
    auto sss = u.tensor(star, ss);
    CHECK(u.hom_arrows(sss, sss).size() == 6);
    // reassociated parallel words still have full permutation homs
    CHECK(u.hom_arrows(sss, u.tensor(ss, star)).size() == 6);
}

TEST_CASE("free unit: sym squared is the identity arrow") {
    FreeUnitSmc u;
    auto star = u.star();
    auto s = u.sym(star, star);
    auto loop = u.compose(s, s);
    CHECK(u.is_id(loop));
    CHECK_FALSE(u.is_id(s));
    CHECK(u.arr_eq(loop, u.id(u.tensor(star, star))));
}

TEST_CASE("free unit arrow keys are canonical-equality sound") {
    FreeUnitSmc u;
    auto star = u.star();
    auto ss = u.tensor(star, star);
    // two representatives of the same class share a key
    auto a = u.compose(u.sym(star, star), u.sym(star, star));
    CHECK(u.arr_key(a) == u.arr_key(u.id(ss)));
    CHECK(u.arr_key(u.sym(star, star)) != u.arr_key(u.id(ss)));
}

TEST_CASE("v evaluates powers of the identity endofunctor") {
    SmcStructure a = z3();
    VAction act(a);
    FreeUnitSmc u;
    auto star = u.star();
    auto ss = u.tensor(star, star);
    CHECK(act.obj(star, 2) == 2);
    CHECK(act.obj(ss, 2) == (2 + 2) % 3); // v(⋆⊗⋆)(x) = x⊗x
    CHECK(act.obj(u.unit(), 2) == 0);
    CHECK(act.on_arrow(ss, a.base.id(1)) == a.base.id(2));

    // strong structure of v(X): identities on a strict corpus structure
    CHECK(is_identity(a.base, act.unit_structure(ss)));
    CHECK(is_identity(a.base, act.tensor_structure(ss, 1, 2)));

    // on the twisted structure the strong structure is a genuine iso
    SmcStructure tw = z2_twisted();
    VAction act2(tw);
    CHECK(act2.unit_structure(ss) == 1); // r_I⁻¹-powered
    CHECK(find_inverse(tw.base, act2.unit_structure(ss)) >= 0);
}

TEST_CASE("v as a functor into the enumerated hom") {
    SmcStructure a = idem_monoid();
    HomSmc hom = build_hom_smc(a, a);
    VFunctor v(a, hom);
    FreeUnitSmc u;
    CHECK(v.obj(u.unit()) == hom.smc.unit);
    int vstar = v.obj(u.star());
    CHECK(same_data(hom.functors[vstar], identity_mon_functor(a)));
    CHECK(v.obj(u.tensor(u.star(), u.star())) == hom.smc.ten(vstar, vstar));
    // v sends the swap to the hom's symmetry component
    ArrId img = v.arr(u.sym(u.star(), u.star()));
    CHECK(img == hom.smc.s(vstar, vstar));
}

TEST_CASE("R = En(v*) evaluates and separates the Z3 monoid") {
    SmcStructure a = z3_monoid();
    TableSmc ma(a);
    FreeUnitSmc u;
    PresCtx<TableSmc, FreeUnitSmc> P{ma, u};
    auto r = en_extend(TableSmc{a}, r_core(a));

    // R((•,⋆)) = • and R(f ⊗ ⋆) = f: the identity transport
    auto star = u.star();
    CHECK(r.obj(pair_word(P, 0, star)) == 0);
    CHECK(r.edge(edges::tens_l(P, 1, star)) == 1);
    CHECK(r.edge(edges::tens_l(P, 2, star)) == 2);

    // the parallel pair tens_l(1,⋆) vs tens_l(2,⋆) is separated by R
    auto p = edge_path(edges::tens_l(P, 1, star));
    auto q = edge_path(edges::tens_l(P, 2, star));
    Extension<TableSmc, FreeUnitSmc> ext{
        "r-extension", [&](const TenPath<TableSmc, FreeUnitSmc>& pa) {
            return cat("c", r.path(pa));
        }};
    auto v = decide_equal(P, p, q, 8, {ext});
    REQUIRE(v.is_distinct());
    CHECK(v.lhs_image == "c1");
    CHECK(v.rhs_image == "c2");
}

TEST_CASE("L = En(v) evaluates over the swapped presentation") {
    SmcStructure a = z3();
    TableSmc ma(a);
    FreeUnitSmc u;
    PresCtx<FreeUnitSmc, TableSmc> P{u, ma};
    auto l = en_extend(TableSmc{a}, l_core(a));
    auto star = u.star();
    CHECK(l.obj(pair_word(P, star, 2)) == 2);
    CHECK(l.obj(pair_word(P, u.tensor(star, star), 2)) == 1); // 2+2 mod 3
    CHECK(l.edge(edges::tens_r(P, star, 1)) == 1);
}

TEST_CASE("counit of v* ⊣ ev_⋆") {
    SmcStructure a = z3();
    FreeUnitSmc u;
    auto star = u.star();
    auto ss = u.tensor(star, star);
    auto deep = u.tensor(u.unit(), u.tensor(ss, star));

    // strict f (= v*(x)): all components identities
    for (ObjId x = 0; x < 3; ++x) {
        UnitCounit eps(v_star_at(a, x));
        CHECK(eps.identity_at(star));
        CHECK(eps.identity_at(ss));
        CHECK(eps.identity_at(deep));
    }

    // strong f over the twisted structure: invertible, not identity
    SmcStructure tw = z2_twisted();
    UnitFunctor f;
    f.a = &tw;
    f.star_value = 0;
    f.f0 = [&tw]() { return tw.base.id(0); };
    // choose the twisted strong structure F2 = t everywhere
    f.f2 = [&tw](const UnitObj&, const UnitObj&) { return 1; };
    UnitCounit eps(f);
    CHECK(eps.identity_at(star));
    CHECK(eps.invertible_at(ss));
    CHECK_FALSE(eps.identity_at(ss));

    // ev_⋆ * eps is the identity: the component at ⋆ is always id
    CHECK(eps.identity_at(star));
}

TEST_CASE("counit is natural against the free-unit graph edges") {
    SmcStructure a = z3();
    FreeUnitSmc u;
    auto star = u.star();
    auto ss = u.tensor(star, star);
    UnitFunctor f = v_star_at(a, 2);
    UnitCounit eps(f);
    VAction act(a);
    auto f_arr = [&](const UnitPath& p) { return act.component(p, 2); };
    std::vector<EdgePtr<StarBase, StarBase>> samples = {
        edges::sym(u.ctx(), star, star),
        edges::lunit(u.ctx(), star),
        edges::runit(u.ctx(), ss),
        edges::assoc(u.ctx(), star, star, star),
        edges::lunit_inv(u.ctx(), ss),
    };
    for (const auto& e : samples) {
        INFO(e->shown);
        CHECK(eps.natural_at(e, f_arr));
    }
}

TEST_CASE("triangle: ev_⋆ ∘ v* is the identity on the structure") {
    SmcStructure a = z3_monoid();
    VStar vs(a);
    FreeUnitSmc u;
    auto star = u.star();
    for (ObjId x = 0; x < a.base.n_obj; ++x)
        CHECK(vs.value(x, star) == x);
    for (ArrId f = 0; f < a.base.n_arr(); ++f)
        CHECK(vs.on_arrow(f, star) == f);
}

TEST_CASE("free-unit equality agrees with the search engine") {
    // shared canonical fragment: BFS over the tensor presentation of
    // (1t-like bases) agrees with permutation equality where conclusive
    FreeUnitSmc u;
    auto P = u.ctx();
    auto star = u.star();
    auto ss = u.tensor(star, star);
    auto s = edge_path(edges::sym(P, star, star));
    auto loop = concat(s, edge_path(edges::sym(P, star, star)));
    auto v = decide_equal(P, loop, identity_path(ss), 4, {});
    REQUIRE(v.is_equal());
    CHECK(u.arr_eq(loop, identity_path(ss)));
    auto v2 = decide_equal(P, s, identity_path(ss), 6, {});
    CHECK_FALSE(v2.is_equal()); // distinct permutation classes never meet
}
