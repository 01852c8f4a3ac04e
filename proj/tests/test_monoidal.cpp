#include <catch2/catch_amalgamated.hpp>

#include "smckit/fixtures.hpp"
#include "smckit/monoidal.hpp"

using namespace smck;
using namespace smck::fixtures;

TEST_CASE("corpus structures validate") {
    CHECK(validate_smc(terminal_smc()).empty());
    CHECK(validate_smc(z2()).empty());
    CHECK(validate_smc(z3()).empty());
    CHECK(validate_smc(idem_monoid()).empty());
    CHECK(validate_smc(z3_monoid()).empty());
    CHECK(validate_smc(z2_x_z3()).empty());
    CHECK(validate_smc(z2_twisted()).empty());
}

TEST_CASE("mutated tensor table is caught") {
    SmcStructure s = z2();
    // make 1⊗1 = 1 while 1⊗1 stays 0 on the other side: breaks
    // symmetry naturality/endpoints
    s.tensor_obj[1 * 2 + 1] = 1;
    Report r = validate_smc(s);
    REQUIRE_FALSE(r.empty());
}

TEST_CASE("mutated unitor is caught by triangle or unit-sym") {
    SmcStructure s = z2_twisted();
    s.lunit[0] = 0; // l = id while r = t
    Report r = validate_smc(s);
    REQUIRE_FALSE(r.empty());
    CHECK((mentions(r, "triangle") || mentions(r, "unit-sym")));
}

TEST_CASE("identity monoidal functor is strict and valid") {
    SmcStructure s = z2();
    MonFunctor f = identity_mon_functor(s);
    CHECK(validate_monoidal_functor(f, s, s).empty());
    CHECK(classify_strictness(f, s, s) == Strictness::strict);
}

TEST_CASE("constant-to-unit composite is strong and valid") {
    SmcStructure a = z3(), b = z2_twisted();
    MonFunctor f = constant_unit_functor(a, b);
    CHECK(validate_monoidal_functor(f, a, b).empty());
    CHECK(classify_strictness(f, a, b) == Strictness::strong);
}

TEST_CASE("Z3 doubling map is a strict monoidal functor") {
    SmcStructure s = z3();
    MonFunctor f = identity_mon_functor(s);
    for (int n = 0; n < 3; ++n) {
        f.under.obj_map[n] = (2 * n) % 3;
        f.under.arr_map[n] = (2 * n) % 3;
    }
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) f.f2[x * 3 + y] = (2 * (x + y)) % 3;
    f.f0 = 0;
    CHECK(validate_monoidal_functor(f, s, s).empty());
}

TEST_CASE("twisted strong endofunctor validates") {
    SmcStructure tw = z2_twisted();
    MonFunctor f = twist_endo(tw);
    CHECK(validate_monoidal_functor(f, tw, tw).empty());
    CHECK(classify_strictness(f, tw, tw) == Strictness::strong);
}

TEST_CASE("monoidal nattrans validation on the idempotent monoid") {
    SmcStructure m = idem_monoid();
    MonFunctor idm = identity_mon_functor(m);
    MonNatTrans idt = identity_mon_nattrans(idm, m, m.base.n_obj);
    CHECK(validate_monoidal_nattrans(idt, idm, idm, m, m).empty());

    // component e is natural but fails the unit axiom: e∘F0 = e != id = G0
    MonNatTrans te;
    te.under.components = {1};
    Report r = validate_monoidal_nattrans(te, idm, idm, m, m);
    REQUIRE_FALSE(r.empty());
    CHECK(mentions(r, "monat-unit"));
    CHECK_FALSE(mentions(r, "monat-tensor"));
}

TEST_CASE("a transformation violating the tensor axiom names it") {
    SmcStructure tw = z2_twisted();
    MonFunctor idf = identity_mon_functor(tw);
    MonFunctor str = twist_endo(tw);
    // component t: id -> twist? naturality holds (abelian); check axioms
    MonNatTrans t;
    t.under.components = {1};
    Report r = validate_monoidal_nattrans(t, idf, str, tw, tw);
    // monat-unit: t∘id = t = F0' ✓; monat-tensor: t∘id vs t2∘(t⊗t): t vs t+t+t = t ✓
    CHECK(r.empty());
    // now the same component between identity and identity fails monat-tensor:
    // t∘id2 = t vs id2∘(t⊗t) = 0
    Report r2 = validate_monoidal_nattrans(t, idf, idf, tw, tw);
    REQUIRE_FALSE(r2.empty());
    CHECK(mentions(r2, "monat-tensor"));
}

TEST_CASE("compose_monoidal") {
    SmcStructure s = z2();
    MonFunctor idf = identity_mon_functor(s);
    MonFunctor c = compose_monoidal(idf, idf, s, s, s);
    CHECK(same_data(c, idf));
    CHECK(c.strictness == Strictness::strict);

    SmcStructure a = z3(), b = z2_twisted();
    MonFunctor k = constant_unit_functor(a, b);
    MonFunctor tw = twist_endo(b);
    MonFunctor tk = compose_monoidal(tw, k, a, b, b);
    CHECK(validate_monoidal_functor(tk, a, b).empty());
    CHECK(classify_strictness(tk, a, b) == Strictness::strong);
}

TEST_CASE("compose_monoidal is associative and unital on the nose") {
    SmcStructure b = z2_twisted();
    MonFunctor f = twist_endo(b);
    MonFunctor g = identity_mon_functor(b);
    MonFunctor fg = compose_monoidal(f, g, b, b, b);
    MonFunctor gf = compose_monoidal(g, f, b, b, b);
    CHECK(same_data(fg, f));
    CHECK(same_data(gf, f));
    MonFunctor left =
        compose_monoidal(compose_monoidal(f, f, b, b, b), f, b, b, b);
    MonFunctor right =
        compose_monoidal(f, compose_monoidal(f, f, b, b, b), b, b, b);
    CHECK(same_data(left, right));
}

TEST_CASE("product_smc validates and projections are strict") {
    ProductSmc p = product_smc(z2(), z3());
    CHECK(validate_smc(p.smc).empty());
    CHECK(p.smc.unit == p.prod.pair_obj(0, 0));
    // (1,2)⊗(1,1) = (0,0)
    CHECK(p.smc.ten(p.prod.pair_obj(1, 2), p.prod.pair_obj(1, 1)) ==
          p.prod.pair_obj(0, 0));
    CHECK(validate_monoidal_functor(p.p1, p.smc, z2()).empty());
    CHECK(validate_monoidal_functor(p.p2, p.smc, z3()).empty());
    CHECK(p.p1.strictness == Strictness::strict);

    ProductSmc q = product_smc(z2_twisted(), idem_monoid());
    CHECK(validate_smc(q.smc).empty());
    CHECK(validate_monoidal_functor(q.p1, q.smc, z2_twisted()).empty());
}

TEST_CASE("perturbing a product component breaks a strict projection") {
    SmcStructure tw = z2_twisted();
    ProductSmc p = product_smc(tw, tw);
    // overwrite one sym component with a non-projection-matching arrow
    ObjId o = p.prod.pair_obj(0, 0);
    ArrId orig = p.smc.s(o, o);
    ArrId other = p.prod.pair_arr(1, 0);
    REQUIRE(orig != other);
    p.smc.s_at(o, o) = other;
    bool still_smc = validate_smc(p.smc).empty();
    bool proj_ok =
        p.prod.p1.arr(p.smc.s(o, o)) == tw.s(0, 0) &&
        p.prod.p2.arr(p.smc.s(o, o)) == tw.s(0, 0);
    CHECK((!still_smc || !proj_ok));
}

TEST_CASE("pairing recovers its factors through the projections") {
    SmcStructure a = z3();
    ProductSmc p = product_smc(z3(), z3());
    MonFunctor idf = identity_mon_functor(a);
    MonFunctor d = pairing(idf, idf, a, p);
    CHECK(validate_monoidal_functor(d, a, p.smc).empty());
    CHECK(d.strictness == Strictness::strict);
    MonFunctor back1 = compose_monoidal(p.p1, d, a, p.smc, a);
    CHECK(same_data(back1, idf));
    MonFunctor back2 = compose_monoidal(p.p2, d, a, p.smc, a);
    CHECK(same_data(back2, idf));
}

TEST_CASE("ten_as_functor validates on corpus structures") {
    for (const auto& s : {terminal_smc(), z2(), idem_monoid(), z2_twisted()}) {
        ProductSmc ss = product_smc(s, s);
        MonFunctor t = ten_as_functor(s, ss);
        CHECK(validate_monoidal_functor(t, ss.smc, s).empty());
    }
    // strict case: on Z2 the structure arrows are identities
    SmcStructure s = z2();
    ProductSmc ss = product_smc(s, s);
    MonFunctor t = ten_as_functor(s, ss);
    CHECK(classify_strictness(t, ss.smc, s) == Strictness::strict);
}

TEST_CASE("canonical structure arrows are monoidal 2-cells of the tensor") {
    // a, r, l, s as transformations between tensor composites, checked
    // pointwise through their defining property: validate_smc already
    // asserts their naturality; here we recheck monoidality data via
    // check_f2_f0_monoidal on corpus functors.
    SmcStructure tw = z2_twisted();
    CHECK(check_f2_f0_monoidal(twist_endo(tw), tw, tw).empty());
}

TEST_CASE("check_f2_f0_monoidal is empty for valid corpus functors") {
    SmcStructure s3 = z3();
    CHECK(check_f2_f0_monoidal(identity_mon_functor(s3), s3, s3).empty());

    MonFunctor dbl = identity_mon_functor(s3);
    for (int n = 0; n < 3; ++n) {
        dbl.under.obj_map[n] = (2 * n) % 3;
        dbl.under.arr_map[n] = (2 * n) % 3;
    }
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) dbl.f2[x * 3 + y] = (2 * (x + y)) % 3;
    CHECK(check_f2_f0_monoidal(dbl, s3, s3).empty());

    SmcStructure a = z2();
    CHECK(check_f2_f0_monoidal(constant_unit_functor(a, a), a, a).empty());
}

TEST_CASE("middle_four and unit_split are identities on strict structures") {
    SmcStructure s = z2();
    CHECK(middle_four(s, 0, 1, 1, 0) == s.base.id(0));
    CHECK(unit_split(s) == s.base.id(0));
    SmcStructure tw = z2_twisted();
    CHECK(unit_split(tw) == 1); // r_I = t, so r_I⁻¹ = t
}
