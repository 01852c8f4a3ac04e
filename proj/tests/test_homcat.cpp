#include <catch2/catch_amalgamated.hpp>

#include "oracle_enum.hpp"
#include "smckit/fixtures.hpp"
#include "smckit/homcat.hpp"

using namespace smck;
using namespace smck::fixtures;

TEST_CASE("enumeration counts match the brute-force oracle") {
    struct Case {
        SmcStructure a, b;
        size_t functors;
    };
    // expected values computed by oracle::all_functors (frozen)
    Case cases[] = {
        {terminal_smc(), z2(), 1}, {z2(), z2(), 2},
        {z2(), terminal_smc(), 1}, {z3(), terminal_smc(), 1},
        {idem_monoid(), terminal_smc(), 1}, {idem_monoid(), idem_monoid(), 2},
        {z3(), z3(), 3}, {z2(), z2_twisted(), 4},
    };
    for (const auto& c : cases) {
        auto fs = enumerate_smc_functors(c.a, c.b);
        CHECK(fs.size() == c.functors);
        CHECK(fs.size() == oracle::all_functors(c.a, c.b).size());
        for (const auto& f : fs)
            CHECK(validate_monoidal_functor(f, c.a, c.b).empty());
        // duplicate-free
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j)
                CHECK_FALSE(same_data(fs[i], fs[j]));
    }
}

TEST_CASE("transformation enumeration matches the oracle") {
    SmcStructure a = idem_monoid();
    auto fs = enumerate_smc_functors(a, a);
    REQUIRE(fs.size() == 2);
    auto raw = oracle::all_functors(a, a);
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = 0; j < fs.size(); ++j) {
            auto ts = enumerate_monoidal_nattrans(fs[i], fs[j], a, a);
            // find matching raw functors
            int ri = -1, rj = -1;
            for (size_t k = 0; k < raw.size(); ++k) {
                if (raw[k].arr == fs[i].under.arr_map && raw[k].f0 == fs[i].f0)
                    ri = static_cast<int>(k);
                if (raw[k].arr == fs[j].under.arr_map && raw[k].f0 == fs[j].f0)
                    rj = static_cast<int>(k);
            }
            REQUIRE(ri >= 0);
            REQUIRE(rj >= 0);
            CHECK(static_cast<int>(ts.size()) ==
                  oracle::count_trans(a, a, raw[ri], raw[rj]));
        }
}

TEST_CASE("identity vs constant on Z2 has no connecting transformation") {
    SmcStructure s = z2();
    auto fs = enumerate_smc_functors(s, s);
    REQUIRE(fs.size() == 2);
    int idf = -1, cst = -1;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].under.obj_map == std::vector<ObjId>{0, 1})
            idf = static_cast<int>(i);
        if (fs[i].under.obj_map == std::vector<ObjId>{0, 0})
            cst = static_cast<int>(i);
    }
    REQUIRE(idf >= 0);
    REQUIRE(cst >= 0);
    CHECK(enumerate_monoidal_nattrans(fs[idf], fs[cst], s, s).empty());
    CHECK(enumerate_monoidal_nattrans(fs[idf], fs[idf], s, s).size() == 1);
}

TEST_CASE("hom structures validate and are pointwise") {
    for (auto [a, b] : {std::pair{terminal_smc(), z2()},
                        std::pair{z2(), z2()},
                        std::pair{idem_monoid(), idem_monoid()},
                        std::pair{z3(), z3()},
                        std::pair{z2(), z2_twisted()}}) {
        HomSmc h = build_hom_smc(a, b);
        CHECK(validate_smc(h.smc).empty());
        const int nf = static_cast<int>(h.functors.size());
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j < nf; ++j) {
                int bx = h.smc.ten(i, j);
                for (ObjId x = 0; x < a.base.n_obj; ++x) {
                    CHECK(h.functors[bx].obj(x) ==
                          b.ten(h.functors[i].obj(x), h.functors[j].obj(x)));
                    // pointwise symmetry components
                    CHECK(h.transs[h.smc.s(i, j)].t.at(x) ==
                          b.s(h.functors[i].obj(x), h.functors[j].obj(x)));
                }
            }
    }
}

TEST_CASE("hom of anything into the terminal structure is terminal") {
    for (const auto& a : {z2(), z3(), idem_monoid(), z2_x_z3()}) {
        HomSmc h = build_hom_smc(a, terminal_smc());
        CHECK(h.functors.size() == 1);
        CHECK(h.transs.size() == 1);
    }
}

TEST_CASE("[Z2,Z2] is the discrete two-object structure") {
    HomSmc h = build_hom_smc(z2(), z2());
    CHECK(h.functors.size() == 2);
    CHECK(h.transs.size() == 2);
    CHECK(hom_is_discrete(h));
    // unit is the constant-0 functor; box is pointwise xor
    CHECK(h.functors[h.smc.unit].obj(1) == 0);
}

TEST_CASE("ev is strict and jointly faithful") {
    SmcStructure a = idem_monoid(), b = idem_monoid();
    HomSmc h = build_hom_smc(a, b);
    for (ObjId x = 0; x < a.base.n_obj; ++x) {
        MonFunctor e = ev_at(h, x);
        CHECK(validate_monoidal_functor(e, h.smc, b).empty());
        CHECK(e.strictness == Strictness::strict);
    }
    // joint faithfulness: distinct arrows differ under some ev
    for (size_t t1 = 0; t1 < h.transs.size(); ++t1)
        for (size_t t2 = 0; t2 < h.transs.size(); ++t2) {
            if (h.transs[t1].src != h.transs[t2].src ||
                h.transs[t1].dst != h.transs[t2].dst || t1 == t2)
                continue;
            bool separated = false;
            for (ObjId x = 0; x < a.base.n_obj; ++x)
                if (h.transs[t1].t.at(x) != h.transs[t2].t.at(x))
                    separated = true;
            CHECK(separated);
        }
}

TEST_CASE("ev on [1t,Z2] picks out the unit value") {
    HomSmc h = build_hom_smc(terminal_smc(), z2());
    MonFunctor e = ev_at(h, 0);
    CHECK(e.obj(0) == 0);
}

TEST_CASE("ev_1 on [Z2,Z2] applied to the identity functor gives 1") {
    HomSmc h = build_hom_smc(z2(), z2());
    MonFunctor e = ev_at(h, 1);
    int idf = -1;
    for (size_t i = 0; i < h.functors.size(); ++i)
        if (h.functors[i].under.obj_map == std::vector<ObjId>{0, 1})
            idf = static_cast<int>(i);
    REQUIRE(idf >= 0);
    CHECK(e.obj(idf) == 1);
}

TEST_CASE("q embeds Z2 into the double hom") {
    SmcStructure a = z2();
    HomSmc hab = build_hom_smc(a, a);
    HomSmc hh = build_hom_smc(hab.smc, a);
    MonFunctor q = q_embed(a, hab, hh);
    CHECK(validate_monoidal_functor(q, a, hh.smc).empty());
    CHECK(q.obj(0) != q.obj(1)); // q(0), q(1) distinct strict functors
    // q(x) = ev_x identifier-exactly
    for (ObjId x = 0; x < a.base.n_obj; ++x)
        CHECK(q.obj(x) == hh.functor_index(ev_at(hab, x), "test"));
}

TEST_CASE("double hom cap rejects non-discrete first homs") {
    SmcStructure tw = z2_twisted();
    HomSmc h = build_hom_smc(z2(), tw); // 4 objects, 16 arrows: not discrete
    HomSmc dummy = build_hom_smc(z2(), z2());
    CHECK_FALSE(hom_is_discrete(h));
    CHECK_THROWS_AS(q_embed(z2(), h, dummy), CapError);
}

TEST_CASE("hom_map via both routes, identities and strictness") {
    SmcStructure s = z2();
    HomSmc h = build_hom_smc(s, s);
    HomMapContext ctx{s, s, s, s, h, h, h, h};
    MonFunctor idf = identity_mon_functor(s);

    MonFunctor hm = hom_map(idf, idf, ctx);
    CHECK(same_data(hm, identity_mon_functor(h.smc)));

    // [f, id] is strict for any f: take f = constant-to-unit
    MonFunctor k = constant_unit_functor(s, s);
    MonFunctor pre = precompose_hom(k, s, s, s, h, h);
    CHECK(pre.strictness == Strictness::strict);
    CHECK(validate_monoidal_functor(pre, h.smc, h.smc).empty());

    // image of the identity functor under [const-0, id] is the constant
    int idobj = -1;
    for (size_t i = 0; i < h.functors.size(); ++i)
        if (h.functors[i].under.obj_map == std::vector<ObjId>{0, 1})
            idobj = static_cast<int>(i);
    REQUIRE(idobj >= 0);
    MonFunctor m = hom_map(k, idf, ctx);
    CHECK(m.obj(idobj) == h.smc.unit);
}

TEST_CASE("hom_map functoriality on the twisted corpus") {
    SmcStructure tw = z2_twisted();
    HomSmc h = build_hom_smc(tw, tw);
    HomMapContext ctx{tw, tw, tw, tw, h, h, h, h};
    MonFunctor idf = identity_mon_functor(tw);
    MonFunctor str = twist_endo(tw);

    MonFunctor m1 = hom_map(str, idf, ctx);
    MonFunctor m2 = hom_map(idf, str, ctx);
    CHECK(validate_monoidal_functor(m1, h.smc, h.smc).empty());
    CHECK(validate_monoidal_functor(m2, h.smc, h.smc).empty());

    // preserves composition: [str∘str, id] = [str,id]∘[str,id]
    MonFunctor ss = compose_monoidal(str, str, tw, tw, tw);
    MonFunctor lhs = hom_map(ss, idf, ctx);
    MonFunctor rhs = compose_monoidal(hom_map(str, idf, ctx),
                                      hom_map(str, idf, ctx), h.smc, h.smc,
                                      h.smc);
    CHECK(same_data(lhs, rhs));
}

TEST_CASE("hom_map_2cell pastings agree") {
    SmcStructure tw = z2_twisted();
    HomSmc h = build_hom_smc(tw, tw);
    HomMapContext ctx{tw, tw, tw, tw, h, h, h, h};
    MonFunctor idf = identity_mon_functor(tw);
    MonFunctor str = twist_endo(tw);
    // the nontrivial monoidal 2-cell id -> str with component t
    MonNatTrans sig;
    sig.under.components = {1};
    REQUIRE(validate_monoidal_nattrans(sig, idf, str, tw, tw).empty());
    MonNatTrans idt = identity_mon_nattrans(idf, tw, tw.base.n_obj);

    MonNatTrans cell =
        hom_map_2cell(sig, idf, str, idt, idf, idf, ctx);
    MonFunctor dom_f = hom_map(idf, idf, ctx);
    MonFunctor cod_f = hom_map(str, idf, ctx);
    CHECK(validate_monoidal_nattrans(cell, dom_f, cod_f, h.smc, h.smc)
              .empty());

    // identities map to the identity 2-cell
    MonNatTrans idcell =
        hom_map_2cell(idt, idf, idf, idt, idf, idf, ctx);
    CHECK(idcell.under.components ==
          identity_mon_nattrans(identity_mon_functor(h.smc), h.smc,
                                h.smc.base.n_obj)
              .under.components);
}

TEST_CASE("ev commutes with postcomposition (corpus instances)") {
    SmcStructure tw = z2_twisted();
    HomSmc h = build_hom_smc(tw, tw);
    MonFunctor g = twist_endo(tw);
    MonFunctor ag = postcompose_hom(g, tw, tw, tw, h, h);
    for (ObjId x = 0; x < tw.base.n_obj; ++x) {
        MonFunctor lhs =
            compose_monoidal(ev_at(h, x), ag, h.smc, h.smc, tw);
        MonFunctor rhs = compose_monoidal(g, ev_at(h, x), h.smc, tw, tw);
        CHECK(same_data(lhs, rhs));
    }
}

TEST_CASE("enumeration cap triggers on oversized searches") {
    // [Z3disc -> Z3mon] has 27 functors/729 transformations; building the
    // hom FinCat would exceed the arrow cap.
    CHECK_THROWS_AS(build_hom_smc(z3(), z3_monoid()), Error);
}
