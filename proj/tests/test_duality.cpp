#include <catch2/catch_amalgamated.hpp>

#include "smckit/duality.hpp"
#include "smckit/fixtures.hpp"

using namespace smck;
using namespace smck::fixtures;

namespace {

struct Homs {
    SmcStructure a, b, c;
    HomSmc hom_bc, hom_ac, hom_a_bc, hom_b_ac;
    Homs(SmcStructure a_, SmcStructure b_, SmcStructure c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
          hom_bc(build_hom_smc(b, c)), hom_ac(build_hom_smc(a, c)),
          hom_a_bc(build_hom_smc(a, hom_bc.smc)),
          hom_b_ac(build_hom_smc(b, hom_ac.smc)) {}
    DualityContext ctx() const {
        return DualityContext{a, b, c, hom_bc, hom_ac, hom_a_bc, hom_b_ac};
    }
};

} // namespace

TEST_CASE("duality on (Z2,Z2,Z2): involution, box and unit preserved") {
    Homs h(z2(), z2(), z2());
    DualityContext ctx = h.ctx();
    DualityContext cxs = swapped(ctx);
    const HomSmc& dom = h.hom_a_bc;

    for (size_t i = 0; i < dom.functors.size(); ++i) {
        MonFunctor d = dualize_functor(dom.functors[i], ctx);
        CHECK(validate_monoidal_functor(d, h.b, h.hom_ac.smc).empty());
        MonFunctor dd = dualize_functor(d, cxs);
        CHECK(same_data(dd, dom.functors[i])); // field-by-field involution
    }
    // unit functor dualizes to the unit functor
    MonFunctor du = dualize_functor(dom.functors[dom.smc.unit], ctx);
    CHECK(h.hom_b_ac.find_functor(du) == h.hom_b_ac.smc.unit);

    // D respects the pointwise tensor strictly
    for (size_t i = 0; i < dom.functors.size(); ++i)
        for (size_t j = 0; j < dom.functors.size(); ++j) {
            MonFunctor bx = box_functor(dom.functors[i], dom.functors[j],
                                        h.a, h.hom_bc.smc);
            MonFunctor lhs = dualize_functor(bx, ctx);
            MonFunctor rhs = box_functor(dualize_functor(dom.functors[i], ctx),
                                         dualize_functor(dom.functors[j], ctx),
                                         h.b, h.hom_ac.smc);
            CHECK(same_data(lhs, rhs));
        }
}

TEST_CASE("dual of q-like functor agrees with evaluation swap (brute force)") {
    Homs h(z2(), z2(), z2());
    DualityContext ctx = h.ctx();
    for (const auto& f : h.hom_a_bc.functors) {
        MonFunctor d = dualize_functor(f, ctx);
        for (ObjId x = 0; x < 2; ++x)
            for (ObjId y = 0; y < 2; ++y) {
                // F(x)(y) computed two ways
                ObjId via_f = h.hom_bc.functors[f.obj(x)].obj(y);
                ObjId via_d = h.hom_ac.functors[d.obj(y)].obj(x);
                CHECK(via_f == via_d);
            }
    }
}

TEST_CASE("dualize_nattrans swaps components and is an involution") {
    // use the idempotent monoid where nontrivial transformations exist in
    // [b,c]; triple (M,M,M) keeps double homs within caps
    Homs h(idem_monoid(), idem_monoid(), idem_monoid());
    DualityContext ctx = h.ctx();
    DualityContext cxs = swapped(ctx);
    const HomSmc& dom = h.hom_a_bc;
    for (const auto& tr : dom.transs) {
        const MonFunctor& f = dom.functors[tr.src];
        const MonFunctor& g = dom.functors[tr.dst];
        MonNatTrans d = dualize_nattrans(tr.t, f, g, ctx);
        MonFunctor fd = dualize_functor(f, ctx);
        MonFunctor gd = dualize_functor(g, ctx);
        CHECK(validate_monoidal_nattrans(d, fd, gd, h.b, h.hom_ac.smc)
                  .empty());
        // component swap law on all index pairs
        for (ObjId x = 0; x < h.a.base.n_obj; ++x)
            for (ObjId y = 0; y < h.b.base.n_obj; ++y)
                CHECK(h.hom_bc.transs[tr.t.at(x)].t.at(y) ==
                      h.hom_ac.transs[d.at(y)].t.at(x));
        MonNatTrans dd = dualize_nattrans(d, fd, gd, cxs);
        CHECK(dd.under.components == tr.t.under.components);
    }
}

TEST_CASE("strictness transfers pointwise") {
    Homs h(z2(), z2(), z2());
    DualityContext ctx = h.ctx();
    for (const auto& f : h.hom_a_bc.functors) {
        MonFunctor d = dualize_functor(f, ctx);
        bool all_strict = true;
        for (ObjId y = 0; y < h.b.base.n_obj; ++y) {
            const MonFunctor& dy = h.hom_ac.functors[d.obj(y)];
            all_strict =
                all_strict &&
                classify_strictness(dy, h.a, h.c) == Strictness::strict;
        }
        CHECK((classify_strictness(f, h.a, h.hom_bc.smc) ==
               Strictness::strict) == all_strict);
    }
}

TEST_CASE("ev after D equals postcomposed ev (evaluation-swap law)") {
    Homs h(z2(), z2(), z2());
    DualityContext ctx = h.ctx();
    for (ObjId at = 0; at < h.a.base.n_obj; ++at) {
        MonFunctor eva = ev_at(h.hom_a_bc, at); // [a,[b,c]] -> [b,c]
        MonFunctor post =
            postcompose_hom(ev_at(h.hom_ac, at), h.b, h.hom_ac.smc, h.c,
                            h.hom_b_ac, h.hom_bc);
        // for every object F of [a,[b,c]]: ev_at(F) = post(D F)
        for (size_t i = 0; i < h.hom_a_bc.functors.size(); ++i) {
            MonFunctor d = dualize_functor(h.hom_a_bc.functors[i], ctx);
            int di = h.hom_b_ac.find_functor(d);
            REQUIRE(di >= 0);
            CHECK(eva.obj(static_cast<int>(i)) == post.obj(di));
        }
    }
}
