#ifndef SMCKIT_DUALITY_HPP
#define SMCKIT_DUALITY_HPP

#include "smckit/homcat.hpp"

namespace smck {

/// The three categories and both realized nested homs needed to swap
/// argument order: f ranges over [a,[b,c]], its dual over [b,[a,c]].
struct DualityContext {
    const SmcStructure& a;
    const SmcStructure& b;
    const SmcStructure& c;
    const HomSmc& hom_bc;     // [b,c]
    const HomSmc& hom_ac;     // [a,c]
    const HomSmc& hom_a_bc;   // [a,[b,c]]
    const HomSmc& hom_b_ac;   // [b,[a,c]]
};

/// Componentwise dualization of F: a -> [b,c] into F*: b -> [a,c]:
/// (F* b)(x) = F(x)(b) with the index-swapped structure arrows.
inline MonFunctor dualize_functor(const MonFunctor& f,
                                  const DualityContext& ctx) {
    const int nao = ctx.a.base.n_obj;
    const int nbo = ctx.b.base.n_obj;
    MonFunctor out;
    out.under.obj_map.resize(nbo);
    out.under.arr_map.resize(ctx.b.base.n_arr());

    auto hom_functor_of = [&](ObjId x) -> const MonFunctor& {
        return ctx.hom_bc.functors[f.obj(x)];
    };

    // F*(y): a -> c for each object y of b
    for (ObjId y = 0; y < nbo; ++y) {
        MonFunctor fy;
        fy.under.obj_map.resize(nao);
        fy.under.arr_map.resize(ctx.a.base.n_arr());
        for (ObjId x = 0; x < nao; ++x)
            fy.under.obj_map[x] = hom_functor_of(x).obj(y);
        for (ArrId p = 0; p < ctx.a.base.n_arr(); ++p)
            fy.under.arr_map[p] = ctx.hom_bc.transs[f.arr(p)].t.at(y);
        fy.f0 = ctx.hom_bc.transs[f.f0].t.at(y);
        fy.f2.resize(static_cast<size_t>(nao) * nao);
        for (ObjId x = 0; x < nao; ++x)
            for (ObjId x2 = 0; x2 < nao; ++x2)
                fy.f2[x * nao + x2] =
                    ctx.hom_bc.transs[f.f2_at(x, x2, nao)].t.at(y);
        fy.strictness = classify_strictness(fy, ctx.a, ctx.c);
        out.under.obj_map[y] = ctx.hom_ac.functor_index(fy, "dual object");
    }
    // F*(g) for arrows g of b: components (F x)(g)
    for (ArrId g = 0; g < ctx.b.base.n_arr(); ++g) {
        std::vector<ArrId> comps(nao);
        for (ObjId x = 0; x < nao; ++x)
            comps[x] = hom_functor_of(x).arr(g);
        out.under.arr_map[g] = ctx.hom_ac.trans_index(
            out.under.obj_map[ctx.b.base.dom(g)],
            out.under.obj_map[ctx.b.base.cod(g)], comps, "dual arrow");
    }
    // (F*)0 at y has component (F x)0 at each x
    {
        std::vector<ArrId> comps(nao);
        for (ObjId x = 0; x < nao; ++x) comps[x] = hom_functor_of(x).f0;
        out.f0 = ctx.hom_ac.trans_index(ctx.hom_ac.smc.unit,
                                        out.under.obj_map[ctx.b.unit], comps,
                                        "dual f0");
    }
    // (F*)2_{y,y'} has component (F x)2_{y,y'}
    out.f2.resize(static_cast<size_t>(nbo) * nbo);
    for (ObjId y = 0; y < nbo; ++y)
        for (ObjId y2 = 0; y2 < nbo; ++y2) {
            std::vector<ArrId> comps(nao);
            for (ObjId x = 0; x < nao; ++x)
                comps[x] = hom_functor_of(x).f2_at(y, y2, nbo);
            out.f2[y * nbo + y2] = ctx.hom_ac.trans_index(
                ctx.hom_ac.smc.ten(out.under.obj_map[y],
                                   out.under.obj_map[y2]),
                out.under.obj_map[ctx.b.ten(y, y2)], comps, "dual f2");
        }
    out.strictness = classify_strictness(out, ctx.b, ctx.hom_ac.smc);
    return out;
}

/// (θ*_y)_x = (θ_x)_y.
inline MonNatTrans dualize_nattrans(const MonNatTrans& theta,
                                    const MonFunctor& f, const MonFunctor& g,
                                    const DualityContext& ctx) {
    const int nao = ctx.a.base.n_obj;
    const int nbo = ctx.b.base.n_obj;
    MonFunctor fd = dualize_functor(f, ctx);
    MonFunctor gd = dualize_functor(g, ctx);
    MonNatTrans out;
    out.under.components.resize(nbo);
    for (ObjId y = 0; y < nbo; ++y) {
        std::vector<ArrId> comps(nao);
        for (ObjId x = 0; x < nao; ++x)
            comps[x] = ctx.hom_bc.transs[theta.at(x)].t.at(y);
        out.under.components[y] = ctx.hom_ac.trans_index(
            fd.obj(y), gd.obj(y), comps, "dual 2-cell");
    }
    return out;
}

/// The swapped context used for the inverse direction.
inline DualityContext swapped(const DualityContext& ctx) {
    return DualityContext{ctx.b, ctx.a, ctx.c, ctx.hom_ac, ctx.hom_bc,
                          ctx.hom_b_ac, ctx.hom_a_bc};
}

} // namespace smck

#endif
