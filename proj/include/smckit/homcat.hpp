#ifndef SMCKIT_HOMCAT_HPP
#define SMCKIT_HOMCAT_HPP

#include <cstdint>

#include "smckit/monoidal.hpp"

namespace smck {

constexpr std::int64_t kEnumBudget = 1'000'000;

namespace detail {

/// Odometer over per-slot candidate lists; calls fn for each complete
/// assignment, charging one budget unit per assignment.
template <typename Fn>
void for_each_assignment(const std::vector<std::vector<int>>& cands,
                         std::int64_t& budget, Fn&& fn) {
    for (const auto& c : cands)
        if (c.empty()) return;
    std::vector<size_t> idx(cands.size(), 0);
    while (true) {
        if (--budget < 0)
            throw CapError("enumeration search space exceeds the cap");
        std::vector<int> pick(cands.size());
        for (size_t i = 0; i < cands.size(); ++i) pick[i] = cands[i][idx[i]];
        fn(pick);
        size_t k = cands.size();
        while (k > 0 && idx[k - 1] + 1 == cands[k - 1].size()) idx[--k] = 0;
        if (k == 0) break;
        ++idx[k - 1];
    }
}

inline std::vector<int> arrows_between(const FinCat& c, ObjId x, ObjId y) {
    std::vector<int> out;
    for (ArrId f = 0; f < c.n_arr(); ++f)
        if (c.dom(f) == x && c.cod(f) == y) out.push_back(f);
    return out;
}

} // namespace detail

/// Complete, duplicate-free list of the symmetric monoidal functors
/// a -> b, in lexicographic (object map, arrow map, f0, f2) order.
inline std::vector<MonFunctor> enumerate_smc_functors(const SmcStructure& a,
                                                      const SmcStructure& b) {
    std::vector<MonFunctor> out;
    const FinCat& ca = a.base;
    const FinCat& cb = b.base;
    const int no = ca.n_obj;
    std::int64_t budget = kEnumBudget;

    std::vector<ObjId> obj(no, 0);
    std::vector<ArrId> non_id;
    for (ArrId f = 0; f < ca.n_arr(); ++f)
        if (!is_identity(ca, f)) non_id.push_back(f);

    while (true) {
        // arrow candidates constrained by endpoints
        std::vector<std::vector<int>> arr_c(non_id.size());
        for (size_t i = 0; i < non_id.size(); ++i)
            arr_c[i] = detail::arrows_between(cb, obj[ca.dom(non_id[i])],
                                              obj[ca.cod(non_id[i])]);
        detail::for_each_assignment(arr_c, budget, [&](const std::vector<int>&
                                                           arr_pick) {
            FunctorData u;
            u.obj_map = obj;
            u.arr_map.assign(ca.n_arr(), -1);
            for (ObjId x = 0; x < no; ++x)
                u.arr_map[ca.id(x)] = cb.id(obj[x]);
            for (size_t i = 0; i < non_id.size(); ++i)
                u.arr_map[non_id[i]] = arr_pick[i];
            if (!validate_functor(u, ca, cb).empty()) return;

            std::vector<int> f0_c =
                detail::arrows_between(cb, b.unit, obj[a.unit]);
            std::vector<std::vector<int>> f2_c(no * no);
            for (ObjId x = 0; x < no; ++x)
                for (ObjId y = 0; y < no; ++y)
                    f2_c[x * no + y] = detail::arrows_between(
                        cb, b.ten(obj[x], obj[y]), obj[a.ten(x, y)]);
            for (int f0 : f0_c) {
                detail::for_each_assignment(
                    f2_c, budget, [&](const std::vector<int>& f2_pick) {
                        MonFunctor f;
                        f.under = u;
                        f.f0 = f0;
                        f.f2.assign(f2_pick.begin(), f2_pick.end());
                        if (!validate_monoidal_functor(f, a, b).empty())
                            return;
                        f.strictness = classify_strictness(f, a, b);
                        out.push_back(std::move(f));
                    });
            }
        });
        int k = no - 1;
        while (k >= 0 && obj[k] == cb.n_obj - 1) obj[k--] = 0;
        if (k < 0) break;
        ++obj[k];
    }
    return out;
}

/// All monoidal natural transformations f -> g, lexicographic in the
/// component tuple.
inline std::vector<MonNatTrans> enumerate_monoidal_nattrans(
    const MonFunctor& f, const MonFunctor& g, const SmcStructure& a,
    const SmcStructure& b) {
    std::vector<MonNatTrans> out;
    const int no = a.base.n_obj;
    std::int64_t budget = kEnumBudget;
    std::vector<std::vector<int>> cands(no);
    for (ObjId x = 0; x < no; ++x)
        cands[x] = detail::arrows_between(b.base, f.obj(x), g.obj(x));
    detail::for_each_assignment(cands, budget,
                                [&](const std::vector<int>& pick) {
                                    MonNatTrans t;
                                    t.under.components.assign(pick.begin(),
                                                              pick.end());
                                    if (validate_monoidal_nattrans(t, f, g, a,
                                                                   b)
                                            .empty())
                                        out.push_back(std::move(t));
                                });
    return out;
}

/// The internal hom [a,b] realized on the enumerated functors and
/// transformations, with the pointwise symmetric monoidal structure.
struct HomSmc {
    SmcStructure a;
    SmcStructure b;
    std::vector<MonFunctor> functors;
    struct TransArrow {
        int src;
        int dst;
        MonNatTrans t;
    };
    std::vector<TransArrow> transs;
    SmcStructure smc;

    int find_functor(const MonFunctor& f) const {
        for (size_t i = 0; i < functors.size(); ++i)
            if (same_data(functors[i], f)) return static_cast<int>(i);
        return -1;
    }
    int functor_index(const MonFunctor& f, const char* who) const {
        int i = find_functor(f);
        if (i < 0) throw Error(cat(who, ": functor not in the enumeration"));
        return i;
    }
    int find_trans(int src, int dst, const std::vector<ArrId>& comps) const {
        for (size_t i = 0; i < transs.size(); ++i)
            if (transs[i].src == src && transs[i].dst == dst &&
                transs[i].t.under.components == comps)
                return static_cast<int>(i);
        return -1;
    }
    int trans_index(int src, int dst, const std::vector<ArrId>& comps,
                    const char* who) const {
        int i = find_trans(src, dst, comps);
        if (i < 0)
            throw Error(cat(who, ": transformation not in the enumeration"));
        return i;
    }
};

/// Pointwise tensor of functors: (F□G)(x) = F(x)⊗G(x), with the
/// canonical strong structure.
inline MonFunctor box_functor(const MonFunctor& f, const MonFunctor& g,
                              const SmcStructure& a, const SmcStructure& b) {
    MonFunctor h;
    const int no = a.base.n_obj;
    h.under.obj_map.resize(no);
    h.under.arr_map.resize(a.base.n_arr());
    for (ObjId x = 0; x < no; ++x)
        h.under.obj_map[x] = b.ten(f.obj(x), g.obj(x));
    for (ArrId p = 0; p < a.base.n_arr(); ++p)
        h.under.arr_map[p] = b.ten_arr(f.arr(p), g.arr(p));
    h.f0 = b.base.comp_at(b.ten_arr(f.f0, g.f0), unit_split(b));
    h.f2.resize(static_cast<size_t>(no) * no);
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            h.f2[x * no + y] = b.base.comp_at(
                b.ten_arr(f.f2_at(x, y, no), g.f2_at(x, y, no)),
                middle_four(b, f.obj(x), g.obj(x), f.obj(y), g.obj(y)));
    h.strictness = classify_strictness(h, a, b);
    return h;
}

inline HomSmc build_hom_smc(const SmcStructure& a, const SmcStructure& b) {
    HomSmc h;
    h.a = a;
    h.b = b;
    h.functors = enumerate_smc_functors(a, b);
    const int nf = static_cast<int>(h.functors.size());
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            for (auto& t :
                 enumerate_monoidal_nattrans(h.functors[i], h.functors[j], a,
                                             b))
                h.transs.push_back(HomSmc::TransArrow{i, j, t});

    FinCat base = make_fincat(nf, static_cast<int>(h.transs.size()));
    for (int t = 0; t < base.n_arr(); ++t)
        base.arrows[t] = Arrow{t, h.transs[t].src, h.transs[t].dst};
    const int no = a.base.n_obj;
    for (int i = 0; i < nf; ++i) {
        std::vector<ArrId> idc(no);
        for (ObjId x = 0; x < no; ++x)
            idc[x] = b.base.id(h.functors[i].obj(x));
        int idt = -1;
        for (size_t t = 0; t < h.transs.size(); ++t)
            if (h.transs[t].src == i && h.transs[t].dst == i &&
                h.transs[t].t.under.components == idc)
                idt = static_cast<int>(t);
        if (idt < 0) throw Error("hom: identity transformation missing");
        base.identity[i] = idt;
    }
    for (int t2 = 0; t2 < base.n_arr(); ++t2)
        for (int t1 = 0; t1 < base.n_arr(); ++t1) {
            if (h.transs[t1].dst != h.transs[t2].src) continue;
            std::vector<ArrId> comps(no);
            for (ObjId x = 0; x < no; ++x)
                comps[x] = b.base.comp_at(h.transs[t2].t.at(x),
                                          h.transs[t1].t.at(x));
            int found = -1;
            for (size_t t = 0; t < h.transs.size(); ++t)
                if (h.transs[t].src == h.transs[t1].src &&
                    h.transs[t].dst == h.transs[t2].dst &&
                    h.transs[t].t.under.components == comps)
                    found = static_cast<int>(t);
            if (found < 0)
                throw Error("hom: composite transformation missing");
            base.comp_at(t2, t1) = found;
        }

    h.smc = make_smc(std::move(base));
    SmcStructure& s = h.smc;
    s.unit = h.functor_index(constant_unit_functor(a, b), "hom unit");
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            s.tensor_obj[i * nf + j] = h.functor_index(
                box_functor(h.functors[i], h.functors[j], a, b), "hom tensor");
    auto pointwise = [&](int src, int dst,
                         const std::vector<ArrId>& comps) -> ArrId {
        return h.trans_index(src, dst, comps, "hom canonical");
    };
    for (int i = 0; i < nf; ++i) {
        std::vector<ArrId> lc(no), rc(no);
        for (ObjId x = 0; x < no; ++x) {
            lc[x] = b.l(h.functors[i].obj(x));
            rc[x] = b.r(h.functors[i].obj(x));
        }
        s.lunit[i] = pointwise(s.tensor_obj[s.unit * nf + i], i, lc);
        s.runit[i] = pointwise(s.tensor_obj[i * nf + s.unit], i, rc);
        for (int j = 0; j < nf; ++j) {
            std::vector<ArrId> sc(no);
            for (ObjId x = 0; x < no; ++x)
                sc[x] = b.s(h.functors[i].obj(x), h.functors[j].obj(x));
            s.sym[i * nf + j] =
                pointwise(s.tensor_obj[i * nf + j], s.tensor_obj[j * nf + i],
                          sc);
            for (int k = 0; k < nf; ++k) {
                std::vector<ArrId> ac(no);
                for (ObjId x = 0; x < no; ++x)
                    ac[x] = b.a(h.functors[i].obj(x), h.functors[j].obj(x),
                                h.functors[k].obj(x));
                s.a(i, j, k) = pointwise(
                    s.tensor_obj[i * nf + s.tensor_obj[j * nf + k]],
                    s.tensor_obj[s.tensor_obj[i * nf + j] * nf + k], ac);
            }
        }
    }
    // tensor of transformations: (σ□τ)_x = σ_x ⊗ τ_x
    const int nt = s.base.n_arr();
    for (int t1 = 0; t1 < nt; ++t1)
        for (int t2 = 0; t2 < nt; ++t2) {
            std::vector<ArrId> comps(no);
            for (ObjId x = 0; x < no; ++x)
                comps[x] =
                    b.ten_arr(h.transs[t1].t.at(x), h.transs[t2].t.at(x));
            s.tensor_arr[t1 * nt + t2] = pointwise(
                s.tensor_obj[h.transs[t1].src * nf + h.transs[t2].src],
                s.tensor_obj[h.transs[t1].dst * nf + h.transs[t2].dst], comps);
        }
    return h;
}

/// Evaluation at an object of a: strict, F ↦ F(a), σ ↦ σ_a.
inline MonFunctor ev_at(const HomSmc& h, ObjId at) {
    MonFunctor e;
    const int nf = static_cast<int>(h.functors.size());
    e.under.obj_map.resize(nf);
    e.under.arr_map.resize(h.transs.size());
    for (int i = 0; i < nf; ++i) e.under.obj_map[i] = h.functors[i].obj(at);
    for (size_t t = 0; t < h.transs.size(); ++t)
        e.under.arr_map[t] = h.transs[t].t.at(at);
    e.f0 = h.b.base.id(h.b.unit);
    e.f2.resize(static_cast<size_t>(nf) * nf);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            e.f2[i * nf + j] =
                h.b.base.id(h.b.ten(h.functors[i].obj(at), h.functors[j].obj(at)));
    e.strictness = Strictness::strict;
    return e;
}

inline bool hom_is_discrete(const HomSmc& h) {
    for (const auto& t : h.transs) {
        if (t.src != t.dst) return false;
    }
    return static_cast<int>(h.transs.size()) ==
           static_cast<int>(h.functors.size());
}

/// a -> [[a,b],b], sending x to ev_x. Guarded by the double-hom cap.
inline MonFunctor q_embed(const SmcStructure& a, const HomSmc& hom_ab,
                          const HomSmc& hom_hom_b) {
    if (!hom_is_discrete(hom_ab) ||
        static_cast<int>(hom_ab.functors.size()) > 4)
        throw CapError("double hom permitted only over discrete first homs "
                       "with at most 4 objects");
    MonFunctor q;
    const int no = a.base.n_obj;
    const int nf = static_cast<int>(hom_ab.functors.size());
    q.under.obj_map.resize(no);
    q.under.arr_map.resize(a.base.n_arr());
    for (ObjId x = 0; x < no; ++x)
        q.under.obj_map[x] =
            hom_hom_b.functor_index(ev_at(hom_ab, x), "q object");
    for (ArrId f = 0; f < a.base.n_arr(); ++f) {
        std::vector<ArrId> comps(nf);
        for (int i = 0; i < nf; ++i) comps[i] = hom_ab.functors[i].arr(f);
        q.under.arr_map[f] =
            hom_hom_b.trans_index(q.under.obj_map[a.base.dom(f)],
                                  q.under.obj_map[a.base.cod(f)], comps,
                                  "q arrow");
    }
    {
        std::vector<ArrId> comps(nf);
        for (int i = 0; i < nf; ++i) comps[i] = hom_ab.functors[i].f0;
        q.f0 = hom_hom_b.trans_index(hom_hom_b.smc.unit,
                                     q.under.obj_map[a.unit], comps, "q f0");
    }
    q.f2.resize(static_cast<size_t>(no) * no);
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y) {
            std::vector<ArrId> comps(nf);
            for (int i = 0; i < nf; ++i)
                comps[i] = hom_ab.functors[i].f2_at(x, y, no);
            int src = hom_hom_b.smc.ten(q.under.obj_map[x], q.under.obj_map[y]);
            q.f2[x * no + y] = hom_hom_b.trans_index(
                src, q.under.obj_map[a.ten(x, y)], comps, "q f2");
        }
    q.strictness = classify_strictness(q, a, hom_hom_b.smc);
    return q;
}

/// Precomposition [f,b]: [a,b] -> [c,b], H ↦ H∘f. Always strict.
inline MonFunctor precompose_hom(const MonFunctor& f, const SmcStructure& c,
                                 const SmcStructure& a, const SmcStructure& b,
                                 const HomSmc& hom_ab, const HomSmc& hom_cb) {
    MonFunctor out;
    const int nf = static_cast<int>(hom_ab.functors.size());
    out.under.obj_map.resize(nf);
    out.under.arr_map.resize(hom_ab.transs.size());
    for (int i = 0; i < nf; ++i)
        out.under.obj_map[i] = hom_cb.functor_index(
            compose_monoidal(hom_ab.functors[i], f, c, a, b), "[f,b] object");
    for (size_t t = 0; t < hom_ab.transs.size(); ++t) {
        std::vector<ArrId> comps(c.base.n_obj);
        for (ObjId x = 0; x < c.base.n_obj; ++x)
            comps[x] = hom_ab.transs[t].t.at(f.obj(x));
        out.under.arr_map[t] = hom_cb.trans_index(
            out.under.obj_map[hom_ab.transs[t].src],
            out.under.obj_map[hom_ab.transs[t].dst], comps, "[f,b] arrow");
    }
    out.f0 = hom_cb.smc.base.id(hom_cb.smc.unit);
    out.f2.resize(static_cast<size_t>(nf) * nf);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            out.f2[i * nf + j] = hom_cb.smc.base.id(
                hom_cb.smc.ten(out.under.obj_map[i], out.under.obj_map[j]));
    out.strictness = Strictness::strict;
    return out;
}

/// Postcomposition [a,g]: [a,b] -> [a,d], H ↦ g∘H; strict iff g is.
inline MonFunctor postcompose_hom(const MonFunctor& g, const SmcStructure& a,
                                  const SmcStructure& b, const SmcStructure& d,
                                  const HomSmc& hom_ab, const HomSmc& hom_ad) {
    MonFunctor out;
    const int nf = static_cast<int>(hom_ab.functors.size());
    const int no = a.base.n_obj;
    out.under.obj_map.resize(nf);
    out.under.arr_map.resize(hom_ab.transs.size());
    for (int i = 0; i < nf; ++i)
        out.under.obj_map[i] = hom_ad.functor_index(
            compose_monoidal(g, hom_ab.functors[i], a, b, d), "[a,g] object");
    for (size_t t = 0; t < hom_ab.transs.size(); ++t) {
        std::vector<ArrId> comps(no);
        for (ObjId x = 0; x < no; ++x)
            comps[x] = g.arr(hom_ab.transs[t].t.at(x));
        out.under.arr_map[t] = hom_ad.trans_index(
            out.under.obj_map[hom_ab.transs[t].src],
            out.under.obj_map[hom_ab.transs[t].dst], comps, "[a,g] arrow");
    }
    {
        std::vector<ArrId> comps(no, g.f0);
        out.f0 = hom_ad.trans_index(hom_ad.smc.unit,
                                    out.under.obj_map[hom_ab.smc.unit], comps,
                                    "[a,g] f0");
    }
    out.f2.resize(static_cast<size_t>(nf) * nf);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) {
            std::vector<ArrId> comps(no);
            for (ObjId x = 0; x < no; ++x)
                comps[x] = g.f2_at(hom_ab.functors[i].obj(x),
                                   hom_ab.functors[j].obj(x), b.base.n_obj);
            out.f2[i * nf + j] = hom_ad.trans_index(
                hom_ad.smc.ten(out.under.obj_map[i], out.under.obj_map[j]),
                out.under.obj_map[hom_ab.smc.ten(i, j)], comps, "[a,g] f2");
        }
    out.strictness = classify_strictness(out, hom_ab.smc, hom_ad.smc);
    return out;
}

struct HomMapContext {
    const SmcStructure& a;
    const SmcStructure& b;
    const SmcStructure& c;
    const SmcStructure& d;
    const HomSmc& hom_ab;
    const HomSmc& hom_cb;
    const HomSmc& hom_ad;
    const HomSmc& hom_cd;
};

/// [f,g]: [a,b] -> [c,d] computed as both composites [c,g]∘[f,b] and
/// [f,d]∘[a,g]; the two must agree identifier-exactly.
inline MonFunctor hom_map(const MonFunctor& f, const MonFunctor& g,
                          const HomMapContext& ctx) {
    MonFunctor fb = precompose_hom(f, ctx.c, ctx.a, ctx.b, ctx.hom_ab,
                                   ctx.hom_cb);
    MonFunctor cg = postcompose_hom(g, ctx.c, ctx.b, ctx.d, ctx.hom_cb,
                                    ctx.hom_cd);
    MonFunctor route1 =
        compose_monoidal(cg, fb, ctx.hom_ab.smc, ctx.hom_cb.smc,
                         ctx.hom_cd.smc);
    MonFunctor ag = postcompose_hom(g, ctx.a, ctx.b, ctx.d, ctx.hom_ab,
                                    ctx.hom_ad);
    MonFunctor fd = precompose_hom(f, ctx.c, ctx.a, ctx.d, ctx.hom_ad,
                                   ctx.hom_cd);
    MonFunctor route2 =
        compose_monoidal(fd, ag, ctx.hom_ab.smc, ctx.hom_ad.smc,
                         ctx.hom_cd.smc);
    if (!same_data(route1, route2))
        throw Error("hom_map: the two composite routes disagree");
    route1.strictness =
        classify_strictness(route1, ctx.hom_ab.smc, ctx.hom_cd.smc);
    return route1;
}

/// [σ,τ]: [f,g] -> [f',g'], computed as both pastings; asserted equal.
inline MonNatTrans hom_map_2cell(const MonNatTrans& sigma,
                                 const MonFunctor& f, const MonFunctor& f2,
                                 const MonNatTrans& tau, const MonFunctor& g,
                                 const MonFunctor& g2,
                                 const HomMapContext& ctx) {
    const int nf = static_cast<int>(ctx.hom_ab.functors.size());
    const int nco = ctx.c.base.n_obj;
    MonFunctor dom_f = hom_map(f, g, ctx);
    MonFunctor cod_f = hom_map(f2, g2, ctx);
    std::vector<ArrId> out(nf);
    for (int i = 0; i < nf; ++i) {
        const MonFunctor& h = ctx.hom_ab.functors[i];
        std::vector<ArrId> comps(nco), comps2(nco);
        for (ObjId x = 0; x < nco; ++x) {
            // pasting [c,τ] * [σ,b]: g h σ_x then τ at h f' x
            ArrId whisk = g.arr(h.arr(sigma.at(x)));
            ArrId tau_at = tau.at(h.obj(f2.obj(x)));
            comps[x] = ctx.d.base.comp_at(tau_at, whisk);
            // pasting [σ,d] * [a,τ]: τ at h f x then g' h σ_x
            ArrId whisk2 = g2.arr(h.arr(sigma.at(x)));
            ArrId tau_at2 = tau.at(h.obj(f.obj(x)));
            comps2[x] = ctx.d.base.comp_at(whisk2, tau_at2);
        }
        if (comps != comps2)
            throw Error("hom_map_2cell: the two pastings disagree");
        out[i] = ctx.hom_cd.trans_index(dom_f.obj(i), cod_f.obj(i), comps,
                                        "hom_map_2cell");
    }
    MonNatTrans t;
    t.under.components = out;
    return t;
}

} // namespace smck

#endif
