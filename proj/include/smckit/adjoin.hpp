#ifndef SMCKIT_ADJOIN_HPP
#define SMCKIT_ADJOIN_HPP

#include <unordered_map>

#include "smckit/homcat.hpp"
#include "smckit/tensorops.hpp"

namespace smck {

/// A symmetric monoidal functor a -> [b, t] presented by its induction
/// core: everything the extension needs, as callables. Values of type
/// ObjT/ArrT live in the target model t (finite tables or presented
/// words). Captured sources must stay alive while the functor is used.
template <class MA, class MB, class MT>
struct HomValued {
    using ObjA = typename MA::Obj;
    using ArrA = typename MA::Arr;
    using ObjB = typename MB::Obj;
    using ArrB = typename MB::Arr;
    using ObjT = typename MT::Obj;
    using ArrT = typename MT::Arr;

    std::function<ObjT(ObjA, ObjB)> app_obj;         // F(a)(b)
    std::function<ArrT(ObjA, ArrB)> app_arr;         // F(a)(g)
    std::function<ArrT(ObjA)> unit_of;               // F(a)^0
    std::function<ArrT(ObjA, ObjB, ObjB)> tensor_of; // F(a)^2_{b,b'}
    std::function<ArrT(ArrA, ObjB)> nat;             // F(f)_b
    std::function<ArrT(ObjB)> f0;                    // (F^0)_b
    std::function<ArrT(ObjA, ObjA, ObjB)> f2;        // (F^2_{a,a'})_b
};

/// The strict extension of a HomValued core over the word presentation:
/// objects by structural induction, generator edges by the fixed rules,
/// paths by composition in the target.
template <class MA, class MB, class MT>
class InducedFunctor {
public:
    using ObjT = typename MT::Obj;
    using ArrT = typename MT::Arr;

    InducedFunctor(MT t, HomValued<MA, MB, MT> core)
        : t_(std::move(t)), core_(std::move(core)) {}

    const MT& target() const { return t_; }

    ObjT obj(const WordPtr<MA, MB>& w) const {
        auto it = obj_cache_.find(w->key);
        if (it != obj_cache_.end()) return it->second;
        ObjT r;
        if (w->is_unit())
            r = t_.unit();
        else if (w->is_pair())
            r = core_.app_obj(w->a, w->b);
        else
            r = t_.tensor(obj(w->left), obj(w->right));
        obj_cache_.emplace(w->key, r);
        return r;
    }

    ArrT edge(const EdgePtr<MA, MB>& e) const {
        switch (e->k) {
            case EdgeKind::assoc:
                return t_.assoc(obj(e->x), obj(e->y), obj(e->z));
            case EdgeKind::assoc_inv:
                return t_.assoc_inv(obj(e->x), obj(e->y), obj(e->z));
            case EdgeKind::lunit: return t_.lunit(obj(e->x));
            case EdgeKind::lunit_inv: return t_.lunit_inv(obj(e->x));
            case EdgeKind::runit: return t_.runit(obj(e->x));
            case EdgeKind::runit_inv: return t_.runit_inv(obj(e->x));
            case EdgeKind::sym: return t_.sym(obj(e->x), obj(e->y));
            case EdgeKind::alpha: return core_.f0(e->ob);
            case EdgeKind::beta: return core_.unit_of(e->oa);
            case EdgeKind::gamma: return core_.f2(e->oa, e->oa2, e->ob);
            case EdgeKind::delta:
                return core_.tensor_of(e->oa, e->ob, e->ob2);
            case EdgeKind::tens_l: return core_.nat(e->fa, e->ob);
            case EdgeKind::tens_r: return core_.app_arr(e->oa, e->gb);
            case EdgeKind::whisk_l:
                return t_.tensor_arrows(t_.id(obj(e->x)), edge(e->inner));
            case EdgeKind::whisk_r:
                return t_.tensor_arrows(edge(e->inner), t_.id(obj(e->x)));
        }
        throw Error("unreachable edge kind");
    }

    ArrT path(const TenPath<MA, MB>& p) const {
        ArrT acc = t_.id(obj(p.dom));
        for (const auto& e : p.edges) acc = t_.compose(edge(e), acc);
        return acc;
    }

private:
    MT t_;
    HomValued<MA, MB, MT> core_;
    mutable std::unordered_map<std::string, ObjT> obj_cache_;
};

template <class MA, class MB, class MT>
InducedFunctor<MA, MB, MT> en_extend(MT t, HomValued<MA, MB, MT> core) {
    return InducedFunctor<MA, MB, MT>(std::move(t), std::move(core));
}

/// The embedding core: En(eta) is the identity evaluator.
template <class MA, class MB>
HomValued<MA, MB, PresSmc<MA, MB>> eta(const PresCtx<MA, MB>& P) {
    HomValued<MA, MB, PresSmc<MA, MB>> h;
    h.app_obj = [P](auto a, auto b) { return pair_word(P, a, b); };
    h.app_arr = [P](auto a, auto g) {
        return edge_path(edges::tens_r(P, a, g));
    };
    h.unit_of = [P](auto a) { return edge_path(edges::beta(P, a)); };
    h.tensor_of = [P](auto a, auto b, auto b2) {
        return edge_path(edges::delta(P, a, b, b2));
    };
    h.nat = [P](auto f, auto b) { return edge_path(edges::tens_l(P, f, b)); };
    h.f0 = [P](auto b) { return edge_path(edges::alpha(P, b)); };
    h.f2 = [P](auto a, auto a2, auto b) {
        return edge_path(edges::gamma(P, a, a2, b));
    };
    return h;
}

/// The dual embedding: eta*(a)(b) = (b, a) in the swapped presentation.
template <class MA, class MB>
HomValued<MA, MB, PresSmc<MB, MA>> eta_dual(const PresCtx<MA, MB>&,
                                            const PresCtx<MB, MA>& Q) {
    HomValued<MA, MB, PresSmc<MB, MA>> h;
    h.app_obj = [Q](auto a, auto b) { return pair_word(Q, b, a); };
    h.app_arr = [Q](auto a, auto g) {
        return edge_path(edges::tens_l(Q, g, a));
    };
    h.unit_of = [Q](auto a) { return edge_path(edges::alpha(Q, a)); };
    h.tensor_of = [Q](auto a, auto b, auto b2) {
        return edge_path(edges::gamma(Q, b, b2, a));
    };
    h.nat = [Q](auto f, auto b) { return edge_path(edges::tens_r(Q, b, f)); };
    h.f0 = [Q](auto b) { return edge_path(edges::beta(Q, b)); };
    h.f2 = [Q](auto a, auto a2, auto b) {
        return edge_path(edges::delta(Q, b, a, a2));
    };
    return h;
}

/// Core of En(F) for an enumerated F: a -> [b,c].
inline HomValued<TableSmc, TableSmc, TableSmc> symbolic_of_finite(
    const HomSmc& hom_bc, const MonFunctor& f) {
    const HomSmc* h = &hom_bc;
    MonFunctor ff = f;
    HomValued<TableSmc, TableSmc, TableSmc> out;
    int nbo = hom_bc.a.base.n_obj; // objects of the hom's domain
    out.app_obj = [h, ff](ObjId a, ObjId b) {
        return h->functors[ff.obj(a)].obj(b);
    };
    out.app_arr = [h, ff](ObjId a, ArrId g) {
        return h->functors[ff.obj(a)].arr(g);
    };
    out.unit_of = [h, ff](ObjId a) { return h->functors[ff.obj(a)].f0; };
    out.tensor_of = [h, ff, nbo](ObjId a, ObjId b, ObjId b2) {
        return h->functors[ff.obj(a)].f2_at(b, b2, nbo);
    };
    out.nat = [h, ff](ArrId f_, ObjId b) {
        return h->transs[ff.arr(f_)].t.at(b);
    };
    out.f0 = [h, ff](ObjId b) { return h->transs[ff.f0].t.at(b); };
    out.f2 = [h, ff](ObjId a, ObjId a2, ObjId b) {
        int nao = static_cast<int>(ff.under.obj_map.size());
        return h->transs[ff.f2_at(a, a2, nao)].t.at(b);
    };
    return out;
}

using FiniteWordFunctor = InducedFunctor<TableSmc, TableSmc, TableSmc>;

/// A 2-cell between induced functors, given by structural induction
/// from the pair-leaf components.
template <class MA, class MB, class MT>
class WordCell {
public:
    using ArrT = typename MT::Arr;
    WordCell(MT t,
             std::function<ArrT(typename MA::Obj, typename MB::Obj)> at_pair)
        : t_(std::move(t)), at_pair_(std::move(at_pair)) {}

    ArrT at(const WordPtr<MA, MB>& w) const {
        if (w->is_unit()) return t_.id(t_.unit());
        if (w->is_pair()) return at_pair_(w->a, w->b);
        return t_.tensor_arrows(at(w->left), at(w->right));
    }

private:
    MT t_;
    std::function<ArrT(typename MA::Obj, typename MB::Obj)> at_pair_;
};

/// sigma-bar: the extension of a 2-cell sigma: F -> G along En,
/// components (sigma_a)_b at the pair leaves.
inline WordCell<TableSmc, TableSmc, TableSmc> en_extend_2cell(
    const HomSmc& hom_bc, const MonNatTrans& sigma) {
    const HomSmc* h = &hom_bc;
    MonNatTrans s = sigma;
    return WordCell<TableSmc, TableSmc, TableSmc>(
        TableSmc{hom_bc.b}, [h, s](ObjId a, ObjId b) {
            return h->transs[s.at(a)].t.at(b);
        });
}

/// Rn(g) for a strict evaluator g out of the presentation: each a gives
/// the functor b ↦ g(a⊗b) with structure read off the generator images;
/// the result must land in the enumerated hom.
inline MonFunctor rn_restrict(const PresCtx<TableSmc, TableSmc>& P,
                              const FiniteWordFunctor& g,
                              const SmcStructure& a, const SmcStructure& b,
                              const HomSmc& hom_bc) {
    MonFunctor out;
    const int nao = a.base.n_obj;
    const int nbo = b.base.n_obj;
    out.under.obj_map.resize(nao);
    out.under.arr_map.resize(a.base.n_arr());
    for (ObjId x = 0; x < nao; ++x) {
        MonFunctor fx;
        fx.under.obj_map.resize(nbo);
        fx.under.arr_map.resize(b.base.n_arr());
        for (ObjId y = 0; y < nbo; ++y)
            fx.under.obj_map[y] = g.obj(pair_word(P, x, y));
        for (ArrId q = 0; q < b.base.n_arr(); ++q)
            fx.under.arr_map[q] = g.edge(edges::tens_r(P, x, q));
        fx.f0 = g.edge(edges::beta(P, x));
        fx.f2.resize(static_cast<size_t>(nbo) * nbo);
        for (ObjId y = 0; y < nbo; ++y)
            for (ObjId y2 = 0; y2 < nbo; ++y2)
                fx.f2[y * nbo + y2] = g.edge(edges::delta(P, x, y, y2));
        fx.strictness = classify_strictness(fx, b, hom_bc.b);
        out.under.obj_map[x] = hom_bc.functor_index(fx, "rn object");
    }
    for (ArrId f = 0; f < a.base.n_arr(); ++f) {
        std::vector<ArrId> comps(nbo);
        for (ObjId y = 0; y < nbo; ++y)
            comps[y] = g.edge(edges::tens_l(P, f, y));
        out.under.arr_map[f] = hom_bc.trans_index(
            out.under.obj_map[a.base.dom(f)],
            out.under.obj_map[a.base.cod(f)], comps, "rn arrow");
    }
    {
        std::vector<ArrId> comps(nbo);
        for (ObjId y = 0; y < nbo; ++y)
            comps[y] = g.edge(edges::alpha(P, y));
        out.f0 = hom_bc.trans_index(hom_bc.smc.unit,
                                    out.under.obj_map[a.unit], comps,
                                    "rn f0");
    }
    out.f2.resize(static_cast<size_t>(nao) * nao);
    for (ObjId x = 0; x < nao; ++x)
        for (ObjId x2 = 0; x2 < nao; ++x2) {
            std::vector<ArrId> comps(nbo);
            for (ObjId y = 0; y < nbo; ++y)
                comps[y] = g.edge(edges::gamma(P, x, x2, y));
            out.f2[x * nao + x2] = hom_bc.trans_index(
                hom_bc.smc.ten(out.under.obj_map[x], out.under.obj_map[x2]),
                out.under.obj_map[a.ten(x, x2)], comps, "rn f2");
        }
    out.strictness = classify_strictness(out, a, hom_bc.smc);
    return out;
}

/// A possibly-lax symmetric monoidal functor out of the presentation,
/// carried as evaluators plus monoidal structure per word pair.
template <class MA, class MB, class MT>
struct LaxWordFunctor {
    using ObjT = typename MT::Obj;
    using ArrT = typename MT::Arr;
    const MT* t;
    std::function<ObjT(const WordPtr<MA, MB>&)> obj;
    std::function<ArrT(const TenPath<MA, MB>&)> path;
    std::function<ArrT()> f0; // I -> obj(I)
    std::function<ArrT(const WordPtr<MA, MB>&, const WordPtr<MA, MB>&)> f2;
};

template <class MA, class MB, class MT>
LaxWordFunctor<MA, MB, MT> lax_of_induced(
    const InducedFunctor<MA, MB, MT>& g) {
    const auto* gp = &g;
    LaxWordFunctor<MA, MB, MT> out;
    out.t = &g.target();
    out.obj = [gp](const WordPtr<MA, MB>& w) { return gp->obj(w); };
    out.path = [gp](const TenPath<MA, MB>& p) { return gp->path(p); };
    out.f0 = [gp]() { return gp->target().id(gp->target().unit()); };
    out.f2 = [gp](const WordPtr<MA, MB>& x, const WordPtr<MA, MB>& y) {
        return gp->target().id(
            gp->target().tensor(gp->obj(x), gp->obj(y)));
    };
    return out;
}

/// h ∘ g for a finite symmetric monoidal h on the target tables.
template <class MA, class MB>
LaxWordFunctor<MA, MB, TableSmc> postcompose_lax(
    const SmcStructure& c, const SmcStructure& d, const MonFunctor& h,
    const LaxWordFunctor<MA, MB, TableSmc>& g, const TableSmc& dt) {
    MonFunctor hh = h;
    LaxWordFunctor<MA, MB, TableSmc> out;
    out.t = &dt;
    auto gobj = g.obj;
    auto gpath = g.path;
    auto gf0 = g.f0;
    auto gf2 = g.f2;
    const SmcStructure* dp = &d;
    int nco = c.base.n_obj;
    out.obj = [gobj, hh](const WordPtr<MA, MB>& w) {
        return hh.obj(gobj(w));
    };
    out.path = [gpath, hh](const TenPath<MA, MB>& p) {
        return hh.arr(gpath(p));
    };
    out.f0 = [gf0, hh, dp]() {
        return dp->base.comp_at(hh.arr(gf0()), hh.f0);
    };
    out.f2 = [gobj, gf2, hh, dp, nco](const WordPtr<MA, MB>& x,
                                      const WordPtr<MA, MB>& y) {
        return dp->base.comp_at(hh.arr(gf2(x, y)),
                                hh.f2_at(gobj(x), gobj(y), nco));
    };
    return out;
}

/// Pointwise tensor of two strict evaluators (strong, not strict).
template <class MA, class MB>
LaxWordFunctor<MA, MB, TableSmc> box_lax(
    const InducedFunctor<MA, MB, TableSmc>& f,
    const InducedFunctor<MA, MB, TableSmc>& g, const SmcStructure& c,
    const TableSmc& ct) {
    const auto* fp = &f;
    const auto* gp = &g;
    const SmcStructure* cp = &c;
    LaxWordFunctor<MA, MB, TableSmc> out;
    out.t = &ct;
    out.obj = [fp, gp, cp](const WordPtr<MA, MB>& w) {
        return cp->ten(fp->obj(w), gp->obj(w));
    };
    out.path = [fp, gp, cp](const TenPath<MA, MB>& p) {
        return cp->ten_arr(fp->path(p), gp->path(p));
    };
    out.f0 = [cp]() { return unit_split(*cp); };
    out.f2 = [fp, gp, cp](const WordPtr<MA, MB>& x,
                          const WordPtr<MA, MB>& y) {
        return middle_four(*cp, fp->obj(x), gp->obj(x), fp->obj(y),
                           gp->obj(y));
    };
    return out;
}

/// The induction core of En(Rn(f)) for a possibly-lax f out of the
/// presentation: generator images pick up the monoidal structure of f.
template <class MA, class MB>
HomValued<MA, MB, TableSmc> rn_core_of_lax(
    const PresCtx<MA, MB>& P, const SmcStructure& c,
    const LaxWordFunctor<MA, MB, TableSmc>& f) {
    const SmcStructure* cp = &c;
    auto fobj = f.obj;
    auto fpath = f.path;
    auto ff0 = f.f0;
    auto ff2 = f.f2;
    HomValued<MA, MB, TableSmc> out;
    out.app_obj = [P, fobj](auto a, auto b) {
        return fobj(pair_word(P, a, b));
    };
    out.app_arr = [P, fpath](auto a, auto g) {
        return fpath(edge_path(edges::tens_r(P, a, g)));
    };
    out.unit_of = [P, fpath, ff0, cp](auto a) {
        return cp->base.comp_at(fpath(edge_path(edges::beta(P, a))), ff0());
    };
    out.tensor_of = [P, fpath, ff2, cp](auto a, auto b, auto b2) {
        auto pab = pair_word(P, a, b);
        auto pab2 = pair_word(P, a, b2);
        return cp->base.comp_at(
            fpath(edge_path(edges::delta(P, a, b, b2))), ff2(pab, pab2));
    };
    out.nat = [P, fpath](auto p, auto b) {
        return fpath(edge_path(edges::tens_l(P, p, b)));
    };
    out.f0 = [P, fpath, ff0, cp](auto b) {
        return cp->base.comp_at(fpath(edge_path(edges::alpha(P, b))), ff0());
    };
    out.f2 = [P, fpath, ff2, cp](auto a, auto a2, auto b) {
        auto pab = pair_word(P, a, b);
        auto pa2b = pair_word(P, a2, b);
        return cp->base.comp_at(
            fpath(edge_path(edges::gamma(P, a, a2, b))), ff2(pab, pa2b));
    };
    return out;
}

/// The counit component family of En ⊣ Rn at a functor out of the
/// presentation: identity at pair leaves, f0 at the unit, f2-combined
/// componentwise elsewhere. Memoized by word key.
template <class MA, class MB>
class CounitFamily {
public:
    CounitFamily(const SmcStructure& c, LaxWordFunctor<MA, MB, TableSmc> f)
        : c_(&c), f_(std::move(f)) {}

    ArrId at(const WordPtr<MA, MB>& w) const {
        auto it = cache_.find(w->key);
        if (it != cache_.end()) return it->second;
        ArrId r;
        if (w->is_unit())
            r = f_.f0();
        else if (w->is_pair())
            r = c_->base.id(f_.obj(w));
        else
            r = c_->base.comp_at(
                f_.f2(w->left, w->right),
                c_->ten_arr(at(w->left), at(w->right)));
        cache_.emplace(w->key, r);
        return r;
    }

    /// Naturality of the family against a generator edge, with the
    /// strict extension of Rn(f) on the left.
    bool natural_at(const InducedFunctor<MA, MB, TableSmc>& en_rn_f,
                    const EdgePtr<MA, MB>& e) const {
        ArrId lhs = c_->base.comp_at(at(e->cod), en_rn_f.edge(e));
        ArrId rhs = c_->base.comp_at(f_.path(edge_path(e)), at(e->dom));
        return lhs == rhs;
    }

    bool invertible_at(const WordPtr<MA, MB>& w) const {
        return find_inverse(c_->base, at(w)) >= 0;
    }
    bool identity_at(const WordPtr<MA, MB>& w) const {
        return is_identity(c_->base, at(w));
    }

private:
    const SmcStructure* c_;
    LaxWordFunctor<MA, MB, TableSmc> f_;
    mutable std::unordered_map<std::string, ArrId> cache_;
};

/// En applied after Rn, as a strict evaluator (for counit naturality).
inline FiniteWordFunctor en_of_rn(const PresCtx<TableSmc, TableSmc>& P,
                                  const TableSmc& ct, const HomSmc& hom_bc,
                                  const MonFunctor& rn_f) {
    (void)P;
    return en_extend(ct, symbolic_of_finite(hom_bc, rn_f));
}

/// Generating-set equality of strict evaluators: agreement on all words
/// with at most two leaves and on every generator edge over them.
inline bool induced_equal(const PresCtx<TableSmc, TableSmc>& P,
                          const FiniteWordFunctor& f,
                          const FiniteWordFunctor& g, const SmcStructure& a,
                          const SmcStructure& b) {
    for (ObjId x = 0; x < a.base.n_obj; ++x)
        for (ObjId y = 0; y < b.base.n_obj; ++y)
            if (f.obj(pair_word(P, x, y)) != g.obj(pair_word(P, x, y)))
                return false;
    auto words = enumerate_words(P, 2);
    auto es = enumerate_edges(P, words, 2);
    for (const auto& e : es)
        if (f.edge(e) != g.edge(e)) return false;
    return true;
}

/// The universal-property report: fbar strict, [b,fbar]∘eta = f, and
/// fbar determined by f (identifier-level agreement with en_extend(f)).
inline Report check_universal(const PresCtx<TableSmc, TableSmc>& P,
                              const MonFunctor& f,
                              const FiniteWordFunctor& fbar,
                              const SmcStructure& a, const SmcStructure& b,
                              const HomSmc& hom_bc) {
    Report r;
    const int nbo = b.base.n_obj;
    for (ObjId x = 0; x < a.base.n_obj; ++x) {
        const MonFunctor& fx = hom_bc.functors[f.obj(x)];
        for (ObjId y = 0; y < nbo; ++y)
            if (fbar.obj(pair_word(P, x, y)) != fx.obj(y))
                add(r, "factorization-objects", cat("(", x, ",", y, ")"));
        for (ArrId q = 0; q < b.base.n_arr(); ++q)
            if (fbar.edge(edges::tens_r(P, x, q)) != fx.arr(q))
                add(r, "factorization-arrows", cat("(", x, ",", q, ")"));
        if (fbar.edge(edges::beta(P, x)) != fx.f0)
            add(r, "factorization-unit", cat("a=", x));
        for (ObjId y = 0; y < nbo; ++y)
            for (ObjId y2 = 0; y2 < nbo; ++y2)
                if (fbar.edge(edges::delta(P, x, y, y2)) !=
                    fx.f2_at(y, y2, nbo))
                    add(r, "factorization-tensor",
                        cat("(", x, ",", y, ",", y2, ")"));
    }
    for (ArrId p = 0; p < a.base.n_arr(); ++p)
        for (ObjId y = 0; y < nbo; ++y)
            if (fbar.edge(edges::tens_l(P, p, y)) !=
                hom_bc.transs[f.arr(p)].t.at(y))
                add(r, "factorization-nat", cat("(", p, ",", y, ")"));
    for (ObjId y = 0; y < nbo; ++y)
        if (fbar.edge(edges::alpha(P, y)) != hom_bc.transs[f.f0].t.at(y))
            add(r, "factorization-f0", cat("b=", y));
    const int nao = a.base.n_obj;
    for (ObjId x = 0; x < nao; ++x)
        for (ObjId x2 = 0; x2 < nao; ++x2)
            for (ObjId y = 0; y < nbo; ++y)
                if (fbar.edge(edges::gamma(P, x, x2, y)) !=
                    hom_bc.transs[f.f2_at(x, x2, nao)].t.at(y))
                    add(r, "factorization-f2",
                        cat("(", x, ",", x2, ",", y, ")"));
    // determination: fbar agrees with the canonical extension of f
    FiniteWordFunctor canon =
        en_extend(TableSmc{hom_bc.b}, symbolic_of_finite(hom_bc, f));
    if (!induced_equal(P, fbar, canon, a, b))
        add(r, "uniqueness", "fbar differs from the extension of f");
    return r;
}

/// Kelly's two invertibility conditions instantiated for En ⊣ Rn:
/// the counit must be invertible on tensors of strict images and on
/// the unit, checked on all words up to the given leaf bound.
inline Report kelly_check(const PresCtx<TableSmc, TableSmc>& P,
                          const SmcStructure& a, const SmcStructure& b,
                          const SmcStructure& c, const TableSmc& ct,
                          const HomSmc& hom_bc, int max_leaves = 3) {
    Report r;
    auto words = enumerate_words(P, max_leaves);
    // condition (2): the unit of [a⊗b, c] is the constant functor;
    // epsilon at it must be invertible
    {
        PresSmc<TableSmc, TableSmc> pres(P.A, P.B);
        LaxWordFunctor<TableSmc, TableSmc, TableSmc> unit_functor;
        unit_functor.t = &ct;
        const SmcStructure* cp = &c;
        unit_functor.obj = [cp](const WordPtr<TableSmc, TableSmc>&) {
            return cp->unit;
        };
        unit_functor.path = [cp](const TenPath<TableSmc, TableSmc>&) {
            return cp->base.id(cp->unit);
        };
        unit_functor.f0 = [cp]() { return cp->base.id(cp->unit); };
        unit_functor.f2 = [cp](const WordPtr<TableSmc, TableSmc>&,
                               const WordPtr<TableSmc, TableSmc>&) {
            return cp->r(cp->unit);
        };
        CounitFamily<TableSmc, TableSmc> eps(c, unit_functor);
        for (const auto& w : words)
            if (!eps.invertible_at(w))
                add(r, "kelly-unit", cat("not invertible at ", w->shown));
    }
    // condition (1): epsilon at En(F) □ En(G) for all enumerated F, G
    auto fs = enumerate_smc_functors(a, hom_bc.smc);
    std::vector<FiniteWordFunctor> exts;
    exts.reserve(fs.size());
    for (const auto& f : fs)
        exts.push_back(en_extend(ct, symbolic_of_finite(hom_bc, f)));
    for (size_t i = 0; i < exts.size(); ++i)
        for (size_t j = 0; j < exts.size(); ++j) {
            auto boxed = box_lax(exts[i], exts[j], c, ct);
            CounitFamily<TableSmc, TableSmc> eps(c, boxed);
            for (const auto& w : words)
                if (!eps.invertible_at(w))
                    add(r, "kelly-box",
                        cat("F=", i, " G=", j, " at ", w->shown));
        }
    return r;
}

/// Tensor actions of 1-cells on the presentation (the strict images
/// under the extension).

/// F ⊗ b : a⊗b -> c⊗b for F: a -> c.
inline HomValued<TableSmc, TableSmc, PresSmc<TableSmc, TableSmc>>
ten_map_left(const PresCtx<TableSmc, TableSmc>& Pc, const MonFunctor& f,
             const SmcStructure& a) {
    const int nao = a.base.n_obj;
    MonFunctor ff = f;
    HomValued<TableSmc, TableSmc, PresSmc<TableSmc, TableSmc>> h;
    h.app_obj = [Pc, ff](ObjId x, ObjId y) {
        return pair_word(Pc, ff.obj(x), y);
    };
    h.app_arr = [Pc, ff](ObjId x, ArrId g) {
        return edge_path(edges::tens_r(Pc, ff.obj(x), g));
    };
    h.unit_of = [Pc, ff](ObjId x) {
        return edge_path(edges::beta(Pc, ff.obj(x)));
    };
    h.tensor_of = [Pc, ff](ObjId x, ObjId y, ObjId y2) {
        return edge_path(edges::delta(Pc, ff.obj(x), y, y2));
    };
    h.nat = [Pc, ff](ArrId p, ObjId y) {
        return edge_path(edges::tens_l(Pc, ff.arr(p), y));
    };
    h.f0 = [Pc, ff](ObjId y) {
        std::vector<EdgePtr<TableSmc, TableSmc>> es{edges::alpha(Pc, y)};
        if (!Pc.A.is_id(ff.f0)) es.push_back(edges::tens_l(Pc, ff.f0, y));
        return make_path(unit_word(Pc), std::move(es));
    };
    h.f2 = [Pc, ff, nao](ObjId x, ObjId x2, ObjId y) {
        std::vector<EdgePtr<TableSmc, TableSmc>> es{
            edges::gamma(Pc, ff.obj(x), ff.obj(x2), y)};
        if (!Pc.A.is_id(ff.f2_at(x, x2, nao)))
            es.push_back(edges::tens_l(Pc, ff.f2_at(x, x2, nao), y));
        return make_path(tensor_word(pair_word(Pc, ff.obj(x), y),
                                     pair_word(Pc, ff.obj(x2), y)),
                         std::move(es));
    };
    return h;
}

/// a ⊗ G : a⊗b -> a⊗d for G: b -> d.
inline HomValued<TableSmc, TableSmc, PresSmc<TableSmc, TableSmc>>
ten_map_right(const PresCtx<TableSmc, TableSmc>& Pd, const MonFunctor& g,
              const SmcStructure& b) {
    const int nbo = b.base.n_obj;
    MonFunctor gg = g;
    HomValued<TableSmc, TableSmc, PresSmc<TableSmc, TableSmc>> h;
    h.app_obj = [Pd, gg](ObjId x, ObjId y) {
        return pair_word(Pd, x, gg.obj(y));
    };
    h.app_arr = [Pd, gg](ObjId x, ArrId q) {
        return edge_path(edges::tens_r(Pd, x, gg.arr(q)));
    };
    h.unit_of = [Pd, gg](ObjId x) {
        std::vector<EdgePtr<TableSmc, TableSmc>> es{edges::beta(Pd, x)};
        if (!Pd.B.is_id(gg.f0)) es.push_back(edges::tens_r(Pd, x, gg.f0));
        return make_path(unit_word(Pd), std::move(es));
    };
    h.tensor_of = [Pd, gg, nbo](ObjId x, ObjId y, ObjId y2) {
        std::vector<EdgePtr<TableSmc, TableSmc>> es{
            edges::delta(Pd, x, gg.obj(y), gg.obj(y2))};
        if (!Pd.B.is_id(gg.f2_at(y, y2, nbo)))
            es.push_back(edges::tens_r(Pd, x, gg.f2_at(y, y2, nbo)));
        return make_path(tensor_word(pair_word(Pd, x, gg.obj(y)),
                                     pair_word(Pd, x, gg.obj(y2))),
                         std::move(es));
    };
    h.nat = [Pd, gg](ArrId p, ObjId y) {
        return edge_path(edges::tens_l(Pd, p, gg.obj(y)));
    };
    h.f0 = [Pd, gg](ObjId y) {
        return edge_path(edges::alpha(Pd, gg.obj(y)));
    };
    h.f2 = [Pd, gg](ObjId x, ObjId x2, ObjId y) {
        return edge_path(edges::gamma(Pd, x, x2, gg.obj(y)));
    };
    return h;
}

} // namespace smck

#endif
