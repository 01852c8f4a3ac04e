#ifndef SMCKIT_CANONICAL_HPP
#define SMCKIT_CANONICAL_HPP

#include "smckit/unitfree.hpp"

namespace smck {

/// A symmetric monoidal functor from finite tables into an arbitrary
/// model: the generalization of MonFunctor used by the unit-cancel
/// embeddings and the tensor actions on 1-cells.
template <class MT>
struct IntoModel {
    using ObjT = typename MT::Obj;
    using ArrT = typename MT::Arr;
    std::function<ObjT(ObjId)> obj;
    std::function<ArrT(ArrId)> arr;
    std::function<ArrT()> f0;
    std::function<ArrT(ObjId, ObjId)> f2;
};

/// R': a -> a⊗1̲, a ↦ (a,⋆).
inline IntoModel<PresSmc<TableSmc, FreeUnitSmc>> r_prime(
    const PresCtx<TableSmc, FreeUnitSmc>& P) {
    auto star = P.B.star();
    IntoModel<PresSmc<TableSmc, FreeUnitSmc>> f;
    f.obj = [P, star](ObjId a) { return pair_word(P, a, star); };
    f.arr = [P, star](ArrId p) {
        return edge_path(edges::tens_l(P, p, star));
    };
    f.f0 = [P, star]() { return edge_path(edges::alpha(P, star)); };
    f.f2 = [P, star](ObjId a, ObjId a2) {
        return edge_path(edges::gamma(P, a, a2, star));
    };
    return f;
}

/// L': a -> 1̲⊗a, a ↦ (⋆,a).
inline IntoModel<PresSmc<FreeUnitSmc, TableSmc>> l_prime(
    const PresCtx<FreeUnitSmc, TableSmc>& P) {
    auto star = P.A.star();
    IntoModel<PresSmc<FreeUnitSmc, TableSmc>> f;
    f.obj = [P, star](ObjId a) { return pair_word(P, star, a); };
    f.arr = [P, star](ArrId p) {
        return edge_path(edges::tens_r(P, star, p));
    };
    f.f0 = [P, star]() { return edge_path(edges::beta(P, star)); };
    f.f2 = [P, star](ObjId a, ObjId a2) {
        return edge_path(edges::delta(P, star, a, a2));
    };
    return f;
}

/// The symmetry S: a⊗b -> b⊗a (the extension of the dual embedding).
template <class MA, class MB>
HomValued<MA, MB, PresSmc<MB, MA>> s_core(const PresCtx<MB, MA>& Q) {
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

/// A non-owning view of a strict word-to-word evaluator.
template <class MA, class MB, class MT>
struct StrictEval {
    std::function<typename MT::Obj(const WordPtr<MA, MB>&)> obj;
    std::function<typename MT::Arr(const TenPath<MA, MB>&)> path;
};

template <class MA, class MB, class MT>
StrictEval<MA, MB, MT> as_eval(const InducedFunctor<MA, MB, MT>& f) {
    const auto* fp = &f;
    return {[fp](const WordPtr<MA, MB>& w) { return fp->obj(w); },
            [fp](const TenPath<MA, MB>& p) { return fp->path(p); }};
}

/// F ⊗ c where F maps objects/arrows of model M1 into model M2.
template <class M1, class MC, class M2>
HomValued<M1, MC, PresSmc<M2, MC>> ten_left_generic(
    const PresCtx<M2, MC>& Pt,
    std::function<typename M2::Obj(typename M1::Obj)> fobj,
    std::function<typename M2::Arr(typename M1::Arr)> farr,
    std::function<typename M2::Arr()> ff0,
    std::function<typename M2::Arr(typename M1::Obj, typename M1::Obj)> ff2,
    const M2& m2) {
    HomValued<M1, MC, PresSmc<M2, MC>> h;
    h.app_obj = [Pt, fobj](auto x, auto c) {
        return pair_word(Pt, fobj(x), c);
    };
    h.app_arr = [Pt, fobj](auto x, auto g) {
        return edge_path(edges::tens_r(Pt, fobj(x), g));
    };
    h.unit_of = [Pt, fobj](auto x) {
        return edge_path(edges::beta(Pt, fobj(x)));
    };
    h.tensor_of = [Pt, fobj](auto x, auto c, auto c2) {
        return edge_path(edges::delta(Pt, fobj(x), c, c2));
    };
    h.nat = [Pt, farr](auto p, auto c) {
        return edge_path(edges::tens_l(Pt, farr(p), c));
    };
    h.f0 = [Pt, ff0, m2](auto c) {
        TenPath<M2, MC> out = edge_path(edges::alpha(Pt, c));
        auto s = ff0();
        if (!m2.is_id(s))
            out = concat(out, edge_path(edges::tens_l(Pt, s, c)));
        return out;
    };
    h.f2 = [Pt, fobj, ff2, m2](auto x, auto x2, auto c) {
        TenPath<M2, MC> out =
            edge_path(edges::gamma(Pt, fobj(x), fobj(x2), c));
        auto s = ff2(x, x2);
        if (!m2.is_id(s))
            out = concat(out, edge_path(edges::tens_l(Pt, s, c)));
        return out;
    };
    return h;
}

/// a ⊗ G where G maps objects/arrows of model M1 into model M2.
template <class MA, class M1, class M2>
HomValued<MA, M1, PresSmc<MA, M2>> ten_right_generic(
    const PresCtx<MA, M2>& Pt,
    std::function<typename M2::Obj(typename M1::Obj)> gobj,
    std::function<typename M2::Arr(typename M1::Arr)> garr,
    std::function<typename M2::Arr()> gf0,
    std::function<typename M2::Arr(typename M1::Obj, typename M1::Obj)> gf2,
    const M2& m2) {
    HomValued<MA, M1, PresSmc<MA, M2>> h;
    h.app_obj = [Pt, gobj](auto a, auto y) {
        return pair_word(Pt, a, gobj(y));
    };
    h.app_arr = [Pt, garr](auto a, auto q) {
        return edge_path(edges::tens_r(Pt, a, garr(q)));
    };
    h.unit_of = [Pt, gf0, m2](auto a) {
        TenPath<MA, M2> out = edge_path(edges::beta(Pt, a));
        auto s = gf0();
        if (!m2.is_id(s))
            out = concat(out, edge_path(edges::tens_r(Pt, a, s)));
        return out;
    };
    h.tensor_of = [Pt, gobj, gf2, m2](auto a, auto y, auto y2) {
        TenPath<MA, M2> out =
            edge_path(edges::delta(Pt, a, gobj(y), gobj(y2)));
        auto s = gf2(y, y2);
        if (!m2.is_id(s))
            out = concat(out, edge_path(edges::tens_r(Pt, a, s)));
        return out;
    };
    h.nat = [Pt, gobj](auto f, auto y) {
        return edge_path(edges::tens_l(Pt, f, gobj(y)));
    };
    h.f0 = [Pt, gobj](auto y) {
        return edge_path(edges::alpha(Pt, gobj(y)));
    };
    h.f2 = [Pt, gobj](auto a, auto a2, auto y) {
        return edge_path(edges::gamma(Pt, a, a2, gobj(y)));
    };
    return h;
}

/// The re-associations A: a⊗(b⊗c) -> (a⊗b)⊗c and A': the other way.
/// Sources and targets are nested presentations over the given models.
template <class MA, class MB, class MC>
struct AssocCells {
    using PAB = PresSmc<MA, MB>;
    using PBC = PresSmc<MB, MC>;
    using Src = PresCtx<MA, PBC>;   // a ⊗ (b⊗c)
    using SrcR = PresCtx<PAB, MC>;  // (a⊗b) ⊗ c
    const MA& A;
    const MB& B;
    const MC& C;
    PAB ab;
    PBC bc;
    PresCtx<MA, MB> Pab;
    PresCtx<MB, MC> Pbc;
    PresSmc<PAB, MC> ab_c;
    PresSmc<MA, PBC> a_bc;
    PresCtx<PAB, MC> Pab_c;
    PresCtx<MA, PBC> Pa_bc;

    AssocCells(const MA& a, const MB& b, const MC& c)
        : A(a), B(b), C(c), ab(a, b), bc(b, c), Pab{a, b}, Pbc{b, c},
          ab_c(ab, c), a_bc(a, bc), Pab_c{ab, c}, Pa_bc{a, bc} {}

    using WAB = WordPtr<MA, MB>;
    using WBC = WordPtr<MB, MC>;
    using WSrc = WordPtr<MA, PBC>;
    using WTgt = WordPtr<PAB, MC>;
    using PathSrc = TenPath<MA, PBC>;
    using PathTgt = TenPath<PAB, MC>;

    // ---- A : a⊗(b⊗c) -> (a⊗b)⊗c ---------------------------------

    WTgt fwd_obj_inner(typename MA::Obj a, const WBC& y) const {
        if (y->is_unit()) return unit_word(Pab_c);
        if (y->is_pair())
            return pair_word(Pab_c, pair_word(Pab, a, y->a), y->b);
        return tensor_word(fwd_obj_inner(a, y->left),
                           fwd_obj_inner(a, y->right));
    }
    WTgt fwd_obj(const WSrc& w) const {
        if (w->is_unit()) return unit_word(Pab_c);
        if (w->is_pair()) return fwd_obj_inner(w->a, w->b);
        return tensor_word(fwd_obj(w->left), fwd_obj(w->right));
    }

    PathTgt fwd_f0(const WBC& y) const {
        // component at y of the unit cell of the inner extension
        if (y->is_unit()) return identity_path(unit_word(Pab_c));
        if (y->is_pair()) {
            auto e1 = edges::alpha(Pab_c, y->b);
            auto inner = edge_path(edges::alpha(Pab, y->a));
            auto e2 = edges::tens_l(Pab_c, inner, y->b);
            return make_path(unit_word(Pab_c), {e1, e2});
        }
        auto l = fwd_f0(y->left);
        auto r = fwd_f0(y->right);
        return concat(
            edge_path(edges::runit_inv(Pab_c, unit_word(Pab_c))),
            tensor_path(l, r));
    }
    PathTgt fwd_f2(typename MA::Obj a, typename MA::Obj a2,
                   const WBC& y) const {
        if (y->is_unit())
            return edge_path(edges::runit(Pab_c, unit_word(Pab_c)));
        if (y->is_pair()) {
            auto pab = pair_word(Pab, a, y->a);
            auto pa2b = pair_word(Pab, a2, y->a);
            auto e1 = edges::gamma(Pab_c, pab, pa2b, y->b);
            auto inner = edge_path(edges::gamma(Pab, a, a2, y->a));
            auto e2 = edges::tens_l(Pab_c, inner, y->b);
            return make_path(
                tensor_word(pair_word(Pab_c, pab, y->b),
                            pair_word(Pab_c, pa2b, y->b)),
                {e1, e2});
        }
        auto cl = fwd_f2(a, a2, y->left);
        auto cr = fwd_f2(a, a2, y->right);
        auto m = mfour_path(Pab_c, fwd_obj_inner(a, y->left),
                            fwd_obj_inner(a, y->right),
                            fwd_obj_inner(a2, y->left),
                            fwd_obj_inner(a2, y->right));
        return concat(m, tensor_path(cl, cr));
    }
    PathTgt fwd_nat(typename MA::Arr f, const WBC& y) const {
        if (y->is_unit()) return identity_path(unit_word(Pab_c));
        if (y->is_pair()) {
            auto inner = edge_path(edges::tens_l(Pab, f, y->a));
            return edge_path(edges::tens_l(Pab_c, inner, y->b));
        }
        return tensor_path(fwd_nat(f, y->left), fwd_nat(f, y->right));
    }

    HomValued<MA, PBC, PresSmc<PAB, MC>> fwd_core() const {
        const AssocCells* self = this;
        HomValued<MA, PBC, PresSmc<PAB, MC>> h;
        h.app_obj = [self](auto a, auto y) {
            return self->fwd_obj_inner(a, y);
        };
        h.app_arr = [self](auto a, auto q) {
            // the inner extension of b ↦ ((a,b),c)-words on a path q
            InducedFunctor<MB, MC, PresSmc<PAB, MC>> inner(
                self->ab_c, self->fwd_inner_core(a));
            return inner.path(q);
        };
        h.unit_of = [self](auto a) {
            (void)a;
            return identity_path(unit_word(self->Pab_c));
        };
        h.tensor_of = [self](auto a, auto y, auto y2) {
            return identity_path(
                tensor_word(self->fwd_obj_inner(a, y),
                            self->fwd_obj_inner(a, y2)));
        };
        h.nat = [self](auto f, auto y) { return self->fwd_nat(f, y); };
        h.f0 = [self](auto y) { return self->fwd_f0(y); };
        h.f2 = [self](auto a, auto a2, auto y) {
            return self->fwd_f2(a, a2, y);
        };
        return h;
    }
    HomValued<MB, MC, PresSmc<PAB, MC>> fwd_inner_core(
        typename MA::Obj a) const {
        const AssocCells* self = this;
        HomValued<MB, MC, PresSmc<PAB, MC>> k;
        k.app_obj = [self, a](auto b, auto c) {
            return pair_word(self->Pab_c, pair_word(self->Pab, a, b), c);
        };
        k.app_arr = [self, a](auto b, auto g) {
            return edge_path(edges::tens_r(
                self->Pab_c, pair_word(self->Pab, a, b), g));
        };
        k.unit_of = [self, a](auto b) {
            return edge_path(edges::beta(
                self->Pab_c, pair_word(self->Pab, a, b)));
        };
        k.tensor_of = [self, a](auto b, auto c, auto c2) {
            return edge_path(edges::delta(
                self->Pab_c, pair_word(self->Pab, a, b), c, c2));
        };
        k.nat = [self, a](auto g, auto c) {
            auto inner = edge_path(edges::tens_r(self->Pab, a, g));
            return edge_path(edges::tens_l(self->Pab_c, inner, c));
        };
        k.f0 = [self, a](auto c) {
            auto e1 = edges::alpha(self->Pab_c, c);
            auto inner = edge_path(edges::beta(self->Pab, a));
            auto e2 = edges::tens_l(self->Pab_c, inner, c);
            return make_path(unit_word(self->Pab_c), {e1, e2});
        };
        k.f2 = [self, a](auto b, auto b2, auto c) {
            auto pab = pair_word(self->Pab, a, b);
            auto pab2 = pair_word(self->Pab, a, b2);
            auto e1 = edges::gamma(self->Pab_c, pab, pab2, c);
            auto inner = edge_path(edges::delta(self->Pab, a, b, b2));
            auto e2 = edges::tens_l(self->Pab_c, inner, c);
            return make_path(tensor_word(pair_word(self->Pab_c, pab, c),
                                         pair_word(self->Pab_c, pab2, c)),
                             {e1, e2});
        };
        return k;
    }

    InducedFunctor<MA, PBC, PresSmc<PAB, MC>> fwd() const {
        return en_extend(ab_c, fwd_core());
    }

    // ---- A' : (a⊗b)⊗c -> a⊗(b⊗c) ---------------------------------

    WSrc bwd_obj_inner(const WAB& x, typename MC::Obj c) const {
        if (x->is_unit()) return unit_word(Pa_bc);
        if (x->is_pair())
            return pair_word(Pa_bc, x->a, pair_word(Pbc, x->b, c));
        return tensor_word(bwd_obj_inner(x->left, c),
                           bwd_obj_inner(x->right, c));
    }
    WSrc bwd_obj(const WTgt& w) const {
        if (w->is_unit()) return unit_word(Pa_bc);
        if (w->is_pair()) return bwd_obj_inner(w->a, w->b);
        return tensor_word(bwd_obj(w->left), bwd_obj(w->right));
    }
    PathSrc bwd_unit_of(const WAB& x) const {
        // (F X)^0 for F X the hom-value at the word x
        if (x->is_unit()) return identity_path(unit_word(Pa_bc));
        if (x->is_pair()) {
            auto e1 = edges::beta(Pa_bc, x->a);
            auto inner = edge_path(edges::beta(Pbc, x->b));
            auto e2 = edges::tens_r(Pa_bc, x->a, inner);
            return make_path(unit_word(Pa_bc), {e1, e2});
        }
        auto l = bwd_unit_of(x->left);
        auto r = bwd_unit_of(x->right);
        return concat(edge_path(edges::runit_inv(Pa_bc, unit_word(Pa_bc))),
                      tensor_path(l, r));
    }
    PathSrc bwd_tensor_of(const WAB& x, typename MC::Obj c,
                          typename MC::Obj c2) const {
        if (x->is_unit())
            return edge_path(edges::runit(Pa_bc, unit_word(Pa_bc)));
        if (x->is_pair()) {
            auto pbc = pair_word(Pbc, x->b, c);
            auto pbc2 = pair_word(Pbc, x->b, c2);
            auto e1 = edges::delta(Pa_bc, x->a, pbc, pbc2);
            auto inner = edge_path(edges::delta(Pbc, x->b, c, c2));
            auto e2 = edges::tens_r(Pa_bc, x->a, inner);
            return make_path(tensor_word(pair_word(Pa_bc, x->a, pbc),
                                         pair_word(Pa_bc, x->a, pbc2)),
                             {e1, e2});
        }
        auto cl = bwd_tensor_of(x->left, c, c2);
        auto cr = bwd_tensor_of(x->right, c, c2);
        auto m = mfour_path(Pa_bc, bwd_obj_inner(x->left, c),
                            bwd_obj_inner(x->right, c),
                            bwd_obj_inner(x->left, c2),
                            bwd_obj_inner(x->right, c2));
        return concat(m, tensor_path(cl, cr));
    }
    PathSrc bwd_app_arr(const WAB& x, typename MC::Arr g) const {
        if (x->is_unit()) return identity_path(unit_word(Pa_bc));
        if (x->is_pair()) {
            auto inner = edge_path(edges::tens_r(Pbc, x->b, g));
            return edge_path(edges::tens_r(Pa_bc, x->a, inner));
        }
        return tensor_path(bwd_app_arr(x->left, g),
                           bwd_app_arr(x->right, g));
    }
    /// component at c of the transformation extending a generator edge
    PathSrc bwd_edge_at(const EdgePtr<MA, MB>& e, typename MC::Obj c) const {
        switch (e->k) {
            case EdgeKind::assoc:
                return edge_path(edges::assoc(
                    Pa_bc, bwd_obj_inner(e->x, c), bwd_obj_inner(e->y, c),
                    bwd_obj_inner(e->z, c)));
            case EdgeKind::assoc_inv:
                return edge_path(edges::assoc_inv(
                    Pa_bc, bwd_obj_inner(e->x, c), bwd_obj_inner(e->y, c),
                    bwd_obj_inner(e->z, c)));
            case EdgeKind::lunit:
                return edge_path(
                    edges::lunit(Pa_bc, bwd_obj_inner(e->x, c)));
            case EdgeKind::lunit_inv:
                return edge_path(
                    edges::lunit_inv(Pa_bc, bwd_obj_inner(e->x, c)));
            case EdgeKind::runit:
                return edge_path(
                    edges::runit(Pa_bc, bwd_obj_inner(e->x, c)));
            case EdgeKind::runit_inv:
                return edge_path(
                    edges::runit_inv(Pa_bc, bwd_obj_inner(e->x, c)));
            case EdgeKind::sym:
                return edge_path(edges::sym(Pa_bc, bwd_obj_inner(e->x, c),
                                            bwd_obj_inner(e->y, c)));
            case EdgeKind::alpha:
                return edge_path(edges::alpha(
                    Pa_bc, pair_word(Pbc, e->ob, c)));
            case EdgeKind::beta: {
                auto e1 = edges::beta(Pa_bc, e->oa);
                auto inner = edge_path(edges::alpha(Pbc, c));
                auto e2 = edges::tens_r(Pa_bc, e->oa, inner);
                return make_path(unit_word(Pa_bc), {e1, e2});
            }
            case EdgeKind::gamma:
                return edge_path(edges::gamma(
                    Pa_bc, e->oa, e->oa2, pair_word(Pbc, e->ob, c)));
            case EdgeKind::delta: {
                auto pbc = pair_word(Pbc, e->ob, c);
                auto pbc2 = pair_word(Pbc, e->ob2, c);
                auto e1 = edges::delta(Pa_bc, e->oa, pbc, pbc2);
                auto inner =
                    edge_path(edges::gamma(Pbc, e->ob, e->ob2, c));
                auto e2 = edges::tens_r(Pa_bc, e->oa, inner);
                return make_path(tensor_word(pair_word(Pa_bc, e->oa, pbc),
                                             pair_word(Pa_bc, e->oa, pbc2)),
                                 {e1, e2});
            }
            case EdgeKind::tens_l:
                return edge_path(edges::tens_l(
                    Pa_bc, e->fa, pair_word(Pbc, e->ob, c)));
            case EdgeKind::tens_r: {
                auto inner = edge_path(edges::tens_l(Pbc, e->gb, c));
                return edge_path(edges::tens_r(Pa_bc, e->oa, inner));
            }
            case EdgeKind::whisk_l:
                return whisker_left_path(bwd_obj_inner(e->x, c),
                                         bwd_edge_at(e->inner, c));
            case EdgeKind::whisk_r:
                return whisker_right_path(bwd_edge_at(e->inner, c),
                                          bwd_obj_inner(e->x, c));
        }
        throw Error("unreachable edge kind");
    }

    HomValued<PAB, MC, PresSmc<MA, PBC>> bwd_core() const {
        const AssocCells* self = this;
        HomValued<PAB, MC, PresSmc<MA, PBC>> h;
        h.app_obj = [self](auto x, auto c) {
            return self->bwd_obj_inner(x, c);
        };
        h.app_arr = [self](auto x, auto g) {
            return self->bwd_app_arr(x, g);
        };
        h.unit_of = [self](auto x) { return self->bwd_unit_of(x); };
        h.tensor_of = [self](auto x, auto c, auto c2) {
            return self->bwd_tensor_of(x, c, c2);
        };
        h.nat = [self](auto p, auto c) {
            // p is a path over (a,b); push each edge through at c
            TenPath<MA, PBC> acc =
                identity_path(self->bwd_obj_inner(p.dom, c));
            for (const auto& e : p.edges)
                acc = concat(acc, self->bwd_edge_at(e, c));
            return acc;
        };
        h.f0 = [self](auto c) {
            (void)c;
            return identity_path(unit_word(self->Pa_bc));
        };
        h.f2 = [self](auto x, auto x2, auto c) {
            return identity_path(
                tensor_word(self->bwd_obj_inner(x, c),
                            self->bwd_obj_inner(x2, c)));
        };
        return h;
    }

    InducedFunctor<PAB, MC, PresSmc<MA, PBC>> bwd() const {
        return en_extend(a_bc, bwd_core());
    }

    // ---- the lax inverse cells -----------------------------------

    /// AA' -> 1 at a word of (a⊗b)⊗c; components in the presentation.
    PathTgt cell_fwd_bwd(const WTgt& w) const {
        if (w->is_unit()) return identity_path(w);
        if (w->is_pair()) {
            const WAB& x = w->a;
            typename MC::Obj c = w->b;
            return cell_inner_fb(x, c);
        }
        return tensor_path(cell_fwd_bwd(w->left), cell_fwd_bwd(w->right));
    }
    PathTgt cell_inner_fb(const WAB& x, typename MC::Obj c) const {
        if (x->is_unit())
            return edge_path(edges::alpha(Pab_c, c));
        if (x->is_pair())
            return identity_path(pair_word(Pab_c, x, c));
        auto cl = cell_inner_fb(x->left, c);
        auto cr = cell_inner_fb(x->right, c);
        auto g = edges::gamma(Pab_c, x->left, x->right, c);
        return concat(tensor_path(cl, cr), edge_path(g));
    }

    /// A'A -> 1 at a word of a⊗(b⊗c).
    PathSrc cell_bwd_fwd(const WSrc& w) const {
        if (w->is_unit()) return identity_path(w);
        if (w->is_pair()) return cell_inner_bf(w->a, w->b);
        return tensor_path(cell_bwd_fwd(w->left), cell_bwd_fwd(w->right));
    }
    PathSrc cell_inner_bf(typename MA::Obj a, const WBC& y) const {
        if (y->is_unit())
            return edge_path(edges::beta(Pa_bc, a));
        if (y->is_pair())
            return identity_path(pair_word(Pa_bc, a, y));
        auto cl = cell_inner_bf(a, y->left);
        auto cr = cell_inner_bf(a, y->right);
        auto d = edges::delta(Pa_bc, a, y->left, y->right);
        return concat(tensor_path(cl, cr), edge_path(d));
    }
};

/// delta_F: the mate v*∘F -> [1,F]∘v* of the evaluation square, with
/// component at (a, X) an arrow v(X)(F a) -> F(v(X)(a)) of the target.
inline ArrId delta_mate(const SmcStructure& a, const SmcStructure& b,
                        const MonFunctor& f, ObjId at, const UnitObj& x) {
    VAction va(a);
    const int nao = a.base.n_obj;
    if (x->is_unit()) return f.f0;
    if (x->is_pair()) return b.base.id(f.obj(at));
    ArrId l = delta_mate(a, b, f, at, x->left);
    ArrId r = delta_mate(a, b, f, at, x->right);
    ObjId vl = va.obj(x->left, at), vr = va.obj(x->right, at);
    return b.base.comp_at(f.f2_at(vl, vr, nao), b.ten_arr(l, r));
}

} // namespace smck

#endif
