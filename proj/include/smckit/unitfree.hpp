#ifndef SMCKIT_UNITFREE_HPP
#define SMCKIT_UNITFREE_HPP

#include "smckit/adjoin.hpp"

namespace smck {

/// The trivial one-object base underlying the free unit category: its
/// single pair leaf is the generator.
struct StarBase {
    using Obj = int;
    using Arr = int;
    Obj unit() const { return 0; }
    Obj tensor(Obj, Obj) const { return 0; }
    Arr tensor_arrows(Arr, Arr) const { return 0; }
    Arr id(Obj) const { return 0; }
    Arr compose(Arr, Arr) const { return 0; }
    Obj dom(Arr) const { return 0; }
    Obj cod(Arr) const { return 0; }
    Arr assoc(Obj, Obj, Obj) const { return 0; }
    Arr assoc_inv(Obj, Obj, Obj) const { return 0; }
    Arr lunit(Obj) const { return 0; }
    Arr lunit_inv(Obj) const { return 0; }
    Arr runit(Obj) const { return 0; }
    Arr runit_inv(Obj) const { return 0; }
    Arr sym(Obj, Obj) const { return 0; }
    bool is_id(Arr) const { return true; }
    bool obj_eq(Obj, Obj) const { return true; }
    bool arr_eq(Arr, Arr) const { return true; }
    std::vector<std::pair<Arr, Arr>> factorizations(Arr) const {
        return {{0, 0}};
    }
    std::vector<Arr> arrows_from(Obj) const { return {0}; }
    std::vector<Arr> arrows_to(Obj) const { return {0}; }
    std::vector<Arr> hom_arrows(Obj, Obj) const { return {0}; }
    std::vector<std::pair<Obj, Obj>> untensor_candidates(Obj) const {
        return {{0, 0}};
    }
    std::vector<Obj> objects() const { return {0}; }
    std::vector<Obj> leaf_objects() const { return {0}; }
    std::vector<Arr> leaf_arrows() const { return {0}; }
    std::vector<Arr> arrows() const { return {0}; }
    std::string obj_key(Obj) const { return "s"; }
    std::string arr_key(Arr) const { return "s"; }
    std::string obj_show(Obj) const { return "*"; }
    std::string arr_show(Arr) const { return "1*"; }
};

using UnitObj = WordPtr<StarBase, StarBase>;
using UnitPath = TenPath<StarBase, StarBase>;

/// The free symmetric monoidal category on one generator, as a base
/// model: objects are words over {I,⋆}, arrows are canonical paths with
/// equality decided by the leaf permutation (coherence). Arrow keys are
/// the (endpoints, permutation) normal form, so the model is safe as an
/// extension target. objects()/arrows() expose a small sampling set,
/// not an exhaustive enumeration.
struct FreeUnitSmc {
    using Obj = UnitObj;
    using Arr = UnitPath;
    StarBase sa, sb;

    PresCtx<StarBase, StarBase> ctx() const { return {sa, sb}; }

    Obj unit() const { return unit_word(ctx()); }
    Obj star() const { return pair_word(ctx(), 0, 0); }
    Obj tensor(Obj x, Obj y) const { return tensor_word(x, y); }
    Arr tensor_arrows(Arr f, Arr g) const { return tensor_path(f, g); }
    Arr id(Obj x) const { return identity_path(x); }
    Arr compose(Arr g, Arr f) const { return concat(f, g); }
    Obj dom(Arr f) const { return f.dom; }
    Obj cod(Arr f) const { return f.cod(); }
    Arr assoc(Obj x, Obj y, Obj z) const {
        return edge_path(edges::assoc(ctx(), x, y, z));
    }
    Arr assoc_inv(Obj x, Obj y, Obj z) const {
        return edge_path(edges::assoc_inv(ctx(), x, y, z));
    }
    Arr lunit(Obj x) const { return edge_path(edges::lunit(ctx(), x)); }
    Arr lunit_inv(Obj x) const {
        return edge_path(edges::lunit_inv(ctx(), x));
    }
    Arr runit(Obj x) const { return edge_path(edges::runit(ctx(), x)); }
    Arr runit_inv(Obj x) const {
        return edge_path(edges::runit_inv(ctx(), x));
    }
    Arr sym(Obj x, Obj y) const { return edge_path(edges::sym(ctx(), x, y)); }
    bool is_id(Arr f) const {
        return word_eq(f.dom, f.cod()) &&
               path_perm(f) == identity_perm(f.dom->leaves);
    }
    bool obj_eq(Obj x, Obj y) const { return x->key == y->key; }
    bool arr_eq(Arr f, Arr g) const {
        return word_eq(f.dom, g.dom) && word_eq(f.cod(), g.cod()) &&
               path_perm(f) == path_perm(g);
    }
    std::vector<std::pair<Arr, Arr>> factorizations(Arr h) const {
        std::vector<std::pair<Arr, Arr>> out;
        for (size_t i = 0; i <= h.edges.size(); ++i) {
            Arr first{h.dom, {h.edges.begin(), h.edges.begin() + i}};
            Arr second{first.cod(), {h.edges.begin() + i, h.edges.end()}};
            out.push_back({second, first});
        }
        return out;
    }
    std::vector<Arr> arrows_from(Obj) const { return {}; }
    std::vector<Arr> arrows_to(Obj) const { return {}; }

    /// Complete hom enumeration via permutations, for small leaf counts.
    std::vector<Arr> hom_arrows(Obj x, Obj y) const {
        std::vector<Arr> out;
        if (x->leaves != y->leaves || x->leaves > 4) return out;
        Perm perm(x->leaves);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            out.push_back(canonical_arrow(ctx(), x, y, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    std::vector<std::pair<Obj, Obj>> untensor_candidates(Obj o) const {
        if (o->is_tensor()) return {{o->left, o->right}};
        return {};
    }
    std::vector<Obj> objects() const {
        return {unit(), star(), tensor(star(), star())};
    }
    std::vector<Obj> leaf_objects() const { return {unit(), star()}; }
    std::vector<Arr> leaf_arrows() const {
        return {id(unit()), id(star())};
    }
    std::vector<Arr> arrows() const {
        std::vector<Arr> out;
        for (const auto& x : objects()) out.push_back(id(x));
        out.push_back(sym(star(), star()));
        return out;
    }
    std::string obj_key(Obj x) const { return x->key; }
    std::string arr_key(Arr f) const {
        std::string k = cat("u[", f.dom->key, ">", f.cod()->key, ";");
        for (int i : path_perm(f)) k += cat(i, ".");
        return k + "]";
    }
    std::string obj_show(Obj x) const { return x->shown; }
    std::string arr_show(Arr f) const { return f.shown(); }
};

inline FreeUnitSmc unit_smc() { return {}; }

/// Generic v-action over an arbitrary model m: v(X)(a), v(X)(f), the
/// strong structure of v(X), and components v(p)_a of canonical paths.
template <class M>
typename M::Obj v_obj_in(const M& m, const UnitObj& x, typename M::Obj a) {
    if (x->is_unit()) return m.unit();
    if (x->is_pair()) return a;
    return m.tensor(v_obj_in(m, x->left, a), v_obj_in(m, x->right, a));
}

template <class M>
typename M::Arr v_arr_in(const M& m, const UnitObj& x, typename M::Arr f) {
    if (x->is_unit()) return m.id(m.unit());
    if (x->is_pair()) return f;
    return m.tensor_arrows(v_arr_in(m, x->left, f),
                           v_arr_in(m, x->right, f));
}

template <class M>
typename M::Arr mfour_in(const M& m, typename M::Obj w, typename M::Obj x,
                         typename M::Obj y, typename M::Obj z) {
    auto s1 = m.assoc_inv(w, x, m.tensor(y, z));
    auto s2 = m.tensor_arrows(m.id(w), m.assoc(x, y, z));
    auto s3 = m.tensor_arrows(
        m.id(w), m.tensor_arrows(m.sym(x, y), m.id(z)));
    auto s4 = m.tensor_arrows(m.id(w), m.assoc_inv(y, x, z));
    auto s5 = m.assoc(w, y, m.tensor(x, z));
    return m.compose(s5, m.compose(s4, m.compose(s3, m.compose(s2, s1))));
}

template <class M>
typename M::Arr v_unit_structure_in(const M& m, const UnitObj& x) {
    if (x->is_unit() || x->is_pair()) return m.id(m.unit());
    auto l = v_unit_structure_in(m, x->left);
    auto r = v_unit_structure_in(m, x->right);
    return m.compose(m.tensor_arrows(l, r), m.runit_inv(m.unit()));
}

template <class M>
typename M::Arr v_tensor_structure_in(const M& m, const UnitObj& x,
                                      typename M::Obj a,
                                      typename M::Obj a2) {
    if (x->is_unit()) return m.runit(m.unit());
    if (x->is_pair()) return m.id(m.tensor(a, a2));
    auto l = v_tensor_structure_in(m, x->left, a, a2);
    auto r = v_tensor_structure_in(m, x->right, a, a2);
    return m.compose(m.tensor_arrows(l, r),
                     mfour_in(m, v_obj_in(m, x->left, a),
                              v_obj_in(m, x->right, a),
                              v_obj_in(m, x->left, a2),
                              v_obj_in(m, x->right, a2)));
}

template <class M>
typename M::Arr v_component_in(const M& m, const UnitPath& p,
                               typename M::Obj a) {
    HomValued<StarBase, StarBase, M> core;
    core.app_obj = [a](int, int) { return a; };
    core.app_arr = [&m, a](int, int) { return m.id(a); };
    core.unit_of = [&m, a](int) { return m.id(a); };
    core.tensor_of = [&m, a](int, int, int) {
        return m.id(m.tensor(a, a));
    };
    core.nat = [&m, a](int, int) { return m.id(a); };
    core.f0 = [&m](int) { return m.id(m.unit()); };
    core.f2 = [&m, a](int, int, int) { return m.id(m.tensor(a, a)); };
    InducedFunctor<StarBase, StarBase, M> ev(m, std::move(core));
    return ev.path(p);
}

/// Table-backed v-action (the common case in the finite corpus).
/// v(X)(a) and v(p)_a are computed by reusing the word extension over
/// the star presentation with the pair leaf interpreted as `a`.
class VAction {
public:
    explicit VAction(const SmcStructure& a) : a_(&a) {}

    /// v(X)(a)
    ObjId obj(const UnitObj& x, ObjId a) const {
        if (x->is_unit()) return a_->unit;
        if (x->is_pair()) return a;
        return a_->ten(obj(x->left, a), obj(x->right, a));
    }
    /// v(X)(f) for an arrow f of a
    ArrId on_arrow(const UnitObj& x, ArrId f) const {
        if (x->is_unit()) return a_->base.id(a_->unit);
        if (x->is_pair()) return f;
        return a_->ten_arr(on_arrow(x->left, f), on_arrow(x->right, f));
    }
    /// v(p)_a for a canonical path p of the free unit
    ArrId component(const UnitPath& p, ObjId a) const {
        InducedFunctor<StarBase, StarBase, TableSmc> ev(
            TableSmc{*a_}, leaf_core(a));
        return ev.path(p);
    }
    /// (v X)^0 : I -> v(X)(I)
    ArrId unit_structure(const UnitObj& x) const {
        if (x->is_unit()) return a_->base.id(a_->unit); // the unit functor
        if (x->is_pair()) return a_->base.id(a_->unit); // identity functor
        ArrId l = unit_structure(x->left);
        ArrId r = unit_structure(x->right);
        return a_->base.comp_at(a_->ten_arr(l, r), unit_split(*a_));
    }
    /// (v X)^2_{a,a'} : v(X)(a) ⊗ v(X)(a') -> v(X)(a⊗a')
    ArrId tensor_structure(const UnitObj& x, ObjId a, ObjId a2) const {
        if (x->is_unit()) return a_->r(a_->unit);
        if (x->is_pair()) return a_->base.id(a_->ten(a, a2));
        ArrId l = tensor_structure(x->left, a, a2);
        ArrId r = tensor_structure(x->right, a, a2);
        return a_->base.comp_at(
            a_->ten_arr(l, r),
            middle_four(*a_, obj(x->left, a), obj(x->right, a),
                        obj(x->left, a2), obj(x->right, a2)));
    }

private:
    HomValued<StarBase, StarBase, TableSmc> leaf_core(ObjId a) const {
        const SmcStructure* ap = a_;
        HomValued<StarBase, StarBase, TableSmc> core;
        core.app_obj = [a](int, int) { return a; };
        core.app_arr = [ap, a](int, int) { return ap->base.id(a); };
        core.unit_of = [ap, a](int) { return ap->base.id(a); };
        core.tensor_of = [ap, a](int, int, int) {
            return ap->base.id(ap->ten(a, a));
        };
        core.nat = [ap, a](int, int) { return ap->base.id(a); };
        core.f0 = [ap](int) { return ap->base.id(ap->unit); };
        core.f2 = [ap, a](int, int, int) {
            return ap->base.id(ap->ten(a, a));
        };
        return core;
    }
    const SmcStructure* a_;
};

/// v as a functor into the enumerated hom [a,a] (corpus-sized a).
struct VFunctor {
    const HomSmc* hom_aa;
    VAction act;

    VFunctor(const SmcStructure& a, const HomSmc& hom)
        : hom_aa(&hom), act(a) {}

    int obj(const UnitObj& x) const {
        if (x->is_unit()) return hom_aa->smc.unit;
        if (x->is_pair())
            return hom_aa->functor_index(
                identity_mon_functor(hom_aa->a), "v(⋆)");
        return hom_aa->smc.ten(obj(x->left), obj(x->right));
    }
    ArrId arr(const UnitPath& p) const {
        InducedFunctor<StarBase, StarBase, TableSmc> ev(
            TableSmc{hom_aa->smc}, core());
        return ev.path(p);
    }

private:
    HomValued<StarBase, StarBase, TableSmc> core() const {
        const HomSmc* h = hom_aa;
        HomValued<StarBase, StarBase, TableSmc> c;
        int idx = hom_aa->functor_index(identity_mon_functor(hom_aa->a),
                                        "v(⋆)");
        c.app_obj = [idx](int, int) { return idx; };
        c.app_arr = [h, idx](int, int) { return h->smc.base.id(idx); };
        c.unit_of = [h, idx](int) { return h->smc.base.id(idx); };
        c.tensor_of = [h, idx](int, int, int) {
            return h->smc.base.id(h->smc.ten(idx, idx));
        };
        c.nat = [h, idx](int, int) { return h->smc.base.id(idx); };
        c.f0 = [h](int) { return h->smc.base.id(h->smc.unit); };
        c.f2 = [h, idx](int, int, int) {
            return h->smc.base.id(h->smc.ten(idx, idx));
        };
        return c;
    }
};

/// v*(a): the strict symbolic functor 1̲ -> a with value a at the
/// generator; v* itself has the monoidal structure of the dual of v.
struct VStar {
    const SmcStructure* a;
    VAction act;

    explicit VStar(const SmcStructure& smc) : a(&smc), act(smc) {}

    ObjId value(ObjId at, const UnitObj& x) const { return act.obj(x, at); }
    ArrId on_arrow(ArrId f, const UnitObj& x) const {
        return act.on_arrow(x, f);
    }
};

/// The core of R = En(v*) over the presentation (a, 1̲).
inline HomValued<TableSmc, FreeUnitSmc, TableSmc> r_core(
    const SmcStructure& a) {
    VAction act(a);
    const SmcStructure* ap = &a;
    HomValued<TableSmc, FreeUnitSmc, TableSmc> core;
    core.app_obj = [act](ObjId x, const UnitObj& w) {
        return act.obj(w, x);
    };
    core.app_arr = [act](ObjId x, const UnitPath& p) {
        return act.component(p, x);
    };
    // v*(x) is strict: its unit structure is the identity at I
    core.unit_of = [ap](ObjId) { return ap->base.id(ap->unit); };
    // v*(x) is strict, so its structure arrows are identities
    core.tensor_of = [act, ap](ObjId x, const UnitObj& w,
                               const UnitObj& w2) {
        return ap->base.id(ap->ten(act.obj(w, x), act.obj(w2, x)));
    };
    core.nat = [act](ArrId f, const UnitObj& w) {
        return act.on_arrow(w, f);
    };
    core.f0 = [act](const UnitObj& w) { return act.unit_structure(w); };
    core.f2 = [act](ObjId x, ObjId x2, const UnitObj& w) {
        return act.tensor_structure(w, x, x2);
    };
    return core;
}

/// The core of L = En(v) over the presentation (1̲, a).
inline HomValued<FreeUnitSmc, TableSmc, TableSmc> l_core(
    const SmcStructure& a) {
    VAction act(a);
    const SmcStructure* ap = &a;
    HomValued<FreeUnitSmc, TableSmc, TableSmc> core;
    core.app_obj = [act](const UnitObj& w, ObjId x) {
        return act.obj(w, x);
    };
    core.app_arr = [act](const UnitObj& w, ArrId g) {
        return act.on_arrow(w, g);
    };
    core.unit_of = [act](const UnitObj& w) {
        return act.unit_structure(w);
    };
    core.tensor_of = [act](const UnitObj& w, ObjId x, ObjId x2) {
        return act.tensor_structure(w, x, x2);
    };
    core.nat = [act](const UnitPath& p, ObjId x) {
        return act.component(p, x);
    };
    // v is strict: its unit 2-cell is the identity pointwise
    core.f0 = [ap](ObjId) { return ap->base.id(ap->unit); };
    // v is strict, so its structure 2-cells are identities pointwise
    core.f2 = [act, ap](const UnitObj& w, const UnitObj& w2, ObjId x) {
        return ap->base.id(ap->ten(act.obj(w, x), act.obj(w2, x)));
    };
    return core;
}

/// A symmetric monoidal functor out of the free unit with inductively
/// extended carrier: determined by the value at ⋆ and the structure
/// arrows, which are free on a leaf-bounded set and extended by the
/// same induction as the counit.
struct UnitFunctor {
    const SmcStructure* a;
    ObjId star_value;
    std::function<ArrId()> f0; // I -> F(I)
    std::function<ArrId(const UnitObj&, const UnitObj&)> f2;

    ObjId obj(const UnitObj& x) const {
        if (x->is_unit()) return a->unit;
        if (x->is_pair()) return star_value;
        return a->ten(obj(x->left), obj(x->right));
    }
};

inline UnitFunctor v_star_at(const SmcStructure& a, ObjId at) {
    UnitFunctor f;
    f.a = &a;
    f.star_value = at;
    const SmcStructure* ap = &a;
    f.f0 = [ap]() { return ap->base.id(ap->unit); };
    f.f2 = [ap, at](const UnitObj& x, const UnitObj& y) {
        VAction v(*ap);
        return ap->base.id(ap->ten(v.obj(x, at), v.obj(y, at)));
    };
    return f;
}

/// Counit of v* ⊣ ev_⋆ at F: by induction on words; identity at ⋆,
/// F0 at the unit, F2-combined at tensors.
class UnitCounit {
public:
    explicit UnitCounit(UnitFunctor f) : f_(std::move(f)) {}

    ArrId at(const UnitObj& x) const {
        auto it = cache_.find(x->key);
        if (it != cache_.end()) return it->second;
        ArrId r;
        if (x->is_unit())
            r = f_.f0();
        else if (x->is_pair())
            r = f_.a->base.id(f_.star_value);
        else
            r = f_.a->base.comp_at(
                f_.f2(x->left, x->right),
                f_.a->ten_arr(at(x->left), at(x->right)));
        cache_.emplace(x->key, r);
        return r;
    }
    bool identity_at(const UnitObj& x) const {
        return is_identity(f_.a->base, at(x));
    }
    bool invertible_at(const UnitObj& x) const {
        return find_inverse(f_.a->base, at(x)) >= 0;
    }
    /// Naturality against a canonical edge h: X -> Y of the free unit:
    /// eps_Y ∘ v(h)_{F⋆} = F(h) ∘ eps_X.
    bool natural_at(const EdgePtr<StarBase, StarBase>& e,
                    const std::function<ArrId(const UnitPath&)>& f_arr) const {
        VAction act(*f_.a);
        ArrId lhs = f_.a->base.comp_at(
            f_arr(edge_path(e)), at(e->dom));
        ArrId rhs = f_.a->base.comp_at(
            at(e->cod), act.component(edge_path(e), f_.star_value));
        return lhs == rhs;
    }

private:
    UnitFunctor f_;
    mutable std::unordered_map<std::string, ArrId> cache_;
};

} // namespace smck

#endif
