#ifndef SMCKIT_WORDS_HPP
#define SMCKIT_WORDS_HPP

#include <memory>
#include <optional>

#include "smckit/monoidal.hpp"

namespace smck {

/// Base-category model backed by SmcStructure tables.
/// The model interface consumed by the word machinery is:
///   types Obj, Arr;
///   unit(), tensor(Obj,Obj), tensor_arrows(Arr,Arr), id(Obj),
///   compose(Arr,Arr), dom/cod, assoc/assoc_inv/lunit/lunit_inv/
///   runit/runit_inv/sym components, is_id(Arr),
///   factorizations(Arr) -> nontrivial (g,f) pairs with g∘f = arr,
///   obj_key/arr_key (injective; arr_key equality-sound for models used
///   as extension targets), obj_show/arr_show.
struct TableSmc {
    using Obj = ObjId;
    using Arr = ArrId;
    const SmcStructure* s;

    explicit TableSmc(const SmcStructure& smc) : s(&smc) {}

    Obj unit() const { return s->unit; }
    Obj tensor(Obj x, Obj y) const { return s->ten(x, y); }
    Arr tensor_arrows(Arr f, Arr g) const { return s->ten_arr(f, g); }
    Arr id(Obj x) const { return s->base.id(x); }
    Arr compose(Arr g, Arr f) const { return s->base.comp_at(g, f); }
    Obj dom(Arr f) const { return s->base.dom(f); }
    Obj cod(Arr f) const { return s->base.cod(f); }
    Arr assoc(Obj x, Obj y, Obj z) const { return s->a(x, y, z); }
    Arr assoc_inv(Obj x, Obj y, Obj z) const { return s->a_inv(x, y, z); }
    Arr lunit(Obj x) const { return s->l(x); }
    Arr lunit_inv(Obj x) const { return s->l_inv(x); }
    Arr runit(Obj x) const { return s->r(x); }
    Arr runit_inv(Obj x) const { return s->r_inv(x); }
    Arr sym(Obj x, Obj y) const { return s->s(x, y); }
    bool is_id(Arr f) const { return is_identity(s->base, f); }
    bool obj_eq(Obj x, Obj y) const { return x == y; }
    bool arr_eq(Arr f, Arr g) const { return f == g; }

    std::vector<std::pair<Arr, Arr>> factorizations(Arr h) const {
        std::vector<std::pair<Arr, Arr>> out;
        for (Arr g = 0; g < s->base.n_arr(); ++g)
            for (Arr f = 0; f < s->base.n_arr(); ++f)
                if (s->base.composable(g, f) && s->base.comp_at(g, f) == h)
                    out.push_back({g, f});
        return out;
    }
    std::vector<Arr> arrows_from(Obj x) const {
        std::vector<Arr> out;
        for (Arr f = 0; f < s->base.n_arr(); ++f)
            if (s->base.dom(f) == x) out.push_back(f);
        return out;
    }
    std::vector<Arr> arrows_to(Obj x) const {
        std::vector<Arr> out;
        for (Arr f = 0; f < s->base.n_arr(); ++f)
            if (s->base.cod(f) == x) out.push_back(f);
        return out;
    }
    std::vector<Arr> hom_arrows(Obj x, Obj y) const {
        std::vector<Arr> out;
        for (Arr f = 0; f < s->base.n_arr(); ++f)
            if (s->base.dom(f) == x && s->base.cod(f) == y) out.push_back(f);
        return out;
    }
    std::vector<std::pair<Obj, Obj>> untensor_candidates(Obj o) const {
        std::vector<std::pair<Obj, Obj>> out;
        for (Obj x = 0; x < s->base.n_obj; ++x)
            for (Obj y = 0; y < s->base.n_obj; ++y)
                if (s->ten(x, y) == o) out.push_back({x, y});
        return out;
    }

    std::vector<Obj> objects() const {
        std::vector<Obj> out(s->base.n_obj);
        for (int i = 0; i < s->base.n_obj; ++i) out[i] = i;
        return out;
    }
    std::vector<Obj> leaf_objects() const { return objects(); }
    std::vector<Arr> leaf_arrows() const { return arrows(); }
    std::vector<Arr> arrows() const {
        std::vector<Arr> out(s->base.n_arr());
        for (int i = 0; i < s->base.n_arr(); ++i) out[i] = i;
        return out;
    }

    std::string obj_key(Obj x) const { return cat("o", x); }
    std::string arr_key(Arr f) const { return cat("m", f); }
    std::string obj_show(Obj x) const { return cat("x", x); }
    std::string arr_show(Arr f) const { return cat("f", f); }
};

template <class MA, class MB> struct Word;
template <class MA, class MB> struct TenEdge;

template <class MA, class MB>
using WordPtr = std::shared_ptr<const Word<MA, MB>>;
template <class MA, class MB>
using EdgePtr = std::shared_ptr<const TenEdge<MA, MB>>;

/// Formal word over Obj(A) x Obj(B): the unit, a pair leaf, or a tensor
/// node. Immutable; equality via the cached injective key.
template <class MA, class MB>
struct Word {
    enum class K { unit, pair, tensor };
    K k;
    typename MA::Obj a{};
    typename MB::Obj b{};
    WordPtr<MA, MB> left, right;
    std::string key;
    std::string shown;
    int leaves = 0;       // pair leaves only
    int total_leaves = 0; // unit and pair leaves

    bool is_unit() const { return k == K::unit; }
    bool is_pair() const { return k == K::pair; }
    bool is_tensor() const { return k == K::tensor; }
};

template <class MA, class MB>
bool word_eq(const WordPtr<MA, MB>& x, const WordPtr<MA, MB>& y) {
    return x->key == y->key;
}

/// Presentation context: the two base models.
template <class MA, class MB>
struct PresCtx {
    using ModelA = MA;
    using ModelB = MB;
    const MA& A;
    const MB& B;
};

template <class MA, class MB>
WordPtr<MA, MB> unit_word(const PresCtx<MA, MB>&) {
    auto w = std::make_shared<Word<MA, MB>>();
    w->k = Word<MA, MB>::K::unit;
    w->key = "I";
    w->shown = "I";
    w->leaves = 0;
    w->total_leaves = 1;
    return w;
}

template <class MA, class MB>
WordPtr<MA, MB> pair_word(const PresCtx<MA, MB>& p, typename MA::Obj a,
                          typename MB::Obj b) {
    auto w = std::make_shared<Word<MA, MB>>();
    w->k = Word<MA, MB>::K::pair;
    w->a = a;
    w->b = b;
    w->key = cat("(", p.A.obj_key(a), ",", p.B.obj_key(b), ")");
    w->shown = cat("(", p.A.obj_show(a), ",", p.B.obj_show(b), ")");
    w->leaves = 1;
    w->total_leaves = 1;
    return w;
}

template <class MA, class MB>
WordPtr<MA, MB> tensor_word(const WordPtr<MA, MB>& l,
                            const WordPtr<MA, MB>& r) {
    auto w = std::make_shared<Word<MA, MB>>();
    w->k = Word<MA, MB>::K::tensor;
    w->left = l;
    w->right = r;
    w->key = cat("(", l->key, "*", r->key, ")");
    w->shown = cat("(", l->shown, "*", r->shown, ")");
    w->leaves = l->leaves + r->leaves;
    w->total_leaves = l->total_leaves + r->total_leaves;
    return w;
}

enum class EdgeKind {
    assoc,
    assoc_inv,
    lunit,
    lunit_inv,
    runit,
    runit_inv,
    sym,
    alpha,
    beta,
    gamma,
    delta,
    tens_l, // f ⊗ b, f an arrow of A
    tens_r, // a ⊗ g, g an arrow of B
    whisk_l,
    whisk_r,
};

/// One generator edge of the tensor presentation's graph, with its
/// computed endpoints.
template <class MA, class MB>
struct TenEdge {
    EdgeKind k;
    WordPtr<MA, MB> x, y, z; // word arguments (canonical edges / whisker ctx)
    typename MA::Obj oa{}, oa2{};
    typename MB::Obj ob{}, ob2{};
    typename MA::Arr fa{};
    typename MB::Arr gb{};
    EdgePtr<MA, MB> inner;
    WordPtr<MA, MB> dom, cod;
    std::string key;
    std::string shown;

    bool is_canonical_kind() const {
        switch (k) {
            case EdgeKind::assoc:
            case EdgeKind::assoc_inv:
            case EdgeKind::lunit:
            case EdgeKind::lunit_inv:
            case EdgeKind::runit:
            case EdgeKind::runit_inv:
            case EdgeKind::sym: return true;
            default: return false;
        }
    }
};

namespace edges {

template <class MA, class MB>
std::shared_ptr<TenEdge<MA, MB>> mk(EdgeKind k, WordPtr<MA, MB> dom,
                                    WordPtr<MA, MB> cod, std::string key,
                                    std::string shown) {
    auto e = std::make_shared<TenEdge<MA, MB>>();
    e->k = k;
    e->dom = std::move(dom);
    e->cod = std::move(cod);
    e->key = std::move(key);
    e->shown = std::move(shown);
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> assoc(const PresCtx<MA, MB>&, const WordPtr<MA, MB>& x,
                      const WordPtr<MA, MB>& y, const WordPtr<MA, MB>& z) {
    auto e = mk<MA, MB>(EdgeKind::assoc, tensor_word(x, tensor_word(y, z)),
                        tensor_word(tensor_word(x, y), z),
                        cat("a[", x->key, ";", y->key, ";", z->key, "]"),
                        cat("assoc(", x->shown, ",", y->shown, ",", z->shown,
                            ")"));
    e->x = x;
    e->y = y;
    e->z = z;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> assoc_inv(const PresCtx<MA, MB>&, const WordPtr<MA, MB>& x,
                          const WordPtr<MA, MB>& y,
                          const WordPtr<MA, MB>& z) {
    auto e = mk<MA, MB>(EdgeKind::assoc_inv,
                        tensor_word(tensor_word(x, y), z),
                        tensor_word(x, tensor_word(y, z)),
                        cat("A[", x->key, ";", y->key, ";", z->key, "]"),
                        cat("assoc~(", x->shown, ",", y->shown, ",", z->shown,
                            ")"));
    e->x = x;
    e->y = y;
    e->z = z;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> lunit(const PresCtx<MA, MB>& p, const WordPtr<MA, MB>& x) {
    auto e = mk<MA, MB>(EdgeKind::lunit, tensor_word(unit_word(p), x), x,
                        cat("l[", x->key, "]"), cat("lunit(", x->shown, ")"));
    e->x = x;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> lunit_inv(const PresCtx<MA, MB>& p,
                          const WordPtr<MA, MB>& x) {
    auto e = mk<MA, MB>(EdgeKind::lunit_inv, x, tensor_word(unit_word(p), x),
                        cat("L[", x->key, "]"), cat("lunit~(", x->shown, ")"));
    e->x = x;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> runit(const PresCtx<MA, MB>& p, const WordPtr<MA, MB>& x) {
    auto e = mk<MA, MB>(EdgeKind::runit, tensor_word(x, unit_word(p)), x,
                        cat("r[", x->key, "]"), cat("runit(", x->shown, ")"));
    e->x = x;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> runit_inv(const PresCtx<MA, MB>& p,
                          const WordPtr<MA, MB>& x) {
    auto e = mk<MA, MB>(EdgeKind::runit_inv, x, tensor_word(x, unit_word(p)),
                        cat("R[", x->key, "]"), cat("runit~(", x->shown, ")"));
    e->x = x;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> sym(const PresCtx<MA, MB>&, const WordPtr<MA, MB>& x,
                    const WordPtr<MA, MB>& y) {
    auto e = mk<MA, MB>(EdgeKind::sym, tensor_word(x, y), tensor_word(y, x),
                        cat("s[", x->key, ";", y->key, "]"),
                        cat("sym(", x->shown, ",", y->shown, ")"));
    e->x = x;
    e->y = y;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> alpha(const PresCtx<MA, MB>& p, typename MB::Obj b) {
    auto e = mk<MA, MB>(EdgeKind::alpha, unit_word(p),
                        pair_word(p, p.A.unit(), b),
                        cat("al[", p.B.obj_key(b), "]"),
                        cat("alpha(", p.B.obj_show(b), ")"));
    e->ob = b;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> beta(const PresCtx<MA, MB>& p, typename MA::Obj a) {
    auto e = mk<MA, MB>(EdgeKind::beta, unit_word(p),
                        pair_word(p, a, p.B.unit()),
                        cat("be[", p.A.obj_key(a), "]"),
                        cat("beta(", p.A.obj_show(a), ")"));
    e->oa = a;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> gamma(const PresCtx<MA, MB>& p, typename MA::Obj a,
                      typename MA::Obj a2, typename MB::Obj b) {
    auto e = mk<MA, MB>(
        EdgeKind::gamma,
        tensor_word(pair_word(p, a, b), pair_word(p, a2, b)),
        pair_word(p, p.A.tensor(a, a2), b),
        cat("ga[", p.A.obj_key(a), ";", p.A.obj_key(a2), ";", p.B.obj_key(b),
            "]"),
        cat("gamma(", p.A.obj_show(a), ",", p.A.obj_show(a2), ",",
            p.B.obj_show(b), ")"));
    e->oa = a;
    e->oa2 = a2;
    e->ob = b;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> delta(const PresCtx<MA, MB>& p, typename MA::Obj a,
                      typename MB::Obj b, typename MB::Obj b2) {
    auto e = mk<MA, MB>(
        EdgeKind::delta,
        tensor_word(pair_word(p, a, b), pair_word(p, a, b2)),
        pair_word(p, a, p.B.tensor(b, b2)),
        cat("de[", p.A.obj_key(a), ";", p.B.obj_key(b), ";", p.B.obj_key(b2),
            "]"),
        cat("delta(", p.A.obj_show(a), ",", p.B.obj_show(b), ",",
            p.B.obj_show(b2), ")"));
    e->oa = a;
    e->ob = b;
    e->ob2 = b2;
    return e;
}

/// f ⊗ b for an arrow f of A.
template <class MA, class MB>
EdgePtr<MA, MB> tens_l(const PresCtx<MA, MB>& p, typename MA::Arr f,
                       typename MB::Obj b) {
    auto e = mk<MA, MB>(EdgeKind::tens_l, pair_word(p, p.A.dom(f), b),
                        pair_word(p, p.A.cod(f), b),
                        cat("tl[", p.A.arr_key(f), ";", p.B.obj_key(b), "]"),
                        cat("tens_l(", p.A.arr_show(f), ",", p.B.obj_show(b),
                            ")"));
    e->fa = f;
    e->ob = b;
    return e;
}

/// a ⊗ g for an arrow g of B.
template <class MA, class MB>
EdgePtr<MA, MB> tens_r(const PresCtx<MA, MB>& p, typename MA::Obj a,
                       typename MB::Arr g) {
    auto e = mk<MA, MB>(EdgeKind::tens_r, pair_word(p, a, p.B.dom(g)),
                        pair_word(p, a, p.B.cod(g)),
                        cat("tr[", p.A.obj_key(a), ";", p.B.arr_key(g), "]"),
                        cat("tens_r(", p.A.obj_show(a), ",", p.B.arr_show(g),
                            ")"));
    e->oa = a;
    e->gb = g;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> whisk_l(const WordPtr<MA, MB>& x,
                        const EdgePtr<MA, MB>& inner) {
    auto e = mk<MA, MB>(EdgeKind::whisk_l, tensor_word(x, inner->dom),
                        tensor_word(x, inner->cod),
                        cat("wl[", x->key, ";", inner->key, "]"),
                        cat("L[", x->shown, "]", inner->shown));
    e->x = x;
    e->inner = inner;
    return e;
}

template <class MA, class MB>
EdgePtr<MA, MB> whisk_r(const EdgePtr<MA, MB>& inner,
                        const WordPtr<MA, MB>& x) {
    auto e = mk<MA, MB>(EdgeKind::whisk_r, tensor_word(inner->dom, x),
                        tensor_word(inner->cod, x),
                        cat("wr[", inner->key, ";", x->key, "]"),
                        cat("R[", x->shown, "]", inner->shown));
    e->x = x;
    e->inner = inner;
    return e;
}

} // namespace edges

/// A composable sequence of generator edges; the empty sequence is the
/// identity at `dom`.
template <class MA, class MB>
struct TenPath {
    WordPtr<MA, MB> dom;
    std::vector<EdgePtr<MA, MB>> edges;

    WordPtr<MA, MB> cod() const { return edges.empty() ? dom : edges.back()->cod; }
    bool is_identity() const { return edges.empty(); }
    size_t size() const { return edges.size(); }

    std::string key() const {
        std::string k = "@" + dom->key;
        for (const auto& e : edges) k += "|" + e->key;
        return k;
    }
    std::string shown() const {
        if (edges.empty()) return cat("id(", dom->shown, ")");
        std::string s;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (i) s += ";";
            s += edges[i]->shown;
        }
        return s;
    }
};

template <class MA, class MB>
TenPath<MA, MB> identity_path(const WordPtr<MA, MB>& at) {
    return TenPath<MA, MB>{at, {}};
}

template <class MA, class MB>
TenPath<MA, MB> edge_path(const EdgePtr<MA, MB>& e) {
    return TenPath<MA, MB>{e->dom, {e}};
}

template <class MA, class MB>
TenPath<MA, MB> make_path(const WordPtr<MA, MB>& at,
                          std::vector<EdgePtr<MA, MB>> es) {
    TenPath<MA, MB> p{at, std::move(es)};
    WordPtr<MA, MB> cur = at;
    for (const auto& e : p.edges) {
        if (!word_eq(e->dom, cur))
            throw Error(cat("path is not composable at ", e->shown,
                            ": expected dom ", cur->shown, ", got ",
                            e->dom->shown));
        cur = e->cod;
    }
    return p;
}

/// q then p (q first): requires cod q = dom p.
template <class MA, class MB>
TenPath<MA, MB> concat(const TenPath<MA, MB>& q, const TenPath<MA, MB>& p) {
    if (!word_eq(q.cod(), p.dom))
        throw Error("concat: endpoint mismatch");
    TenPath<MA, MB> out{q.dom, q.edges};
    out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
    return out;
}

template <class MA, class MB>
TenPath<MA, MB> whisker_left_path(const WordPtr<MA, MB>& x,
                                  const TenPath<MA, MB>& p) {
    TenPath<MA, MB> out{tensor_word(x, p.dom), {}};
    for (const auto& e : p.edges) out.edges.push_back(edges::whisk_l(x, e));
    return out;
}

template <class MA, class MB>
TenPath<MA, MB> whisker_right_path(const TenPath<MA, MB>& p,
                                   const WordPtr<MA, MB>& x) {
    TenPath<MA, MB> out{tensor_word(p.dom, x), {}};
    for (const auto& e : p.edges) out.edges.push_back(edges::whisk_r(e, x));
    return out;
}

/// p ⊗ q as (p ⊗ cod q) ∘ (dom p ⊗ q).
template <class MA, class MB>
TenPath<MA, MB> tensor_path(const TenPath<MA, MB>& p,
                            const TenPath<MA, MB>& q) {
    return concat(whisker_left_path(p.dom, q),
                  whisker_right_path(p, q.cod()));
}

} // namespace smck

#endif
