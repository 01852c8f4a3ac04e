#ifndef SMCKIT_FINCAT_HPP
#define SMCKIT_FINCAT_HPP

#include <algorithm>
#include <tuple>

#include "smckit/common.hpp"

namespace smck {

constexpr int kMaxObjects = 64;
constexpr int kMaxArrows = 512;

struct Arrow {
    ArrId id;
    ObjId dom;
    ObjId cod;
};

/// A finite category given by explicit tables. Objects and arrows are
/// dense 0-based ids; `comp` is a row-major |Arr|x|Arr| table with
/// comp[g*n+f] = g∘f, or -1 when cod f != dom g.
struct FinCat {
    int n_obj = 0;
    std::vector<Arrow> arrows;
    std::vector<ArrId> identity; // per object
    std::vector<ArrId> comp;     // n_arr * n_arr, -1 = undefined

    int n_arr() const { return static_cast<int>(arrows.size()); }
    ObjId dom(ArrId f) const { return arrows[f].dom; }
    ObjId cod(ArrId f) const { return arrows[f].cod; }
    ArrId id(ObjId x) const { return identity[x]; }

    bool composable(ArrId g, ArrId f) const { return cod(f) == dom(g); }

    ArrId comp_at(ArrId g, ArrId f) const { return comp[g * n_arr() + f]; }
    ArrId& comp_at(ArrId g, ArrId f) { return comp[g * n_arr() + f]; }
};

inline FinCat make_fincat(int n_obj, int n_arr) {
    if (n_obj > kMaxObjects || n_arr > kMaxArrows)
        throw CapError(cat("category too large: ", n_obj, " objects, ", n_arr,
                           " arrows"));
    if (n_obj < 0 || n_arr < 0) throw Error("negative size");
    FinCat c;
    c.n_obj = n_obj;
    c.arrows.resize(n_arr);
    for (int i = 0; i < n_arr; ++i) c.arrows[i] = Arrow{i, -1, -1};
    c.identity.assign(n_obj, -1);
    c.comp.assign(static_cast<size_t>(n_arr) * n_arr, -1);
    return c;
}

/// Composition by table lookup. Throws on a non-composable pair.
inline ArrId compose(const FinCat& c, ArrId g, ArrId f) {
    if (f < 0 || f >= c.n_arr() || g < 0 || g >= c.n_arr())
        throw Error("compose: arrow id out of range");
    if (!c.composable(g, f))
        throw Error(cat("compose: cod(", f, ") = ", c.cod(f), " != dom(", g,
                        ") = ", c.dom(g)));
    ArrId r = c.comp_at(g, f);
    if (r < 0) throw Error("compose: table entry missing for composable pair");
    return r;
}

/// Compose a chain f_n ∘ ... ∘ f_1 given in application order f_1,...,f_n.
inline ArrId compose_chain(const FinCat& c, ObjId at,
                           const std::vector<ArrId>& fs) {
    ArrId acc = c.id(at);
    for (ArrId f : fs) acc = compose(c, f, acc);
    return acc;
}

inline bool is_identity(const FinCat& c, ArrId f) {
    return c.dom(f) == c.cod(f) && c.id(c.dom(f)) == f;
}

/// Finds a two-sided inverse by table search, -1 if none.
inline ArrId find_inverse(const FinCat& c, ArrId f) {
    for (ArrId g = 0; g < c.n_arr(); ++g) {
        if (c.dom(g) != c.cod(f) || c.cod(g) != c.dom(f)) continue;
        if (c.comp_at(g, f) == c.id(c.dom(f)) &&
            c.comp_at(f, g) == c.id(c.cod(f)))
            return g;
    }
    return -1;
}

inline ArrId inverse(const FinCat& c, ArrId f) {
    ArrId g = find_inverse(c, f);
    if (g < 0) throw Error(cat("arrow ", f, " is not invertible"));
    return g;
}

/// Checks every FinCat invariant exhaustively and reports each violated
/// instance. Structural problems (dangling ids, missing table entries)
/// are reported with structural=true.
inline Report validate_category(const FinCat& c) {
    Report r;
    const int no = c.n_obj, na = c.n_arr();
    for (ArrId f = 0; f < na; ++f) {
        if (c.dom(f) < 0 || c.dom(f) >= no || c.cod(f) < 0 || c.cod(f) >= no)
            add(r, "structure", cat("arrow ", f, " has dangling endpoint"),
                true);
        if (c.arrows[f].id != f)
            add(r, "structure", cat("arrow ", f, " mislabelled"), true);
    }
    if (static_cast<int>(c.identity.size()) != no)
        add(r, "structure", "identity table has wrong size", true);
    if (c.comp.size() != static_cast<size_t>(na) * na)
        add(r, "structure", "comp table has wrong size", true);
    if (!r.empty()) return r; // tables unusable, stop before law checks

    for (ObjId x = 0; x < no; ++x) {
        ArrId i = c.identity[x];
        if (i < 0 || i >= na) {
            add(r, "structure", cat("identity of object ", x, " dangling"),
                true);
            continue;
        }
        if (c.dom(i) != x || c.cod(i) != x)
            add(r, "identity-endpoints",
                cat("identity of ", x, " has dom/cod ", c.dom(i), "/",
                    c.cod(i)));
    }
    for (ArrId g = 0; g < na; ++g)
        for (ArrId f = 0; f < na; ++f) {
            ArrId h = c.comp_at(g, f);
            if (!c.composable(g, f)) {
                if (h != -1)
                    add(r, "structure",
                        cat("comp defined on non-composable (", g, ",", f, ")"),
                        true);
                continue;
            }
            if (h < 0) {
                add(r, "structure",
                    cat("comp missing on composable (", g, ",", f, ")"), true);
                continue;
            }
            if (h >= na) {
                add(r, "structure", cat("comp(", g, ",", f, ") dangling"),
                    true);
                continue;
            }
            if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
                add(r, "comp-endpoints",
                    cat("comp(", g, ",", f, ") has wrong endpoints"));
        }
    if (!r.empty()) return r;

    for (ArrId f = 0; f < na; ++f) {
        if (c.comp_at(f, c.id(c.dom(f))) != f)
            add(r, "right-identity", cat("f=", f));
        if (c.comp_at(c.id(c.cod(f)), f) != f)
            add(r, "left-identity", cat("f=", f));
    }
    for (ArrId h = 0; h < na; ++h)
        for (ArrId g = 0; g < na; ++g) {
            if (!c.composable(h, g)) continue;
            for (ArrId f = 0; f < na; ++f) {
                if (!c.composable(g, f)) continue;
                if (c.comp_at(c.comp_at(h, g), f) !=
                    c.comp_at(h, c.comp_at(g, f)))
                    add(r, "associativity", cat("triple (", h, ",", g, ",", f, ")"));
            }
        }
    return r;
}

struct FunctorData {
    std::vector<ObjId> obj_map;
    std::vector<ArrId> arr_map;

    ObjId obj(ObjId x) const { return obj_map[x]; }
    ArrId arr(ArrId f) const { return arr_map[f]; }
};

inline FunctorData identity_functor_data(const FinCat& c) {
    FunctorData f;
    f.obj_map.resize(c.n_obj);
    f.arr_map.resize(c.n_arr());
    for (int i = 0; i < c.n_obj; ++i) f.obj_map[i] = i;
    for (int i = 0; i < c.n_arr(); ++i) f.arr_map[i] = i;
    return f;
}

inline FunctorData compose_functor_data(const FunctorData& g,
                                        const FunctorData& f) {
    FunctorData h;
    h.obj_map.reserve(f.obj_map.size());
    h.arr_map.reserve(f.arr_map.size());
    for (ObjId x : f.obj_map) h.obj_map.push_back(g.obj_map[x]);
    for (ArrId a : f.arr_map) h.arr_map.push_back(g.arr_map[a]);
    return h;
}

inline bool operator==(const FunctorData& a, const FunctorData& b) {
    return a.obj_map == b.obj_map && a.arr_map == b.arr_map;
}

inline Report validate_functor(const FunctorData& f, const FinCat& dom,
                               const FinCat& cod) {
    Report r;
    if (static_cast<int>(f.obj_map.size()) != dom.n_obj ||
        static_cast<int>(f.arr_map.size()) != dom.n_arr()) {
        add(r, "structure", "functor maps not total", true);
        return r;
    }
    for (ObjId x = 0; x < dom.n_obj; ++x)
        if (f.obj(x) < 0 || f.obj(x) >= cod.n_obj)
            add(r, "structure", cat("object image of ", x, " dangling"), true);
    for (ArrId a = 0; a < dom.n_arr(); ++a)
        if (f.arr(a) < 0 || f.arr(a) >= cod.n_arr())
            add(r, "structure", cat("arrow image of ", a, " dangling"), true);
    if (!r.empty()) return r;

    for (ArrId a = 0; a < dom.n_arr(); ++a) {
        if (cod.dom(f.arr(a)) != f.obj(dom.dom(a)) ||
            cod.cod(f.arr(a)) != f.obj(dom.cod(a)))
            add(r, "functor-endpoints", cat("arrow ", a));
    }
    for (ObjId x = 0; x < dom.n_obj; ++x)
        if (f.arr(dom.id(x)) != cod.id(f.obj(x)))
            add(r, "functor-identity", cat("object ", x));
    for (ArrId g = 0; g < dom.n_arr(); ++g)
        for (ArrId a = 0; a < dom.n_arr(); ++a) {
            if (!dom.composable(g, a)) continue;
            if (f.arr(dom.comp_at(g, a)) != cod.comp_at(f.arr(g), f.arr(a)))
                add(r, "functor-composition", cat("pair (", g, ",", a, ")"));
        }
    return r;
}

struct NatTransData {
    std::vector<ArrId> components; // per object of the domain category

    ArrId at(ObjId x) const { return components[x]; }
};

inline bool operator==(const NatTransData& a, const NatTransData& b) {
    return a.components == b.components;
}

inline Report validate_nattrans(const NatTransData& t, const FunctorData& f,
                                const FunctorData& g, const FinCat& dom,
                                const FinCat& cod) {
    Report r;
    if (static_cast<int>(t.components.size()) != dom.n_obj) {
        add(r, "structure", "components not total", true);
        return r;
    }
    for (ObjId x = 0; x < dom.n_obj; ++x) {
        ArrId c = t.at(x);
        if (c < 0 || c >= cod.n_arr()) {
            add(r, "structure", cat("component at ", x, " dangling"), true);
            continue;
        }
        if (cod.dom(c) != f.obj(x) || cod.cod(c) != g.obj(x))
            add(r, "structure",
                cat("component at ", x, " has wrong endpoints"), true);
    }
    if (!r.empty()) return r;
    for (ArrId a = 0; a < dom.n_arr(); ++a) {
        ObjId x = dom.dom(a), y = dom.cod(a);
        if (cod.comp_at(t.at(y), f.arr(a)) != cod.comp_at(g.arr(a), t.at(x)))
            add(r, "naturality", cat("arrow ", a));
    }
    return r;
}

struct ProductCat {
    FinCat cat;
    FunctorData p1;
    FunctorData p2;
    // pairing tables
    int d_obj = 0; // |Obj(second factor)|
    int d_arr = 0;

    ObjId pair_obj(ObjId x, ObjId y) const { return x * d_obj + y; }
    ArrId pair_arr(ArrId f, ArrId g) const { return f * d_arr + g; }
};

/// Cartesian product with pointwise composition; object (x,y) gets id
/// x*|Obj(d)|+y, arrow (f,g) gets id f*|Arr(d)|+g.
inline ProductCat product_category(const FinCat& c, const FinCat& d) {
    ProductCat p;
    p.d_obj = d.n_obj;
    p.d_arr = d.n_arr();
    p.cat = make_fincat(c.n_obj * d.n_obj, c.n_arr() * d.n_arr());
    p.p1.obj_map.resize(p.cat.n_obj);
    p.p1.arr_map.resize(p.cat.n_arr());
    p.p2 = p.p1;
    for (ObjId x = 0; x < c.n_obj; ++x)
        for (ObjId y = 0; y < d.n_obj; ++y) {
            ObjId o = p.pair_obj(x, y);
            p.cat.identity[o] = p.pair_arr(c.id(x), d.id(y));
            p.p1.obj_map[o] = x;
            p.p2.obj_map[o] = y;
        }
    for (ArrId f = 0; f < c.n_arr(); ++f)
        for (ArrId g = 0; g < d.n_arr(); ++g) {
            ArrId a = p.pair_arr(f, g);
            p.cat.arrows[a] =
                Arrow{a, p.pair_obj(c.dom(f), d.dom(g)),
                      p.pair_obj(c.cod(f), d.cod(g))};
            p.p1.arr_map[a] = f;
            p.p2.arr_map[a] = g;
        }
    for (ArrId f2 = 0; f2 < c.n_arr(); ++f2)
        for (ArrId g2 = 0; g2 < d.n_arr(); ++g2)
            for (ArrId f1 = 0; f1 < c.n_arr(); ++f1)
                for (ArrId g1 = 0; g1 < d.n_arr(); ++g1) {
                    if (!c.composable(f2, f1) || !d.composable(g2, g1))
                        continue;
                    p.cat.comp_at(p.pair_arr(f2, g2), p.pair_arr(f1, g1)) =
                        p.pair_arr(c.comp_at(f2, f1), d.comp_at(g2, g1));
                }
    return p;
}

} // namespace smck

#endif
