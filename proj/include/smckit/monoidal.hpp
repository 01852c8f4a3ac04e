#ifndef SMCKIT_MONOIDAL_HPP
#define SMCKIT_MONOIDAL_HPP

#include "smckit/fincat.hpp"

namespace smck {

/// A symmetric monoidal structure on a finite category, all data as
/// tables: tensor on objects/arrows, unit object, and the components of
/// the associator, unitors and symmetry.
struct SmcStructure {
    FinCat base;
    std::vector<ObjId> tensor_obj; // n_obj * n_obj
    std::vector<ArrId> tensor_arr; // n_arr * n_arr
    ObjId unit = 0;
    std::vector<ArrId> assoc;      // n_obj^3, a_{x,y,z}: x⊗(y⊗z) -> (x⊗y)⊗z
    std::vector<ArrId> lunit;      // l_x: I⊗x -> x
    std::vector<ArrId> runit;      // r_x: x⊗I -> x
    std::vector<ArrId> sym;        // s_{x,y}: x⊗y -> y⊗x

    ObjId ten(ObjId x, ObjId y) const { return tensor_obj[x * base.n_obj + y]; }
    ArrId ten_arr(ArrId f, ArrId g) const {
        return tensor_arr[f * base.n_arr() + g];
    }
    ArrId a(ObjId x, ObjId y, ObjId z) const {
        return assoc[(x * base.n_obj + y) * base.n_obj + z];
    }
    ArrId& a(ObjId x, ObjId y, ObjId z) {
        return assoc[(x * base.n_obj + y) * base.n_obj + z];
    }
    ArrId l(ObjId x) const { return lunit[x]; }
    ArrId r(ObjId x) const { return runit[x]; }
    ArrId s(ObjId x, ObjId y) const { return sym[x * base.n_obj + y]; }
    ArrId& s_at(ObjId x, ObjId y) { return sym[x * base.n_obj + y]; }

    ArrId a_inv(ObjId x, ObjId y, ObjId z) const {
        return inverse(base, a(x, y, z));
    }
    ArrId l_inv(ObjId x) const { return inverse(base, l(x)); }
    ArrId r_inv(ObjId x) const { return inverse(base, r(x)); }
};

inline SmcStructure make_smc(FinCat base_cat) {
    SmcStructure s;
    s.base = std::move(base_cat);
    const int no = s.base.n_obj, na = s.base.n_arr();
    s.tensor_obj.assign(static_cast<size_t>(no) * no, -1);
    s.tensor_arr.assign(static_cast<size_t>(na) * na, -1);
    s.assoc.assign(static_cast<size_t>(no) * no * no, -1);
    s.lunit.assign(no, -1);
    s.runit.assign(no, -1);
    s.sym.assign(static_cast<size_t>(no) * no, -1);
    return s;
}

/// Materializes the tensor as FunctorData on product_category(base, base).
inline FunctorData tensor_functor_data(const SmcStructure& s,
                                       const ProductCat& p) {
    FunctorData f;
    f.obj_map.resize(p.cat.n_obj);
    f.arr_map.resize(p.cat.n_arr());
    for (ObjId x = 0; x < s.base.n_obj; ++x)
        for (ObjId y = 0; y < s.base.n_obj; ++y)
            f.obj_map[p.pair_obj(x, y)] = s.ten(x, y);
    for (ArrId a = 0; a < s.base.n_arr(); ++a)
        for (ArrId b = 0; b < s.base.n_arr(); ++b)
            f.arr_map[p.pair_arr(a, b)] = s.ten_arr(a, b);
    return f;
}

/// Exhaustive check of every symmetric monoidal category axiom; the
/// report names each violated instance.
inline Report validate_smc(const SmcStructure& s) {
    Report r = validate_category(s.base);
    if (!r.empty()) return r;
    const FinCat& c = s.base;
    const int no = c.n_obj, na = c.n_arr();

    if (static_cast<int>(s.tensor_obj.size()) != no * no ||
        static_cast<int>(s.tensor_arr.size()) != na * na ||
        static_cast<int>(s.assoc.size()) != no * no * no ||
        static_cast<int>(s.lunit.size()) != no ||
        static_cast<int>(s.runit.size()) != no ||
        static_cast<int>(s.sym.size()) != no * no ||
        s.unit < 0 || s.unit >= no) {
        add(r, "structure", "monoidal tables missing or wrong size", true);
        return r;
    }
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            if (s.ten(x, y) < 0 || s.ten(x, y) >= no)
                add(r, "structure", cat("tensor_obj(", x, ",", y, ") dangling"),
                    true);
    for (ArrId f = 0; f < na; ++f)
        for (ArrId g = 0; g < na; ++g)
            if (s.ten_arr(f, g) < 0 || s.ten_arr(f, g) >= na)
                add(r, "structure", cat("tensor_arr(", f, ",", g, ") dangling"),
                    true);
    if (!r.empty()) return r;

    // tensor is a functor (base x base) -> base
    {
        ProductCat p = product_category(c, c);
        Report fr = validate_functor(tensor_functor_data(s, p), p.cat, c);
        for (auto& v : fr)
            add(r, "tensor-functor", v.law + " " + v.detail, v.structural);
    }

    auto chk_component = [&](ArrId f, ObjId want_dom, ObjId want_cod,
                             const std::string& who) {
        if (f < 0 || f >= na) {
            add(r, "structure", who + " dangling", true);
            return false;
        }
        if (c.dom(f) != want_dom || c.cod(f) != want_cod) {
            add(r, "structure", who + " has wrong endpoints", true);
            return false;
        }
        if (find_inverse(c, f) < 0) {
            add(r, "invertibility", who);
            return false;
        }
        return true;
    };

    bool shape_ok = true;
    for (ObjId x = 0; x < no; ++x) {
        shape_ok &= chk_component(s.l(x), s.ten(s.unit, x), x,
                                  cat("lunit(", x, ")"));
        shape_ok &= chk_component(s.r(x), s.ten(x, s.unit), x,
                                  cat("runit(", x, ")"));
        for (ObjId y = 0; y < no; ++y) {
            shape_ok &= chk_component(s.s(x, y), s.ten(x, y), s.ten(y, x),
                                      cat("sym(", x, ",", y, ")"));
            for (ObjId z = 0; z < no; ++z)
                shape_ok &= chk_component(
                    s.a(x, y, z), s.ten(x, s.ten(y, z)), s.ten(s.ten(x, y), z),
                    cat("assoc(", x, ",", y, ",", z, ")"));
        }
    }
    if (!shape_ok) return r;

    // naturality of a, l, r, s in every argument
    for (ArrId f = 0; f < na; ++f) {
        ObjId x = c.dom(f), x2 = c.cod(f);
        for (ObjId y = 0; y < no; ++y) {
            for (ObjId z = 0; z < no; ++z) {
                ArrId idy = c.id(y), idz = c.id(z);
                if (c.comp_at(s.a(x2, y, z), s.ten_arr(f, s.ten_arr(idy, idz))) !=
                    c.comp_at(s.ten_arr(s.ten_arr(f, idy), idz), s.a(x, y, z)))
                    add(r, "nat-assoc",
                        cat("arg1 f=", f, " y=", y, " z=", z));
                if (c.comp_at(s.a(y, x2, z), s.ten_arr(idy, s.ten_arr(f, idz))) !=
                    c.comp_at(s.ten_arr(s.ten_arr(idy, f), idz), s.a(y, x, z)))
                    add(r, "nat-assoc",
                        cat("arg2 f=", f, " y=", y, " z=", z));
                if (c.comp_at(s.a(y, z, x2), s.ten_arr(idy, s.ten_arr(idz, f))) !=
                    c.comp_at(s.ten_arr(s.ten_arr(idy, idz), f), s.a(y, z, x)))
                    add(r, "nat-assoc",
                        cat("arg3 f=", f, " y=", y, " z=", z));
            }
            ArrId idy = c.id(y);
            if (c.comp_at(s.s(x2, y), s.ten_arr(f, idy)) !=
                c.comp_at(s.ten_arr(idy, f), s.s(x, y)))
                add(r, "nat-sym", cat("arg1 f=", f, " y=", y));
            if (c.comp_at(s.s(y, x2), s.ten_arr(idy, f)) !=
                c.comp_at(s.ten_arr(f, idy), s.s(y, x)))
                add(r, "nat-sym", cat("arg2 f=", f, " y=", y));
        }
        ArrId idI = c.id(s.unit);
        if (c.comp_at(s.l(x2), s.ten_arr(idI, f)) != c.comp_at(f, s.l(x)))
            add(r, "nat-lunit", cat("f=", f));
        if (c.comp_at(s.r(x2), s.ten_arr(f, idI)) != c.comp_at(f, s.r(x)))
            add(r, "nat-runit", cat("f=", f));
    }

    // pentagon
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            for (ObjId z = 0; z < no; ++z)
                for (ObjId w = 0; w < no; ++w) {
                    ArrId top = c.comp_at(s.a(s.ten(x, y), z, w),
                                          s.a(x, y, s.ten(z, w)));
                    ArrId bot = c.comp_at(
                        s.ten_arr(s.a(x, y, z), c.id(w)),
                        c.comp_at(s.a(x, s.ten(y, z), w),
                                  s.ten_arr(c.id(x), s.a(y, z, w))));
                    if (top != bot)
                        add(r, "pentagon",
                            cat("(", x, ",", y, ",", z, ",", w, ")"));
                }
    // triangle
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y) {
            ArrId via_a = c.comp_at(s.ten_arr(s.r(x), c.id(y)), s.a(x, s.unit, y));
            ArrId direct = s.ten_arr(c.id(x), s.l(y));
            if (via_a != direct) add(r, "triangle", cat("(", x, ",", y, ")"));
        }
    // symmetry involution
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            if (c.comp_at(s.s(y, x), s.s(x, y)) != c.id(s.ten(x, y)))
                add(r, "sym-involution", cat("(", x, ",", y, ")"));
    // hexagon
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            for (ObjId z = 0; z < no; ++z) {
                ArrId top = c.comp_at(
                    s.a(z, x, y),
                    c.comp_at(s.s(s.ten(x, y), z), s.a(x, y, z)));
                ArrId bot = c.comp_at(
                    s.ten_arr(s.s(x, z), c.id(y)),
                    c.comp_at(s.a(x, z, y), s.ten_arr(c.id(x), s.s(y, z))));
                if (top != bot)
                    add(r, "hexagon", cat("(", x, ",", y, ",", z, ")"));
            }
    // unit symmetry
    for (ObjId x = 0; x < no; ++x)
        if (c.comp_at(s.l(x), s.s(x, s.unit)) != s.r(x))
            add(r, "unit-sym", cat("x=", x));
    return r;
}

/// Canonical middle-four interchange (w⊗x)⊗(y⊗z) -> (w⊗y)⊗(x⊗z),
/// composed from associators and one symmetry.
inline ArrId middle_four(const SmcStructure& s, ObjId w, ObjId x, ObjId y,
                         ObjId z) {
    const FinCat& c = s.base;
    ArrId step1 = inverse(c, s.a(w, x, s.ten(y, z)));
    ArrId step2 = s.ten_arr(c.id(w), s.a(x, y, z));
    ArrId step3 = s.ten_arr(c.id(w), s.ten_arr(s.s(x, y), c.id(z)));
    ArrId step4 = s.ten_arr(c.id(w), inverse(c, s.a(y, x, z)));
    ArrId step5 = s.a(w, y, s.ten(x, z));
    return compose_chain(c, c.dom(step1),
                         {step1, step2, step3, step4, step5});
}

/// Canonical iso I -> I⊗I (inverse of r_I; equal to l_I⁻¹ in any
/// valid structure).
inline ArrId unit_split(const SmcStructure& s) {
    return inverse(s.base, s.r(s.unit));
}

enum class Strictness { strict, strong, lax };

inline const char* to_string(Strictness st) {
    switch (st) {
        case Strictness::strict: return "strict";
        case Strictness::strong: return "strong";
        default: return "lax";
    }
}

/// A symmetric monoidal functor (F, F0, F2). f2 is indexed over ordered
/// pairs of domain objects.
struct MonFunctor {
    FunctorData under;
    ArrId f0 = -1;
    std::vector<ArrId> f2; // dom.n_obj^2
    Strictness strictness = Strictness::lax;

    ObjId obj(ObjId x) const { return under.obj(x); }
    ArrId arr(ArrId f) const { return under.arr(f); }
    ArrId f2_at(ObjId x, ObjId y, int n_obj) const {
        return f2[x * n_obj + y];
    }
};

inline bool same_data(const MonFunctor& a, const MonFunctor& b) {
    return a.under == b.under && a.f0 == b.f0 && a.f2 == b.f2;
}

inline MonFunctor identity_mon_functor(const SmcStructure& s) {
    MonFunctor f;
    f.under = identity_functor_data(s.base);
    f.f0 = s.base.id(s.unit);
    f.f2.resize(static_cast<size_t>(s.base.n_obj) * s.base.n_obj);
    for (ObjId x = 0; x < s.base.n_obj; ++x)
        for (ObjId y = 0; y < s.base.n_obj; ++y)
            f.f2[x * s.base.n_obj + y] = s.base.id(s.ten(x, y));
    f.strictness = Strictness::strict;
    return f;
}

inline Strictness classify_strictness(const MonFunctor& f,
                                      const SmcStructure& dom,
                                      const SmcStructure& cod) {
    bool strict = is_identity(cod.base, f.f0);
    bool strong = find_inverse(cod.base, f.f0) >= 0;
    for (ObjId x = 0; x < dom.base.n_obj && strong; ++x)
        for (ObjId y = 0; y < dom.base.n_obj && strong; ++y) {
            ArrId c = f.f2_at(x, y, dom.base.n_obj);
            strict = strict && is_identity(cod.base, c);
            strong = strong && find_inverse(cod.base, c) >= 0;
        }
    if (strict) return Strictness::strict;
    if (strong) return Strictness::strong;
    return Strictness::lax;
}

/// Validates the functor axioms plus symmetry; also checks that the
/// declared strictness flag is consistent with the actual structure.
inline Report validate_monoidal_functor(const MonFunctor& f,
                                        const SmcStructure& dom,
                                        const SmcStructure& cod) {
    Report r = validate_functor(f.under, dom.base, cod.base);
    if (!r.empty()) return r;
    const FinCat& d = dom.base;
    const FinCat& c = cod.base;
    const int no = d.n_obj;

    if (f.f0 < 0 || f.f0 >= c.n_arr() ||
        static_cast<int>(f.f2.size()) != no * no) {
        add(r, "structure", "monoidal structure missing", true);
        return r;
    }
    if (c.dom(f.f0) != cod.unit || c.cod(f.f0) != f.obj(dom.unit)) {
        add(r, "structure", "f0 has wrong endpoints", true);
        return r;
    }
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y) {
            ArrId t = f.f2_at(x, y, no);
            if (t < 0 || t >= c.n_arr() ||
                c.dom(t) != cod.ten(f.obj(x), f.obj(y)) ||
                c.cod(t) != f.obj(dom.ten(x, y))) {
                add(r, "structure", cat("f2(", x, ",", y, ") malformed"),
                    true);
                return r;
            }
        }

    // naturality of f2 in both arguments
    for (ArrId p = 0; p < d.n_arr(); ++p)
        for (ArrId q = 0; q < d.n_arr(); ++q) {
            ObjId x = d.dom(p), y = d.dom(q);
            ObjId x2 = d.cod(p), y2 = d.cod(q);
            ArrId lhs = c.comp_at(f.f2_at(x2, y2, no),
                                  cod.ten_arr(f.arr(p), f.arr(q)));
            ArrId rhs = c.comp_at(f.arr(dom.ten_arr(p, q)), f.f2_at(x, y, no));
            if (lhs != rhs) add(r, "nat-f2", cat("(", p, ",", q, ")"));
        }

    for (ObjId x = 0; x < no; ++x) {
        // functor-runit: r_{Fx} = F(r_x) ∘ f2_{x,I} ∘ (1 ⊗ f0)
        ArrId leg_r = c.comp_at(
            f.arr(dom.r(x)),
            c.comp_at(f.f2_at(x, dom.unit, no), cod.ten_arr(c.id(f.obj(x)), f.f0)));
        if (leg_r != cod.r(f.obj(x))) add(r, "functor-runit", cat("x=", x));
        // functor-lunit
        ArrId leg_l = c.comp_at(
            f.arr(dom.l(x)),
            c.comp_at(f.f2_at(dom.unit, x, no), cod.ten_arr(f.f0, c.id(f.obj(x)))));
        if (leg_l != cod.l(f.obj(x))) add(r, "functor-lunit", cat("x=", x));
        for (ObjId y = 0; y < no; ++y) {
            // functor-sym
            ArrId via = c.comp_at(f.arr(dom.s(x, y)), f.f2_at(x, y, no));
            ArrId other =
                c.comp_at(f.f2_at(y, x, no), cod.s(f.obj(x), f.obj(y)));
            if (via != other) add(r, "functor-sym", cat("(", x, ",", y, ")"));
            for (ObjId z = 0; z < no; ++z) {
                // functor-assoc
                ArrId left = c.comp_at(
                    f.arr(dom.a(x, y, z)),
                    c.comp_at(f.f2_at(x, dom.ten(y, z), no),
                              cod.ten_arr(c.id(f.obj(x)), f.f2_at(y, z, no))));
                ArrId right = c.comp_at(
                    f.f2_at(dom.ten(x, y), z, no),
                    c.comp_at(cod.ten_arr(f.f2_at(x, y, no), c.id(f.obj(z))),
                              cod.a(f.obj(x), f.obj(y), f.obj(z))));
                if (left != right)
                    add(r, "functor-assoc", cat("(", x, ",", y, ",", z, ")"));
            }
        }
    }

    Strictness actual = classify_strictness(f, dom, cod);
    if (f.strictness == Strictness::strict && actual != Strictness::strict)
        add(r, "strictness-flag", "declared strict but structure is not");
    if (f.strictness == Strictness::strong && actual == Strictness::lax)
        add(r, "strictness-flag", "declared strong but structure is not");
    return r;
}

struct MonNatTrans {
    NatTransData under;

    ArrId at(ObjId x) const { return under.at(x); }
};

inline bool same_data(const MonNatTrans& a, const MonNatTrans& b) {
    return a.under == b.under;
}

inline Report validate_monoidal_nattrans(const MonNatTrans& t,
                                         const MonFunctor& f,
                                         const MonFunctor& g,
                                         const SmcStructure& dom,
                                         const SmcStructure& cod) {
    Report r =
        validate_nattrans(t.under, f.under, g.under, dom.base, cod.base);
    if (!r.empty()) return r;
    const FinCat& c = cod.base;
    const int no = dom.base.n_obj;
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y) {
            ArrId lhs = c.comp_at(t.at(dom.ten(x, y)), f.f2_at(x, y, no));
            ArrId rhs =
                c.comp_at(g.f2_at(x, y, no), cod.ten_arr(t.at(x), t.at(y)));
            if (lhs != rhs) add(r, "monat-tensor", cat("(", x, ",", y, ")"));
        }
    if (c.comp_at(t.at(dom.unit), f.f0) != g.f0)
        add(r, "monat-unit", "component at unit");
    return r;
}

inline MonNatTrans identity_mon_nattrans(const MonFunctor& f,
                                         const SmcStructure& cod,
                                         int dom_n_obj) {
    MonNatTrans t;
    t.under.components.resize(dom_n_obj);
    for (ObjId x = 0; x < dom_n_obj; ++x)
        t.under.components[x] = cod.base.id(f.obj(x));
    return t;
}

/// Composite symmetric monoidal functor: (GF)0 = G(F0)∘G0 and
/// (GF)2 = G(F2)∘G2 at image objects.
inline MonFunctor compose_monoidal(const MonFunctor& g, const MonFunctor& f,
                                   const SmcStructure& a,
                                   const SmcStructure& b,
                                   const SmcStructure& c) {
    MonFunctor h;
    h.under = compose_functor_data(g.under, f.under);
    h.f0 = c.base.comp_at(g.arr(f.f0), g.f0);
    const int nao = a.base.n_obj;
    h.f2.resize(static_cast<size_t>(nao) * nao);
    for (ObjId x = 0; x < nao; ++x)
        for (ObjId y = 0; y < nao; ++y)
            h.f2[x * nao + y] = c.base.comp_at(
                g.arr(f.f2_at(x, y, nao)),
                g.f2_at(f.obj(x), f.obj(y), b.base.n_obj));
    if (f.strictness == Strictness::strict &&
        g.strictness == Strictness::strict)
        h.strictness = Strictness::strict;
    else if (f.strictness != Strictness::lax && g.strictness != Strictness::lax)
        h.strictness = Strictness::strong;
    else
        h.strictness = Strictness::lax;
    return h;
}

inline SmcStructure terminal_smc() {
    FinCat c = make_fincat(1, 1);
    c.arrows[0] = Arrow{0, 0, 0};
    c.identity[0] = 0;
    c.comp_at(0, 0) = 0;
    SmcStructure s = make_smc(std::move(c));
    s.tensor_obj[0] = 0;
    s.tensor_arr[0] = 0;
    s.unit = 0;
    s.assoc[0] = 0;
    s.lunit[0] = 0;
    s.runit[0] = 0;
    s.sym[0] = 0;
    return s;
}

/// The constant functor to the unit, as the strong composite through the
/// terminal structure: f0 = id, f2 = r_I (= l_I).
inline MonFunctor constant_unit_functor(const SmcStructure& dom,
                                        const SmcStructure& cod) {
    MonFunctor f;
    f.under.obj_map.assign(dom.base.n_obj, cod.unit);
    f.under.arr_map.assign(dom.base.n_arr(), cod.base.id(cod.unit));
    f.f0 = cod.base.id(cod.unit);
    f.f2.assign(static_cast<size_t>(dom.base.n_obj) * dom.base.n_obj,
                cod.r(cod.unit));
    f.strictness = Strictness::strong;
    return f;
}

struct ProductSmc {
    SmcStructure smc;
    ProductCat prod;
    MonFunctor p1;
    MonFunctor p2;
};

/// Pointwise symmetric monoidal structure on the product; both
/// projections are strict.
inline ProductSmc product_smc(const SmcStructure& b, const SmcStructure& c) {
    ProductSmc out;
    out.prod = product_category(b.base, c.base);
    out.smc = make_smc(out.prod.cat);
    SmcStructure& s = out.smc;
    const ProductCat& p = out.prod;
    s.unit = p.pair_obj(b.unit, c.unit);
    for (ObjId x1 = 0; x1 < b.base.n_obj; ++x1)
        for (ObjId y1 = 0; y1 < c.base.n_obj; ++y1) {
            ObjId o1 = p.pair_obj(x1, y1);
            s.lunit[o1] = p.pair_arr(b.l(x1), c.l(y1));
            s.runit[o1] = p.pair_arr(b.r(x1), c.r(y1));
            for (ObjId x2 = 0; x2 < b.base.n_obj; ++x2)
                for (ObjId y2 = 0; y2 < c.base.n_obj; ++y2) {
                    ObjId o2 = p.pair_obj(x2, y2);
                    s.tensor_obj[o1 * s.base.n_obj + o2] =
                        p.pair_obj(b.ten(x1, x2), c.ten(y1, y2));
                    s.sym[o1 * s.base.n_obj + o2] =
                        p.pair_arr(b.s(x1, x2), c.s(y1, y2));
                    for (ObjId x3 = 0; x3 < b.base.n_obj; ++x3)
                        for (ObjId y3 = 0; y3 < c.base.n_obj; ++y3)
                            s.a(o1, o2, p.pair_obj(x3, y3)) = p.pair_arr(
                                b.a(x1, x2, x3), c.a(y1, y2, y3));
                }
        }
    for (ArrId f1 = 0; f1 < b.base.n_arr(); ++f1)
        for (ArrId g1 = 0; g1 < c.base.n_arr(); ++g1)
            for (ArrId f2 = 0; f2 < b.base.n_arr(); ++f2)
                for (ArrId g2 = 0; g2 < c.base.n_arr(); ++g2)
                    s.tensor_arr[p.pair_arr(f1, g1) * s.base.n_arr() +
                                 p.pair_arr(f2, g2)] =
                        p.pair_arr(b.ten_arr(f1, f2), c.ten_arr(g1, g2));

    auto strictify = [&](const FunctorData& u) {
        MonFunctor f;
        f.under = u;
        f.strictness = Strictness::strict;
        return f;
    };
    out.p1 = strictify(out.prod.p1);
    out.p1.f0 = b.base.id(b.unit);
    out.p1.f2.resize(static_cast<size_t>(s.base.n_obj) * s.base.n_obj);
    out.p2 = strictify(out.prod.p2);
    out.p2.f0 = c.base.id(c.unit);
    out.p2.f2.resize(out.p1.f2.size());
    for (ObjId o1 = 0; o1 < s.base.n_obj; ++o1)
        for (ObjId o2 = 0; o2 < s.base.n_obj; ++o2) {
            out.p1.f2[o1 * s.base.n_obj + o2] = b.base.id(
                b.ten(out.prod.p1.obj(o1), out.prod.p1.obj(o2)));
            out.p2.f2[o1 * s.base.n_obj + o2] = c.base.id(
                c.ten(out.prod.p2.obj(o1), out.prod.p2.obj(o2)));
        }
    return out;
}

/// <F,G> into the product structure; componentwise monoidal data.
inline MonFunctor pairing(const MonFunctor& f, const MonFunctor& g,
                          const SmcStructure& dom, const ProductSmc& target) {
    if (f.under.obj_map.size() != g.under.obj_map.size())
        throw Error("pairing: functors have different domains");
    MonFunctor h;
    const int no = dom.base.n_obj;
    h.under.obj_map.resize(no);
    h.under.arr_map.resize(dom.base.n_arr());
    for (ObjId x = 0; x < no; ++x)
        h.under.obj_map[x] = target.prod.pair_obj(f.obj(x), g.obj(x));
    for (ArrId a = 0; a < dom.base.n_arr(); ++a)
        h.under.arr_map[a] = target.prod.pair_arr(f.arr(a), g.arr(a));
    h.f0 = target.prod.pair_arr(f.f0, g.f0);
    h.f2.resize(static_cast<size_t>(no) * no);
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            h.f2[x * no + y] = target.prod.pair_arr(f.f2_at(x, y, no),
                                                    g.f2_at(x, y, no));
    if (f.strictness == Strictness::strict &&
        g.strictness == Strictness::strict)
        h.strictness = Strictness::strict;
    else if (f.strictness != Strictness::lax && g.strictness != Strictness::lax)
        h.strictness = Strictness::strong;
    else
        h.strictness = Strictness::lax;
    return h;
}

/// The tensor of s as a symmetric monoidal functor product_smc(s,s) -> s,
/// with the middle-four interchange as its f2.
inline MonFunctor ten_as_functor(const SmcStructure& s,
                                 const ProductSmc& ss) {
    MonFunctor t;
    t.under = tensor_functor_data(s, ss.prod);
    t.f0 = unit_split(s);
    const int pn = ss.smc.base.n_obj;
    t.f2.resize(static_cast<size_t>(pn) * pn);
    for (ObjId o1 = 0; o1 < pn; ++o1)
        for (ObjId o2 = 0; o2 < pn; ++o2)
            t.f2[o1 * pn + o2] =
                middle_four(s, ss.prod.p1.obj(o1), ss.prod.p2.obj(o1),
                            ss.prod.p1.obj(o2), ss.prod.p2.obj(o2));
    t.strictness = classify_strictness(t, ss.smc, s);
    return t;
}

/// F2 as a monoidal transformation Ten∘(FxF) -> F∘Ten and F0 as one
/// between the constant-unit functors; for a valid symmetric f both
/// validations must come back empty.
inline Report check_f2_f0_monoidal(const MonFunctor& f,
                                   const SmcStructure& dom,
                                   const SmcStructure& cod) {
    Report out;
    const int no = dom.base.n_obj;

    ProductSmc dd = product_smc(dom, dom);
    ProductSmc cc = product_smc(cod, cod);
    MonFunctor ten_dom = ten_as_functor(dom, dd);
    MonFunctor ten_cod = ten_as_functor(cod, cc);
    MonFunctor f_square =
        pairing(compose_monoidal(f, dd.p1, dd.smc, dom, cod),
                compose_monoidal(f, dd.p2, dd.smc, dom, cod), dd.smc, cc);
    MonFunctor lhs = compose_monoidal(ten_cod, f_square, dd.smc, cc.smc, cod);
    MonFunctor rhs = compose_monoidal(f, ten_dom, dd.smc, dom, cod);

    MonNatTrans f2t;
    f2t.under.components.resize(dd.smc.base.n_obj);
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            f2t.under.components[dd.prod.pair_obj(x, y)] = f.f2_at(x, y, no);
    Report r2 = validate_monoidal_nattrans(f2t, lhs, rhs, dd.smc, cod);
    for (auto& v : r2)
        add(out, "f2-as-2cell " + v.law, v.detail, v.structural);

    SmcStructure one = terminal_smc();
    MonFunctor delta_dom = constant_unit_functor(one, dom);
    MonFunctor delta_cod = constant_unit_functor(one, cod);
    MonFunctor f_delta = compose_monoidal(f, delta_dom, one, dom, cod);
    MonNatTrans f0t;
    f0t.under.components = {f.f0};
    Report r0 = validate_monoidal_nattrans(f0t, delta_cod, f_delta, one, cod);
    for (auto& v : r0)
        add(out, "f0-as-2cell " + v.law, v.detail, v.structural);
    return out;
}

} // namespace smck

#endif
