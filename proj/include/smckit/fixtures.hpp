#ifndef SMCKIT_FIXTURES_HPP
#define SMCKIT_FIXTURES_HPP

#include "smckit/monoidal.hpp"

namespace smck {
namespace fixtures {

/// Discrete category on the cyclic group Z_n with tensor = addition.
/// All canonical components are identities (a strict SMC).
inline SmcStructure cyclic_discrete(int n) {
    FinCat c = make_fincat(n, n);
    for (int i = 0; i < n; ++i) {
        c.arrows[i] = Arrow{i, i, i};
        c.identity[i] = i;
        c.comp_at(i, i) = i;
    }
    SmcStructure s = make_smc(std::move(c));
    s.unit = 0;
    for (int x = 0; x < n; ++x) {
        s.lunit[x] = x;
        s.runit[x] = x;
        for (int y = 0; y < n; ++y) {
            s.tensor_obj[x * n + y] = (x + y) % n;
            s.tensor_arr[x * n + y] = (x + y) % n;
            s.sym[x * n + y] = (x + y) % n;
            for (int z = 0; z < n; ++z)
                s.a(x, y, z) = (x + y + z) % n;
        }
    }
    return s;
}

inline SmcStructure z2() { return cyclic_discrete(2); }
inline SmcStructure z3() { return cyclic_discrete(3); }

/// One-object category on a commutative monoid given by its
/// multiplication table; tensor = multiplication, all canonicals
/// identities.
inline SmcStructure commutative_monoid(const std::vector<std::vector<int>>& mul,
                                       int unit_elt) {
    int n = static_cast<int>(mul.size());
    FinCat c = make_fincat(1, n);
    for (int i = 0; i < n; ++i) c.arrows[i] = Arrow{i, 0, 0};
    c.identity[0] = unit_elt;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.comp_at(i, j) = mul[i][j];
    SmcStructure s = make_smc(std::move(c));
    s.unit = 0;
    s.lunit[0] = unit_elt;
    s.runit[0] = unit_elt;
    s.sym[0] = unit_elt;
    s.assoc[0] = unit_elt;
    s.tensor_obj[0] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.tensor_arr[i * n + j] = mul[i][j];
    return s;
}

/// {1,e} with e·e = e (arrow 0 is the unit 1, arrow 1 is e).
inline SmcStructure idem_monoid() {
    return commutative_monoid({{0, 1}, {1, 1}}, 0);
}

/// One-object groupoid on Z_n (addition); arrows 0..n-1.
inline SmcStructure cyclic_monoid(int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    return commutative_monoid(mul, 0);
}

inline SmcStructure z3_monoid() { return cyclic_monoid(3); }

/// One-object groupoid on Z2 = {1,t} with twisted unitors l = r = t
/// and identity associator/symmetry. Valid but not strict; the corpus
/// source of genuinely strong-not-strict data.
inline SmcStructure z2_twisted() {
    SmcStructure s = cyclic_monoid(2);
    s.lunit[0] = 1;
    s.runit[0] = 1;
    return s;
}

/// The identity functor on z2_twisted with f0 = f2 = t: a strong
/// symmetric monoidal endofunctor that is not strict.
inline MonFunctor twist_endo(const SmcStructure& tw) {
    MonFunctor f = identity_mon_functor(tw);
    f.f0 = 1;
    f.f2[0] = 1;
    f.strictness = Strictness::strong;
    return f;
}

inline SmcStructure z2_x_z3() {
    return product_smc(z2(), z3()).smc;
}

} // namespace fixtures
} // namespace smck

#endif
