// Test-only brute-force oracle. Counts symmetric monoidal functors and
// monoidal transformations by raw nested loops with the axiom equations
// written out inline, independent of the library's validators and of the
// enumeration order used by homcat. Only table accessors are shared.
#ifndef SMCKIT_TESTS_ORACLE_ENUM_HPP
#define SMCKIT_TESTS_ORACLE_ENUM_HPP

#include <vector>

#include "smckit/monoidal.hpp"

namespace oracle {

using smck::ArrId;
using smck::ObjId;
using smck::SmcStructure;

struct RawFunctor {
    std::vector<ObjId> obj;
    std::vector<ArrId> arr;
    ArrId f0;
    std::vector<ArrId> f2; // row-major over dom objects
};

inline bool raw_functor_ok(const SmcStructure& A, const SmcStructure& B,
                           const RawFunctor& F) {
    const auto& a = A.base;
    const auto& b = B.base;
    int no = a.n_obj;
    for (ArrId f = 0; f < a.n_arr(); ++f) {
        if (b.dom(F.arr[f]) != F.obj[a.dom(f)]) return false;
        if (b.cod(F.arr[f]) != F.obj[a.cod(f)]) return false;
    }
    for (ObjId x = 0; x < no; ++x)
        if (F.arr[a.id(x)] != b.id(F.obj[x])) return false;
    for (ArrId g = 0; g < a.n_arr(); ++g)
        for (ArrId f = 0; f < a.n_arr(); ++f) {
            if (a.cod(f) != a.dom(g)) continue;
            if (F.arr[a.comp_at(g, f)] != b.comp_at(F.arr[g], F.arr[f]))
                return false;
        }
    // f0 / f2 endpoints
    if (b.dom(F.f0) != B.unit || b.cod(F.f0) != F.obj[A.unit]) return false;
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y) {
            ArrId t = F.f2[x * no + y];
            if (b.dom(t) != B.ten(F.obj[x], F.obj[y])) return false;
            if (b.cod(t) != F.obj[A.ten(x, y)]) return false;
        }
    // naturality of f2
    for (ArrId p = 0; p < a.n_arr(); ++p)
        for (ArrId q = 0; q < a.n_arr(); ++q) {
            ObjId x = a.dom(p), y = a.dom(q);
            ArrId lhs = b.comp_at(F.f2[a.cod(p) * no + a.cod(q)],
                                  B.ten_arr(F.arr[p], F.arr[q]));
            ArrId rhs = b.comp_at(F.arr[A.ten_arr(p, q)], F.f2[x * no + y]);
            if (lhs != rhs) return false;
        }
    // hexagonal / unit / symmetry axioms
    for (ObjId x = 0; x < no; ++x) {
        ArrId rleg = b.comp_at(
            F.arr[A.r(x)],
            b.comp_at(F.f2[x * no + A.unit],
                      B.ten_arr(b.id(F.obj[x]), F.f0)));
        if (rleg != B.r(F.obj[x])) return false;
        ArrId lleg = b.comp_at(
            F.arr[A.l(x)],
            b.comp_at(F.f2[A.unit * no + x],
                      B.ten_arr(F.f0, b.id(F.obj[x]))));
        if (lleg != B.l(F.obj[x])) return false;
        for (ObjId y = 0; y < no; ++y) {
            if (b.comp_at(F.arr[A.s(x, y)], F.f2[x * no + y]) !=
                b.comp_at(F.f2[y * no + x], B.s(F.obj[x], F.obj[y])))
                return false;
            for (ObjId z = 0; z < no; ++z) {
                ArrId left = b.comp_at(
                    F.arr[A.a(x, y, z)],
                    b.comp_at(F.f2[x * no + A.ten(y, z)],
                              B.ten_arr(b.id(F.obj[x]), F.f2[y * no + z])));
                ArrId right = b.comp_at(
                    F.f2[A.ten(x, y) * no + z],
                    b.comp_at(B.ten_arr(F.f2[x * no + y], b.id(F.obj[z])),
                              B.a(F.obj[x], F.obj[y], F.obj[z])));
                if (left != right) return false;
            }
        }
    }
    return true;
}

inline std::vector<RawFunctor> all_functors(const SmcStructure& A,
                                            const SmcStructure& B) {
    const auto& a = A.base;
    const auto& b = B.base;
    std::vector<RawFunctor> out;
    int no = a.n_obj, na = a.n_arr();
    std::vector<ObjId> obj(no, 0);
    while (true) {
        std::vector<ArrId> arr(na, 0);
        while (true) {
            std::vector<ArrId> f2(no * no, 0);
            for (ArrId f0 = 0; f0 < b.n_arr(); ++f0) {
                std::fill(f2.begin(), f2.end(), 0);
                while (true) {
                    RawFunctor F{obj, arr, f0, f2};
                    if (raw_functor_ok(A, B, F)) out.push_back(F);
                    int k = no * no - 1;
                    while (k >= 0 && f2[k] == b.n_arr() - 1) f2[k--] = 0;
                    if (k < 0) break;
                    ++f2[k];
                }
            }
            int k = na - 1;
            while (k >= 0 && arr[k] == b.n_arr() - 1) arr[k--] = 0;
            if (k < 0) break;
            ++arr[k];
        }
        int k = no - 1;
        while (k >= 0 && obj[k] == b.n_obj - 1) obj[k--] = 0;
        if (k < 0) break;
        ++obj[k];
    }
    return out;
}

inline bool raw_trans_ok(const SmcStructure& A, const SmcStructure& B,
                         const RawFunctor& F, const RawFunctor& G,
                         const std::vector<ArrId>& c) {
    const auto& a = A.base;
    const auto& b = B.base;
    int no = a.n_obj;
    for (ObjId x = 0; x < no; ++x) {
        if (b.dom(c[x]) != F.obj[x] || b.cod(c[x]) != G.obj[x]) return false;
    }
    for (ArrId f = 0; f < a.n_arr(); ++f)
        if (b.comp_at(c[a.cod(f)], F.arr[f]) !=
            b.comp_at(G.arr[f], c[a.dom(f)]))
            return false;
    for (ObjId x = 0; x < no; ++x)
        for (ObjId y = 0; y < no; ++y)
            if (b.comp_at(c[A.ten(x, y)], F.f2[x * no + y]) !=
                b.comp_at(G.f2[x * no + y], B.ten_arr(c[x], c[y])))
                return false;
    if (b.comp_at(c[A.unit], F.f0) != G.f0) return false;
    return true;
}

inline int count_trans(const SmcStructure& A, const SmcStructure& B,
                       const RawFunctor& F, const RawFunctor& G) {
    const auto& b = B.base;
    int no = A.base.n_obj, found = 0;
    std::vector<ArrId> c(no, 0);
    while (true) {
        if (raw_trans_ok(A, B, F, G, c)) ++found;
        int k = no - 1;
        while (k >= 0 && c[k] == b.n_arr() - 1) c[k--] = 0;
        if (k < 0) break;
        ++c[k];
    }
    return found;
}

} // namespace oracle

#endif
