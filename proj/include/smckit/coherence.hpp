#ifndef SMCKIT_COHERENCE_HPP
#define SMCKIT_COHERENCE_HPP

#include <numeric>

#include "smckit/words.hpp"

namespace smck {

template <class MA, class MB>
bool edge_is_canonical(const EdgePtr<MA, MB>& e) {
    if (e->is_canonical_kind()) return true;
    if (e->k == EdgeKind::whisk_l || e->k == EdgeKind::whisk_r)
        return edge_is_canonical(e->inner);
    return false;
}

template <class MA, class MB>
bool path_is_canonical(const TenPath<MA, MB>& p) {
    for (const auto& e : p.edges)
        if (!edge_is_canonical(e)) return false;
    return true;
}

/// Positions are indices into the in-order sequence of pair leaves;
/// perm[i] is the target position of source leaf i.
using Perm = std::vector<int>;

inline Perm compose_perm(const Perm& second, const Perm& first) {
    Perm out(first.size());
    for (size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

template <class MA, class MB>
Perm edge_perm(const EdgePtr<MA, MB>& e) {
    switch (e->k) {
        case EdgeKind::assoc:
        case EdgeKind::assoc_inv:
        case EdgeKind::lunit:
        case EdgeKind::lunit_inv:
        case EdgeKind::runit:
        case EdgeKind::runit_inv:
            return identity_perm(e->dom->leaves);
        case EdgeKind::sym: {
            int nx = e->x->leaves, ny = e->y->leaves;
            Perm p(nx + ny);
            for (int i = 0; i < nx; ++i) p[i] = ny + i;
            for (int j = 0; j < ny; ++j) p[nx + j] = j;
            return p;
        }
        case EdgeKind::whisk_l: {
            Perm inner = edge_perm(e->inner);
            int off = e->x->leaves;
            Perm p = identity_perm(off + static_cast<int>(inner.size()));
            for (size_t i = 0; i < inner.size(); ++i)
                p[off + i] = off + inner[i];
            return p;
        }
        case EdgeKind::whisk_r: {
            Perm inner = edge_perm(e->inner);
            Perm p = identity_perm(static_cast<int>(inner.size()) +
                                   e->x->leaves);
            for (size_t i = 0; i < inner.size(); ++i) p[i] = inner[i];
            return p;
        }
        default:
            throw Error(cat("non-canonical edge in coherence check: ",
                            e->shown));
    }
}

template <class MA, class MB>
Perm path_perm(const TenPath<MA, MB>& p) {
    Perm acc = identity_perm(p.dom->leaves);
    for (const auto& e : p.edges) acc = compose_perm(edge_perm(e), acc);
    return acc;
}

/// Decides equality of two parallel canonical paths by comparing their
/// induced permutations of pair-leaf occurrences.
template <class MA, class MB>
bool canonical_decide(const TenPath<MA, MB>& p, const TenPath<MA, MB>& q) {
    if (!word_eq(p.dom, q.dom) || !word_eq(p.cod(), q.cod()))
        throw Error("canonical_decide: endpoint mismatch");
    if (!path_is_canonical(p) || !path_is_canonical(q))
        throw Error("canonical_decide: non-canonical edge present");
    return path_perm(p) == path_perm(q);
}

template <class MA, class MB>
EdgePtr<MA, MB> edge_inverse(const PresCtx<MA, MB>& ctx,
                             const EdgePtr<MA, MB>& e) {
    switch (e->k) {
        case EdgeKind::assoc: return edges::assoc_inv(ctx, e->x, e->y, e->z);
        case EdgeKind::assoc_inv: return edges::assoc(ctx, e->x, e->y, e->z);
        case EdgeKind::lunit: return edges::lunit_inv(ctx, e->x);
        case EdgeKind::lunit_inv: return edges::lunit(ctx, e->x);
        case EdgeKind::runit: return edges::runit_inv(ctx, e->x);
        case EdgeKind::runit_inv: return edges::runit(ctx, e->x);
        case EdgeKind::sym: return edges::sym(ctx, e->y, e->x);
        case EdgeKind::whisk_l:
            return edges::whisk_l(e->x, edge_inverse(ctx, e->inner));
        case EdgeKind::whisk_r:
            return edges::whisk_r(edge_inverse(ctx, e->inner), e->x);
        default:
            throw Error(cat("edge has no formal inverse: ", e->shown));
    }
}

template <class MA, class MB>
TenPath<MA, MB> path_inverse(const PresCtx<MA, MB>& ctx,
                             const TenPath<MA, MB>& p) {
    TenPath<MA, MB> out{p.cod(), {}};
    for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it)
        out.edges.push_back(edge_inverse(ctx, *it));
    return out;
}

/// Canonical middle-four interchange (w⊗x)⊗(y⊗z) -> (w⊗y)⊗(x⊗z).
template <class MA, class MB>
TenPath<MA, MB> mfour_path(const PresCtx<MA, MB>& ctx,
                           const WordPtr<MA, MB>& w, const WordPtr<MA, MB>& x,
                           const WordPtr<MA, MB>& y,
                           const WordPtr<MA, MB>& z) {
    auto yz = tensor_word(y, z);
    auto xz = tensor_word(x, z);
    std::vector<EdgePtr<MA, MB>> es;
    es.push_back(edges::assoc_inv(ctx, w, x, yz));
    es.push_back(edges::whisk_l(w, edges::assoc(ctx, x, y, z)));
    es.push_back(edges::whisk_l(w, edges::whisk_r(edges::sym(ctx, x, y), z)));
    es.push_back(edges::whisk_l(w, edges::assoc_inv(ctx, y, x, z)));
    es.push_back(edges::assoc(ctx, w, y, xz));
    return make_path(tensor_word(tensor_word(w, x), yz), std::move(es));
}

namespace detail {

template <class MA, class MB>
void collect_leaves(const WordPtr<MA, MB>& w,
                    std::vector<WordPtr<MA, MB>>& out) {
    if (w->is_pair()) {
        out.push_back(w);
    } else if (w->is_tensor()) {
        collect_leaves(w->left, out);
        collect_leaves(w->right, out);
    }
}

template <class MA, class MB>
WordPtr<MA, MB> comb_of(const PresCtx<MA, MB>& ctx,
                        const std::vector<WordPtr<MA, MB>>& leaves,
                        size_t from = 0) {
    if (from == leaves.size()) return unit_word(ctx);
    if (from + 1 == leaves.size()) return leaves[from];
    return tensor_word(leaves[from], comb_of(ctx, leaves, from + 1));
}

template <class MA, class MB>
struct NormalForm {
    TenPath<MA, MB> path; // word -> comb
    WordPtr<MA, MB> comb;
    std::vector<WordPtr<MA, MB>> leaves;
};

/// Canonical path cu⊗cv -> comb(leaves cu ++ leaves cv) for combs cu, cv.
template <class MA, class MB>
TenPath<MA, MB> merge_combs(const PresCtx<MA, MB>& ctx,
                            const WordPtr<MA, MB>& cu,
                            const WordPtr<MA, MB>& cv) {
    if (cu->is_unit()) return edge_path(edges::lunit(ctx, cv));
    if (cu->is_pair()) {
        if (cv->is_unit()) return edge_path(edges::runit(ctx, cu));
        return identity_path(tensor_word(cu, cv));
    }
    // cu = leaf ⊗ cu'
    auto leaf = cu->left;
    auto rest = cu->right;
    auto step = edge_path(edges::assoc_inv(ctx, leaf, rest, cv));
    auto inner = whisker_left_path(leaf, merge_combs(ctx, rest, cv));
    return concat(step, inner);
}

template <class MA, class MB>
NormalForm<MA, MB> normalize(const PresCtx<MA, MB>& ctx,
                             const WordPtr<MA, MB>& w) {
    NormalForm<MA, MB> nf;
    if (w->is_unit() || w->is_pair()) {
        nf.path = identity_path(w);
        nf.comb = w;
        if (w->is_pair()) nf.leaves.push_back(w);
        return nf;
    }
    NormalForm<MA, MB> lu = normalize(ctx, w->left);
    NormalForm<MA, MB> rv = normalize(ctx, w->right);
    TenPath<MA, MB> p0 = tensor_path(lu.path, rv.path);
    TenPath<MA, MB> m = merge_combs(ctx, lu.comb, rv.comb);
    nf.path = concat(p0, m);
    nf.leaves = lu.leaves;
    nf.leaves.insert(nf.leaves.end(), rv.leaves.begin(), rv.leaves.end());
    nf.comb = comb_of(ctx, nf.leaves);
    if (!word_eq(nf.path.cod(), nf.comb))
        throw Error("normalize: comb mismatch");
    return nf;
}

/// Swaps leaf positions i and i+1 of a right comb; returns the path and
/// the new comb.
template <class MA, class MB>
std::pair<TenPath<MA, MB>, WordPtr<MA, MB>> adjacent_swap(
    const PresCtx<MA, MB>& ctx, const WordPtr<MA, MB>& comb, int i) {
    if (i > 0) {
        auto [p, nc] = adjacent_swap(ctx, comb->right, i - 1);
        return {whisker_left_path(comb->left, p),
                tensor_word(comb->left, nc)};
    }
    auto a = comb->left;
    auto rest = comb->right;
    if (rest->is_pair()) {
        return {edge_path(edges::sym(ctx, a, rest)), tensor_word(rest, a)};
    }
    auto b = rest->left;
    auto tail = rest->right;
    std::vector<EdgePtr<MA, MB>> es;
    es.push_back(edges::assoc(ctx, a, b, tail));
    es.push_back(edges::whisk_r(edges::sym(ctx, a, b), tail));
    es.push_back(edges::assoc_inv(ctx, b, a, tail));
    return {make_path(comb, std::move(es)),
            tensor_word(b, tensor_word(a, tail))};
}

} // namespace detail

/// The canonical arrow x -> y inducing the given pair-leaf permutation
/// (perm[i] = target position of source leaf i). Leaf labels must match.
template <class MA, class MB>
TenPath<MA, MB> canonical_arrow(const PresCtx<MA, MB>& ctx,
                                const WordPtr<MA, MB>& x,
                                const WordPtr<MA, MB>& y, const Perm& perm) {
    auto nx = detail::normalize(ctx, x);
    auto ny = detail::normalize(ctx, y);
    const int k = static_cast<int>(nx.leaves.size());
    if (static_cast<int>(ny.leaves.size()) != k ||
        static_cast<int>(perm.size()) != k)
        throw Error("canonical_arrow: leaf counts differ");
    for (int i = 0; i < k; ++i)
        if (nx.leaves[i]->key != ny.leaves[perm[i]]->key)
            throw Error("canonical_arrow: leaf labels incompatible with the "
                        "permutation");

    // realize perm on the comb by adjacent transpositions
    std::vector<int> occupant(k); // occupant[pos] = source leaf index
    std::iota(occupant.begin(), occupant.end(), 0);
    WordPtr<MA, MB> comb = nx.comb;
    TenPath<MA, MB> mid = identity_path(comb);
    for (int target = 0; target < k; ++target) {
        int want = -1; // source index that must land at position `target`
        for (int i = 0; i < k; ++i)
            if (perm[i] == target) want = i;
        int at = -1;
        for (int p = 0; p < k; ++p)
            if (occupant[p] == want) at = p;
        for (int p = at; p > target; --p) {
            auto [sp, nc] = detail::adjacent_swap(ctx, comb, p - 1);
            mid = concat(mid, sp);
            comb = nc;
            std::swap(occupant[p - 1], occupant[p]);
        }
    }
    return concat(concat(nx.path, mid), path_inverse(ctx, ny.path));
}

} // namespace smck

#endif
