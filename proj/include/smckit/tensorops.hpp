#ifndef SMCKIT_TENSOROPS_HPP
#define SMCKIT_TENSOROPS_HPP

#include "smckit/engine.hpp"

namespace smck {

/// The presented tensor as a base-category model in its own right:
/// objects are words, arrows are paths (syntactic representatives of
/// their congruence classes). Arrow keys are representatives, not
/// normal forms, so this model must not be used as an extension target.
template <class MA, class MB>
struct PresSmc {
    using Obj = WordPtr<MA, MB>;
    using Arr = TenPath<MA, MB>;
    PresCtx<MA, MB> P;

    PresSmc(const MA& a, const MB& b) : P{a, b} {}

    Obj unit() const { return unit_word(P); }
    Obj tensor(Obj x, Obj y) const { return tensor_word(x, y); }
    Arr tensor_arrows(Arr f, Arr g) const { return tensor_path(f, g); }
    Arr id(Obj x) const { return identity_path(x); }
    Arr compose(Arr g, Arr f) const { return concat(f, g); }
    Obj dom(Arr f) const { return f.dom; }
    Obj cod(Arr f) const { return f.cod(); }
    Arr assoc(Obj x, Obj y, Obj z) const {
        return edge_path(edges::assoc(P, x, y, z));
    }
    Arr assoc_inv(Obj x, Obj y, Obj z) const {
        return edge_path(edges::assoc_inv(P, x, y, z));
    }
    Arr lunit(Obj x) const { return edge_path(edges::lunit(P, x)); }
    Arr lunit_inv(Obj x) const { return edge_path(edges::lunit_inv(P, x)); }
    Arr runit(Obj x) const { return edge_path(edges::runit(P, x)); }
    Arr runit_inv(Obj x) const { return edge_path(edges::runit_inv(P, x)); }
    Arr sym(Obj x, Obj y) const { return edge_path(edges::sym(P, x, y)); }
    bool is_id(Arr f) const { return f.is_identity(); }
    bool obj_eq(Obj x, Obj y) const { return x->key == y->key; }
    bool arr_eq(Arr f, Arr g) const { return f.key() == g.key(); }

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
    std::vector<Arr> hom_arrows(Obj, Obj) const { return {}; }
    std::vector<std::pair<Obj, Obj>> untensor_candidates(Obj o) const {
        if (o->is_tensor()) return {{o->left, o->right}};
        return {};
    }
    /// Small sampling sets (the presentation is infinite): the unit,
    /// the pair leaves over the bases' samples, and one tensor.
    std::vector<Obj> objects() const {
        std::vector<Obj> out{unit()};
        auto as = P.A.objects();
        auto bs = P.B.objects();
        for (size_t i = 0; i < as.size() && i < 3; ++i)
            for (size_t j = 0; j < bs.size() && j < 3; ++j)
                out.push_back(pair_word(P, as[i], bs[j]));
        if (out.size() >= 2) out.push_back(tensor(out[1], out[1]));
        return out;
    }
    std::vector<Arr> arrows() const {
        std::vector<Arr> out;
        auto os = objects();
        for (const auto& o : os) out.push_back(id(o));
        if (os.size() >= 3) out.push_back(sym(os[1], os[2]));
        return out;
    }
    std::vector<Arr> leaf_arrows() const {
        std::vector<Arr> out;
        for (const auto& o : leaf_objects()) out.push_back(id(o));
        return out;
    }
    /// Unit and pair-leaf samples only (no tensor words).
    std::vector<Obj> leaf_objects() const {
        std::vector<Obj> out{unit()};
        auto as = P.A.leaf_objects();
        auto bs = P.B.leaf_objects();
        for (size_t i = 0; i < as.size() && i < 3; ++i)
            for (size_t j = 0; j < bs.size() && j < 3; ++j)
                out.push_back(pair_word(P, as[i], bs[j]));
        return out;
    }

    std::string obj_key(Obj x) const { return x->key; }
    std::string arr_key(Arr f) const { return f.key(); }
    std::string obj_show(Obj x) const { return x->shown; }
    std::string arr_show(Arr f) const { return f.shown(); }
};

/// tensor_smc_on_words: the §-level interface over two structures.
inline PresSmc<TableSmc, TableSmc> tensor_smc_on_words(const TableSmc& a,
                                                       const TableSmc& b) {
    return PresSmc<TableSmc, TableSmc>(a, b);
}

/// One relation instance: a pair of congruent parallel paths.
template <class MA, class MB>
struct RelInstance {
    std::string rel;
    TenPath<MA, MB> lhs;
    TenPath<MA, MB> rhs;
};

/// All words over the presentation with at most `max_leaves` leaf nodes
/// (unit leaves included), deterministic order.
template <class MA, class MB>
std::vector<WordPtr<MA, MB>> enumerate_words(const PresCtx<MA, MB>& P,
                                             int max_leaves) {
    std::vector<std::vector<WordPtr<MA, MB>>> by_size(max_leaves + 1);
    if (max_leaves >= 1) {
        by_size[1].push_back(unit_word(P));
        for (auto a : P.A.objects())
            for (auto b : P.B.objects())
                by_size[1].push_back(pair_word(P, a, b));
    }
    for (int k = 2; k <= max_leaves; ++k)
        for (int i = 1; i < k; ++i)
            for (const auto& l : by_size[i])
                for (const auto& r : by_size[k - i])
                    by_size[k].push_back(tensor_word(l, r));
    std::vector<WordPtr<MA, MB>> out;
    for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
    return out;
}

/// Generator edges with small endpoints, used to quantify the
/// interchange and naturality families.
template <class MA, class MB>
std::vector<EdgePtr<MA, MB>> enumerate_edges(
    const PresCtx<MA, MB>& P, const std::vector<WordPtr<MA, MB>>& words,
    int max_leaves) {
    std::vector<EdgePtr<MA, MB>> out;
    auto small = [&](std::initializer_list<WordPtr<MA, MB>> ws) {
        int total = 0;
        for (const auto& w : ws) total += w->total_leaves;
        return total <= max_leaves;
    };
    for (const auto& x : words) {
        if (small({x})) {
            out.push_back(edges::lunit(P, x));
            out.push_back(edges::lunit_inv(P, x));
            out.push_back(edges::runit(P, x));
            out.push_back(edges::runit_inv(P, x));
        }
        for (const auto& y : words) {
            if (small({x, y})) out.push_back(edges::sym(P, x, y));
            for (const auto& z : words)
                if (small({x, y, z})) {
                    out.push_back(edges::assoc(P, x, y, z));
                    out.push_back(edges::assoc_inv(P, x, y, z));
                }
        }
    }
    for (auto b : P.B.objects()) out.push_back(edges::alpha(P, b));
    for (auto a : P.A.objects()) out.push_back(edges::beta(P, a));
    for (auto a : P.A.objects())
        for (auto a2 : P.A.objects())
            for (auto b : P.B.objects())
                out.push_back(edges::gamma(P, a, a2, b));
    for (auto a : P.A.objects())
        for (auto b : P.B.objects())
            for (auto b2 : P.B.objects())
                out.push_back(edges::delta(P, a, b, b2));
    for (auto f : P.A.arrows())
        for (auto b : P.B.objects()) out.push_back(edges::tens_l(P, f, b));
    for (auto a : P.A.objects())
        for (auto g : P.B.arrows()) out.push_back(edges::tens_r(P, a, g));
    return out;
}

/// The default diagram sample grid: single generator edges whose
/// base-object arguments are leaf-level (unit or pair leaves), plus the
/// canonical edges over small words.
template <class MA, class MB>
std::vector<EdgePtr<MA, MB>> sample_edges(const PresCtx<MA, MB>& P) {
    std::vector<EdgePtr<MA, MB>> out;
    auto words = enumerate_words(P, 2);
    for (const auto& x : words) {
        out.push_back(edges::lunit(P, x));
        out.push_back(edges::runit(P, x));
        out.push_back(edges::lunit_inv(P, x));
        out.push_back(edges::runit_inv(P, x));
    }
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j) {
            if (words[i]->total_leaves + words[j]->total_leaves > 3) continue;
            out.push_back(edges::sym(P, words[i], words[j]));
            for (size_t k = 0; k < words.size(); ++k) {
                if (words[i]->total_leaves + words[j]->total_leaves +
                        words[k]->total_leaves >
                    3)
                    continue;
                out.push_back(edges::assoc(P, words[i], words[j], words[k]));
                out.push_back(
                    edges::assoc_inv(P, words[i], words[j], words[k]));
            }
        }
    auto las = P.A.leaf_objects();
    auto lbs = P.B.leaf_objects();
    for (auto b : lbs) out.push_back(edges::alpha(P, b));
    for (auto a : las) out.push_back(edges::beta(P, a));
    for (auto a : las)
        for (auto a2 : las)
            for (auto b : lbs) out.push_back(edges::gamma(P, a, a2, b));
    for (auto a : las)
        for (auto b : lbs)
            for (auto b2 : lbs) out.push_back(edges::delta(P, a, b, b2));
    for (auto f : P.A.arrows())
        for (auto b : lbs) out.push_back(edges::tens_l(P, f, b));
    for (auto a : las)
        for (auto g : P.B.arrows()) out.push_back(edges::tens_r(P, a, g));
    return out;
}

/// Every relation instance whose domain word has at most `max_leaves`
/// leaf nodes, over finite bases. The matcher in neighbors() recognizes
/// exactly these shapes; the pairing is cross-checked by tests.
template <class MA, class MB>
std::vector<RelInstance<MA, MB>> relation_table(const PresCtx<MA, MB>& P,
                                                int max_leaves) {
    std::vector<RelInstance<MA, MB>> out;
    auto add_inst = [&](const char* rel, TenPath<MA, MB> lhs,
                        TenPath<MA, MB> rhs) {
        if (lhs.dom->total_leaves > max_leaves) return;
        if (!word_eq(lhs.dom, rhs.dom) || !word_eq(lhs.cod(), rhs.cod()))
            throw Error(cat("relation instance ", rel, " is not parallel"));
        out.push_back(RelInstance<MA, MB>{rel, std::move(lhs), std::move(rhs)});
    };
    auto P1 = [&](EdgePtr<MA, MB> e) { return edge_path(e); };
    auto PN = [&](std::vector<EdgePtr<MA, MB>> es) {
        return make_path(es.front()->dom, es);
    };

    std::vector<WordPtr<MA, MB>> words = enumerate_words(P, max_leaves - 1);
    std::vector<EdgePtr<MA, MB>> hedges =
        enumerate_edges(P, enumerate_words(P, 2), 2);

    // interchange of arbitrary generator edges
    for (const auto& t : hedges)
        for (const auto& s : hedges) {
            if (t->dom->total_leaves + s->dom->total_leaves > max_leaves)
                continue;
            add_inst("interchange",
                     PN({edges::whisk_l(t->dom, s), edges::whisk_r(t, s->cod)}),
                     PN({edges::whisk_r(t, s->dom), edges::whisk_l(t->cod, s)}));
        }
    // isomorphism pairs
    for (const auto& x : words) {
        add_inst("iso-lunit",
                 PN({edges::lunit(P, x), edges::lunit_inv(P, x)}),
                 identity_path(tensor_word(unit_word(P), x)));
        add_inst("iso-lunit",
                 PN({edges::lunit_inv(P, x), edges::lunit(P, x)}),
                 identity_path(x));
        add_inst("iso-runit",
                 PN({edges::runit(P, x), edges::runit_inv(P, x)}),
                 identity_path(tensor_word(x, unit_word(P))));
        add_inst("iso-runit",
                 PN({edges::runit_inv(P, x), edges::runit(P, x)}),
                 identity_path(x));
        for (const auto& y : words) {
            if (x->total_leaves + y->total_leaves > max_leaves) break;
            add_inst("iso-sym",
                     PN({edges::sym(P, x, y), edges::sym(P, y, x)}),
                     identity_path(tensor_word(x, y)));
            for (const auto& z : words) {
                if (x->total_leaves + y->total_leaves + z->total_leaves >
                    max_leaves)
                    break;
                add_inst("iso-assoc",
                         PN({edges::assoc(P, x, y, z),
                             edges::assoc_inv(P, x, y, z)}),
                         identity_path(tensor_word(x, tensor_word(y, z))));
                add_inst("iso-assoc",
                         PN({edges::assoc_inv(P, x, y, z),
                             edges::assoc(P, x, y, z)}),
                         identity_path(tensor_word(tensor_word(x, y), z)));
            }
        }
    }
    // coherence: pentagon, triangle, unit-sym, hexagon
    for (const auto& x : words)
        for (const auto& y : words) {
            if (x->total_leaves + y->total_leaves + 1 > max_leaves) break;
            add_inst("triangle",
                     PN({edges::whisk_l(x, edges::lunit(P, y))}),
                     PN({edges::assoc(P, x, unit_word(P), y),
                         edges::whisk_r(edges::runit(P, x), y)}));
            add_inst("unit-sym",
                     PN({edges::sym(P, x, unit_word(P)),
                         edges::lunit(P, x)}),
                     P1(edges::runit(P, x)));
            for (const auto& z : words) {
                if (x->total_leaves + y->total_leaves + z->total_leaves >
                    max_leaves)
                    break;
                add_inst("hexagon",
                         PN({edges::assoc(P, x, y, z),
                             edges::sym(P, tensor_word(x, y), z),
                             edges::assoc(P, z, x, y)}),
                         PN({edges::whisk_l(x, edges::sym(P, y, z)),
                             edges::assoc(P, x, z, y),
                             edges::whisk_r(edges::sym(P, x, z), y)}));
                for (const auto& t : words) {
                    if (x->total_leaves + y->total_leaves + z->total_leaves +
                            t->total_leaves >
                        max_leaves)
                        break;
                    add_inst(
                        "pentagon",
                        PN({edges::assoc(P, x, y, tensor_word(z, t)),
                            edges::assoc(P, tensor_word(x, y), z, t)}),
                        PN({edges::whisk_l(x, edges::assoc(P, y, z, t)),
                            edges::assoc(P, x, tensor_word(y, z), t),
                            edges::whisk_r(edges::assoc(P, x, y, z), t)}));
                }
            }
        }
    // naturality of the canonical arrows against generator edges
    for (const auto& f : hedges) {
        add_inst("nat-lunit",
                 PN({edges::whisk_l(unit_word(P), f),
                     edges::lunit(P, f->cod)}),
                 PN({edges::lunit(P, f->dom), f}));
        add_inst("nat-runit",
                 PN({edges::whisk_r(f, unit_word(P)),
                     edges::runit(P, f->cod)}),
                 PN({edges::runit(P, f->dom), f}));
        for (const auto& y : words) {
            if (f->dom->total_leaves + y->total_leaves > max_leaves) break;
            add_inst("nat-sym1",
                     PN({edges::whisk_r(f, y), edges::sym(P, f->cod, y)}),
                     PN({edges::sym(P, f->dom, y), edges::whisk_l(y, f)}));
            add_inst("nat-sym2",
                     PN({edges::whisk_l(y, f), edges::sym(P, y, f->cod)}),
                     PN({edges::sym(P, y, f->dom), edges::whisk_r(f, y)}));
            for (const auto& z : words) {
                if (f->dom->total_leaves + y->total_leaves +
                        z->total_leaves >
                    max_leaves)
                    break;
                add_inst("nat-assoc1",
                         PN({edges::whisk_r(f, tensor_word(y, z)),
                             edges::assoc(P, f->cod, y, z)}),
                         PN({edges::assoc(P, f->dom, y, z),
                             edges::whisk_r(edges::whisk_r(f, y), z)}));
                add_inst("nat-assoc2",
                         PN({edges::whisk_l(y, edges::whisk_r(f, z)),
                             edges::assoc(P, y, f->cod, z)}),
                         PN({edges::assoc(P, y, f->dom, z),
                             edges::whisk_r(edges::whisk_l(y, f), z)}));
                add_inst("nat-assoc3",
                         PN({edges::whisk_l(y, edges::whisk_l(z, f)),
                             edges::assoc(P, y, z, f->cod)}),
                         PN({edges::assoc(P, y, z, f->dom),
                             edges::whisk_l(tensor_word(y, z), f)}));
            }
        }
    }
    // h3 functoriality and identities
    for (auto a : P.A.objects()) {
        for (auto g1 : P.B.arrows())
            for (auto g2 : P.B.arrows()) {
                if (!P.B.obj_eq(P.B.cod(g1), P.B.dom(g2))) continue;
                add_inst("h3-comp-r",
                         PN({edges::tens_r(P, a, g1),
                             edges::tens_r(P, a, g2)}),
                         P1(edges::tens_r(P, a, P.B.compose(g2, g1))));
            }
        for (auto b : P.B.objects())
            add_inst("h3-id-r", P1(edges::tens_r(P, a, P.B.id(b))),
                     identity_path(pair_word(P, a, b)));
    }
    for (auto b : P.B.objects()) {
        for (auto f1 : P.A.arrows())
            for (auto f2 : P.A.arrows()) {
                if (!P.A.obj_eq(P.A.cod(f1), P.A.dom(f2))) continue;
                add_inst("h3-comp-l",
                         PN({edges::tens_l(P, f1, b),
                             edges::tens_l(P, f2, b)}),
                         P1(edges::tens_l(P, P.A.compose(f2, f1), b)));
            }
        for (auto a : P.A.objects())
            add_inst("h3-id-l", P1(edges::tens_l(P, P.A.id(a), b)),
                     identity_path(pair_word(P, a, b)));
    }
    for (auto f : P.A.arrows())
        for (auto g : P.B.arrows())
            add_inst("h3-interchange",
                     PN({edges::tens_r(P, P.A.dom(f), g),
                         edges::tens_l(P, f, P.B.cod(g))}),
                     PN({edges::tens_l(P, f, P.B.dom(g)),
                         edges::tens_r(P, P.A.cod(f), g)}));
    // naturalities of alpha, beta, gamma, delta
    for (auto g : P.B.arrows())
        add_inst("nat-alpha",
                 PN({edges::alpha(P, P.B.dom(g)),
                     edges::tens_r(P, P.A.unit(), g)}),
                 P1(edges::alpha(P, P.B.cod(g))));
    for (auto f : P.A.arrows())
        add_inst("nat-beta",
                 PN({edges::beta(P, P.A.dom(f)),
                     edges::tens_l(P, f, P.B.unit())}),
                 P1(edges::beta(P, P.A.cod(f))));
    for (auto f : P.A.arrows())
        for (auto a2 : P.A.objects())
            for (auto b : P.B.objects()) {
                auto a = P.A.dom(f);
                auto c = P.A.cod(f);
                add_inst(
                    "nat-gamma-a",
                    PN({edges::whisk_r(edges::tens_l(P, f, b),
                                       pair_word(P, a2, b)),
                        edges::gamma(P, c, a2, b)}),
                    PN({edges::gamma(P, a, a2, b),
                        edges::tens_l(P, P.A.tensor_arrows(f, P.A.id(a2)),
                                      b)}));
                add_inst(
                    "nat-gamma-a2",
                    PN({edges::whisk_l(pair_word(P, a2, b),
                                       edges::tens_l(P, f, b)),
                        edges::gamma(P, a2, c, b)}),
                    PN({edges::gamma(P, a2, a, b),
                        edges::tens_l(P, P.A.tensor_arrows(P.A.id(a2), f),
                                      b)}));
            }
    for (auto g : P.B.arrows())
        for (auto a : P.A.objects())
            for (auto a2 : P.A.objects()) {
                auto b = P.B.dom(g);
                auto c = P.B.cod(g);
                add_inst(
                    "nat-gamma-b",
                    PN({edges::whisk_l(pair_word(P, a, b),
                                       edges::tens_r(P, a2, g)),
                        edges::whisk_r(edges::tens_r(P, a, g),
                                       pair_word(P, a2, c)),
                        edges::gamma(P, a, a2, c)}),
                    PN({edges::gamma(P, a, a2, b),
                        edges::tens_r(P, P.A.tensor(a, a2), g)}));
            }
    for (auto f : P.A.arrows())
        for (auto b : P.B.objects())
            for (auto b2 : P.B.objects()) {
                auto a = P.A.dom(f);
                auto c = P.A.cod(f);
                add_inst(
                    "nat-delta-a",
                    PN({edges::whisk_l(pair_word(P, a, b),
                                       edges::tens_l(P, f, b2)),
                        edges::whisk_r(edges::tens_l(P, f, b),
                                       pair_word(P, c, b2)),
                        edges::delta(P, c, b, b2)}),
                    PN({edges::delta(P, a, b, b2),
                        edges::tens_l(P, f, P.B.tensor(b, b2))}));
            }
    for (auto g : P.B.arrows())
        for (auto a : P.A.objects())
            for (auto b2 : P.B.objects()) {
                auto b = P.B.dom(g);
                auto c = P.B.cod(g);
                add_inst("nat-delta-b",
                         PN({edges::whisk_r(edges::tens_r(P, a, g),
                                            pair_word(P, a, b2)),
                             edges::delta(P, a, c, b2)}),
                         PN({edges::delta(P, a, b, b2),
                             edges::tens_r(
                                 P, a,
                                 P.B.tensor_arrows(g, P.B.id(b2)))}));
                add_inst("nat-delta-b2",
                         PN({edges::whisk_l(pair_word(P, a, b2),
                                            edges::tens_r(P, a, g)),
                             edges::delta(P, a, b2, c)}),
                         PN({edges::delta(P, a, b2, b),
                             edges::tens_r(
                                 P, a,
                                 P.B.tensor_arrows(P.B.id(b2), g))}));
            }
    // structure of the pair embeddings
    for (auto a : P.A.objects()) {
        for (auto b : P.B.objects()) {
            auto pab = pair_word(P, a, b);
            add_inst("delta-runit", P1(edges::runit(P, pab)),
                     PN({edges::whisk_l(pab, edges::beta(P, a)),
                         edges::delta(P, a, b, P.B.unit()),
                         edges::tens_r(P, a, P.B.runit(b))}));
            add_inst("delta-lunit", P1(edges::lunit(P, pab)),
                     PN({edges::whisk_r(edges::beta(P, a), pab),
                         edges::delta(P, a, P.B.unit(), b),
                         edges::tens_r(P, a, P.B.lunit(b))}));
            add_inst("gamma-runit", P1(edges::runit(P, pab)),
                     PN({edges::whisk_l(pab, edges::alpha(P, b)),
                         edges::gamma(P, a, P.A.unit(), b),
                         edges::tens_l(P, P.A.runit(a), b)}));
            add_inst("gamma-lunit", P1(edges::lunit(P, pab)),
                     PN({edges::whisk_r(edges::alpha(P, b), pab),
                         edges::gamma(P, P.A.unit(), a, b),
                         edges::tens_l(P, P.A.lunit(a), b)}));
            for (auto b2 : P.B.objects()) {
                auto pab2 = pair_word(P, a, b2);
                add_inst("delta-sym",
                         PN({edges::sym(P, pab, pab2),
                             edges::delta(P, a, b2, b)}),
                         PN({edges::delta(P, a, b, b2),
                             edges::tens_r(P, a, P.B.sym(b, b2))}));
                for (auto b3 : P.B.objects()) {
                    auto pab3 = pair_word(P, a, b3);
                    add_inst(
                        "delta-assoc",
                        PN({edges::whisk_l(pab, edges::delta(P, a, b2, b3)),
                            edges::delta(P, a, b, P.B.tensor(b2, b3)),
                            edges::tens_r(P, a, P.B.assoc(b, b2, b3))}),
                        PN({edges::assoc(P, pab, pab2, pab3),
                            edges::whisk_r(edges::delta(P, a, b, b2), pab3),
                            edges::delta(P, a, P.B.tensor(b, b2), b3)}));
                }
            }
            for (auto a2 : P.A.objects()) {
                auto pa2b = pair_word(P, a2, b);
                add_inst("gamma-sym",
                         PN({edges::sym(P, pab, pa2b),
                             edges::gamma(P, a2, a, b)}),
                         PN({edges::gamma(P, a, a2, b),
                             edges::tens_l(P, P.A.sym(a, a2), b)}));
                for (auto a3 : P.A.objects()) {
                    auto pa3b = pair_word(P, a3, b);
                    add_inst(
                        "gamma-assoc",
                        PN({edges::whisk_l(pab, edges::gamma(P, a2, a3, b)),
                            edges::gamma(P, a, P.A.tensor(a2, a3), b),
                            edges::tens_l(P, P.A.assoc(a, a2, a3), b)}),
                        PN({edges::assoc(P, pab, pa2b, pa3b),
                            edges::whisk_r(edges::gamma(P, a, a2, b), pa3b),
                            edges::gamma(P, P.A.tensor(a, a2), a3, b)}));
                }
            }
        }
    }
    // unit comparisons and the interchange of gamma with delta
    add_inst("unit-pair", P1(edges::beta(P, P.A.unit())),
             P1(edges::alpha(P, P.B.unit())));
    for (auto b : P.B.objects())
        for (auto b2 : P.B.objects())
            add_inst(
                "alpha-tensor",
                PN({edges::whisk_l(unit_word(P), edges::alpha(P, b2)),
                    edges::whisk_r(edges::alpha(P, b),
                                   pair_word(P, P.A.unit(), b2)),
                    edges::delta(P, P.A.unit(), b, b2)}),
                PN({edges::runit(P, unit_word(P)),
                    edges::alpha(P, P.B.tensor(b, b2))}));
    for (auto a : P.A.objects())
        for (auto a2 : P.A.objects())
            add_inst(
                "beta-tensor",
                PN({edges::whisk_l(unit_word(P), edges::beta(P, a2)),
                    edges::whisk_r(edges::beta(P, a),
                                   pair_word(P, a2, P.B.unit())),
                    edges::gamma(P, a, a2, P.B.unit())}),
                PN({edges::runit(P, unit_word(P)),
                    edges::beta(P, P.A.tensor(a, a2))}));
    for (auto a : P.A.objects())
        for (auto a2 : P.A.objects())
            for (auto b : P.B.objects())
                for (auto b2 : P.B.objects()) {
                    auto pab = pair_word(P, a, b);
                    auto pab2 = pair_word(P, a, b2);
                    auto pa2b = pair_word(P, a2, b);
                    auto pa2b2 = pair_word(P, a2, b2);
                    auto m = mfour_path(P, pab, pab2, pa2b, pa2b2);
                    std::vector<EdgePtr<MA, MB>> rhs = m.edges;
                    rhs.push_back(
                        edges::whisk_l(tensor_word(pab, pa2b),
                                       edges::gamma(P, a, a2, b2)));
                    rhs.push_back(edges::whisk_r(
                        edges::gamma(P, a, a2, b),
                        pair_word(P, P.A.tensor(a, a2), b2)));
                    rhs.push_back(
                        edges::delta(P, P.A.tensor(a, a2), b, b2));
                    add_inst(
                        "gamma-delta-mix",
                        PN({edges::whisk_l(tensor_word(pab, pab2),
                                           edges::delta(P, a2, b, b2)),
                            edges::whisk_r(edges::delta(P, a, b, b2),
                                           pair_word(P, a2,
                                                     P.B.tensor(b, b2))),
                            edges::gamma(P, a, a2, P.B.tensor(b, b2))}),
                        PN(std::move(rhs)));
                }
    return out;
}

} // namespace smck

#endif
