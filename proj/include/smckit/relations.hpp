#ifndef SMCKIT_RELATIONS_HPP
#define SMCKIT_RELATIONS_HPP

#include "smckit/coherence.hpp"

namespace smck {

/// One-step rewrite of a path: the relation instance applied and where.
template <class MA, class MB>
struct Rewrite {
    TenPath<MA, MB> result;
    std::string rel;
    int pos = 0;
};

namespace rels {

template <class MA, class MB>
struct CoreMatch {
    std::string rel;
    std::vector<EdgePtr<MA, MB>> repl;
};

/// All relation-instance rewrites whose matched side equals the core
/// path q (1..8 consecutive unwhiskered edges).
template <class MA, class MB>
void match_core(const PresCtx<MA, MB>& P,
                const std::vector<EdgePtr<MA, MB>>& q,
                std::vector<CoreMatch<MA, MB>>& out) {
    using E = EdgeKind;
    auto weq = [](const WordPtr<MA, MB>& s, const WordPtr<MA, MB>& t) {
        return s->key == t->key;
    };
    auto push = [&](const char* rel, std::vector<EdgePtr<MA, MB>> repl) {
        out.push_back(CoreMatch<MA, MB>{rel, std::move(repl)});
    };
    const auto& A = P.A;
    const auto& B = P.B;

    if (q.size() == 1) {
        const auto& e = q[0];
        // h3 identity collapses
        if (e->k == E::tens_r && B.is_id(e->gb)) push("h3-id-r", {});
        if (e->k == E::tens_l && A.is_id(e->fa)) push("h3-id-l", {});
        // h3 composite expansions
        if (e->k == E::tens_r)
            for (auto [g2, g1] : B.factorizations(e->gb))
                push("h3-comp-r", {edges::tens_r(P, e->oa, g1),
                                   edges::tens_r(P, e->oa, g2)});
        if (e->k == E::tens_l)
            for (auto [f2, f1] : A.factorizations(e->fa))
                push("h3-comp-l", {edges::tens_l(P, f1, e->ob),
                                   edges::tens_l(P, f2, e->ob)});
        // triangle (backward): r⊗1 ∘ a route is the 2-edge side
        if (e->k == E::whisk_l && e->inner->k == E::lunit)
            push("triangle",
                 {edges::assoc(P, e->x, unit_word(P), e->inner->x),
                  edges::whisk_r(edges::runit(P, e->x), e->inner->x)});
        // unit collapses at a pair leaf
        if (e->k == E::runit && e->x->is_pair()) {
            auto a = e->x->a;
            auto b = e->x->b;
            push("delta-runit",
                 {edges::whisk_l(e->x, edges::beta(P, a)),
                  edges::delta(P, a, b, B.unit()),
                  edges::tens_r(P, a, B.runit(b))});
            push("gamma-runit",
                 {edges::whisk_l(e->x, edges::alpha(P, b)),
                  edges::gamma(P, a, A.unit(), b),
                  edges::tens_l(P, A.runit(a), b)});
        }
        if (e->k == E::lunit && e->x->is_pair()) {
            auto a = e->x->a;
            auto b = e->x->b;
            push("delta-lunit",
                 {edges::whisk_r(edges::beta(P, a), e->x),
                  edges::delta(P, a, B.unit(), b),
                  edges::tens_r(P, a, B.lunit(b))});
            push("gamma-lunit",
                 {edges::whisk_r(edges::alpha(P, b), e->x),
                  edges::gamma(P, A.unit(), a, b),
                  edges::tens_l(P, A.lunit(a), b)});
        }
        // unit-sym backward: r = s;l
        if (e->k == E::runit)
            push("unit-sym", {edges::sym(P, e->x, unit_word(P)),
                              edges::lunit(P, e->x)});
        // the two unit introductions at I agree
        if (e->k == E::beta && A.obj_eq(e->oa, A.unit()))
            push("unit-pair", {edges::alpha(P, B.unit())});
        if (e->k == E::alpha && B.obj_eq(e->ob, B.unit()))
            push("unit-pair", {edges::beta(P, A.unit())});
        // expansions via naturality of alpha/beta (only when the base
        // enumerates arrows; presented bases return no candidates)
        if (e->k == E::alpha)
            for (auto g : B.arrows_to(e->ob))
                push("nat-alpha", {edges::alpha(P, B.dom(g)),
                                   edges::tens_r(P, A.unit(), g)});
        if (e->k == E::beta)
            for (auto f : A.arrows_to(e->oa))
                push("nat-beta", {edges::beta(P, A.dom(f)),
                                  edges::tens_l(P, f, B.unit())});
        return;
    }

    if (q.size() == 2) {
        const auto& e1 = q[0];
        const auto& e2 = q[1];
        // interchange (both orders)
        if (e1->k == E::whisk_l && e2->k == E::whisk_r &&
            weq(e1->x, e2->inner->dom) && weq(e2->x, e1->inner->cod))
            push("interchange",
                 {edges::whisk_r(e2->inner, e1->inner->dom),
                  edges::whisk_l(e2->inner->cod, e1->inner)});
        if (e1->k == E::whisk_r && e2->k == E::whisk_l &&
            weq(e2->x, e1->inner->cod) && weq(e1->x, e2->inner->dom))
            push("interchange",
                 {edges::whisk_l(e1->inner->dom, e2->inner),
                  edges::whisk_r(e1->inner, e2->inner->cod)});
        // iso pairs collapse to the identity
        if (e1->k == E::assoc && e2->k == E::assoc_inv && weq(e1->x, e2->x) &&
            weq(e1->y, e2->y) && weq(e1->z, e2->z))
            push("iso-assoc", {});
        if (e1->k == E::assoc_inv && e2->k == E::assoc && weq(e1->x, e2->x) &&
            weq(e1->y, e2->y) && weq(e1->z, e2->z))
            push("iso-assoc", {});
        if (e1->k == E::lunit && e2->k == E::lunit_inv && weq(e1->x, e2->x))
            push("iso-lunit", {});
        if (e1->k == E::lunit_inv && e2->k == E::lunit && weq(e1->x, e2->x))
            push("iso-lunit", {});
        if (e1->k == E::runit && e2->k == E::runit_inv && weq(e1->x, e2->x))
            push("iso-runit", {});
        if (e1->k == E::runit_inv && e2->k == E::runit && weq(e1->x, e2->x))
            push("iso-runit", {});
        if (e1->k == E::sym && e2->k == E::sym && weq(e1->x, e2->y) &&
            weq(e1->y, e2->x))
            push("iso-sym", {});
        // pentagon forward
        if (e1->k == E::assoc && e2->k == E::assoc && e1->z->is_tensor()) {
            auto X = e1->x, Y = e1->y, Z = e1->z->left, T = e1->z->right;
            if (weq(e2->x, tensor_word(X, Y)) && weq(e2->y, Z) &&
                weq(e2->z, T))
                push("pentagon",
                     {edges::whisk_l(X, edges::assoc(P, Y, Z, T)),
                      edges::assoc(P, X, tensor_word(Y, Z), T),
                      edges::whisk_r(edges::assoc(P, X, Y, Z), T)});
        }
        // triangle forward: [assoc(X,I,Y), whisk_r(runit X, Y)] -> 1⊗l
        if (e1->k == E::assoc && e1->y->is_unit() && e2->k == E::whisk_r &&
            e2->inner->k == E::runit && weq(e2->inner->x, e1->x) &&
            weq(e2->x, e1->z))
            push("triangle",
                 {edges::whisk_l(e1->x, edges::lunit(P, e1->z))});
        // unit-sym forward: [sym(X,I), lunit(X)] -> runit(X)
        if (e1->k == E::sym && e1->y->is_unit() && e2->k == E::lunit &&
            weq(e2->x, e1->x))
            push("unit-sym", {edges::runit(P, e1->x)});
        // naturality of assoc in each argument, both orientations
        if (e1->k == E::whisk_r && e1->x->is_tensor() && e2->k == E::assoc &&
            weq(e2->x, e1->inner->cod) && weq(e2->y, e1->x->left) &&
            weq(e2->z, e1->x->right))
            push("nat-assoc1",
                 {edges::assoc(P, e1->inner->dom, e2->y, e2->z),
                  edges::whisk_r(edges::whisk_r(e1->inner, e2->y), e2->z)});
        if (e1->k == E::assoc && e2->k == E::whisk_r && weq(e2->x, e1->z) &&
            e2->inner->k == E::whisk_r && weq(e2->inner->x, e1->y) &&
            weq(e2->inner->inner->dom, e1->x))
            push("nat-assoc1",
                 {edges::whisk_r(e2->inner->inner,
                                 tensor_word(e1->y, e1->z)),
                  edges::assoc(P, e2->inner->inner->cod, e1->y, e1->z)});
        if (e1->k == E::whisk_l && e1->inner->k == E::whisk_r &&
            e2->k == E::assoc && weq(e2->x, e1->x) &&
            weq(e2->y, e1->inner->inner->cod) && weq(e2->z, e1->inner->x))
            push("nat-assoc2",
                 {edges::assoc(P, e1->x, e1->inner->inner->dom, e2->z),
                  edges::whisk_r(edges::whisk_l(e1->x, e1->inner->inner),
                                 e2->z)});
        if (e1->k == E::assoc && e2->k == E::whisk_r && weq(e2->x, e1->z) &&
            e2->inner->k == E::whisk_l && weq(e2->inner->x, e1->x) &&
            weq(e2->inner->inner->dom, e1->y))
            push("nat-assoc2",
                 {edges::whisk_l(e1->x,
                                 edges::whisk_r(e2->inner->inner, e1->z)),
                  edges::assoc(P, e1->x, e2->inner->inner->cod, e1->z)});
        if (e1->k == E::whisk_l && e1->inner->k == E::whisk_l &&
            e2->k == E::assoc && weq(e2->x, e1->x) &&
            weq(e2->y, e1->inner->x) &&
            weq(e2->z, e1->inner->inner->cod))
            push("nat-assoc3",
                 {edges::assoc(P, e1->x, e1->inner->x,
                               e1->inner->inner->dom),
                  edges::whisk_l(tensor_word(e1->x, e1->inner->x),
                                 e1->inner->inner)});
        if (e1->k == E::assoc && e2->k == E::whisk_l &&
            weq(e2->x, tensor_word(e1->x, e1->y)) &&
            weq(e2->inner->dom, e1->z))
            push("nat-assoc3",
                 {edges::whisk_l(e1->x, edges::whisk_l(e1->y, e2->inner)),
                  edges::assoc(P, e1->x, e1->y, e2->inner->cod)});
        // naturality of lunit: [whisk_l(I,f), lunit(X')] <-> [lunit(X), f]
        if (e1->k == E::whisk_l && e1->x->is_unit() && e2->k == E::lunit &&
            weq(e2->x, e1->inner->cod))
            push("nat-lunit", {edges::lunit(P, e1->inner->dom), e1->inner});
        if (e1->k == E::lunit)
            push("nat-lunit", {edges::whisk_l(unit_word(P), e2),
                               edges::lunit(P, e2->cod)});
        // naturality of runit
        if (e1->k == E::whisk_r && e1->x->is_unit() && e2->k == E::runit &&
            weq(e2->x, e1->inner->cod))
            push("nat-runit", {edges::runit(P, e1->inner->dom), e1->inner});
        if (e1->k == E::runit)
            push("nat-runit", {edges::whisk_r(e2, unit_word(P)),
                               edges::runit(P, e2->cod)});
        // naturality of sym in both arguments
        if (e1->k == E::whisk_r && e2->k == E::sym &&
            weq(e2->x, e1->inner->cod) && weq(e2->y, e1->x))
            push("nat-sym1", {edges::sym(P, e1->inner->dom, e1->x),
                              edges::whisk_l(e1->x, e1->inner)});
        if (e1->k == E::sym && e2->k == E::whisk_l && weq(e2->x, e1->y) &&
            weq(e2->inner->dom, e1->x))
            push("nat-sym1", {edges::whisk_r(e2->inner, e1->y),
                              edges::sym(P, e2->inner->cod, e1->y)});
        if (e1->k == E::whisk_l && e2->k == E::sym && weq(e2->x, e1->x) &&
            weq(e2->y, e1->inner->cod))
            push("nat-sym2", {edges::sym(P, e1->x, e1->inner->dom),
                              edges::whisk_r(e1->inner, e1->x)});
        if (e1->k == E::sym && e2->k == E::whisk_r && weq(e2->x, e1->x) &&
            weq(e2->inner->dom, e1->y))
            push("nat-sym2", {edges::whisk_l(e1->x, e2->inner),
                              edges::sym(P, e1->x, e2->inner->cod)});
        // h3 composition collapses
        if (e1->k == E::tens_r && e2->k == E::tens_r &&
            A.obj_eq(e1->oa, e2->oa))
            push("h3-comp-r",
                 {edges::tens_r(P, e1->oa, B.compose(e2->gb, e1->gb))});
        if (e1->k == E::tens_l && e2->k == E::tens_l &&
            B.obj_eq(e1->ob, e2->ob))
            push("h3-comp-l",
                 {edges::tens_l(P, A.compose(e2->fa, e1->fa), e1->ob)});
        // h3 interchange square
        if (e1->k == E::tens_l && e2->k == E::tens_r &&
            B.obj_eq(e1->ob, B.dom(e2->gb)) &&
            A.obj_eq(e2->oa, A.cod(e1->fa)))
            push("h3-interchange",
                 {edges::tens_r(P, A.dom(e1->fa), e2->gb),
                  edges::tens_l(P, e1->fa, B.cod(e2->gb))});
        if (e1->k == E::tens_r && e2->k == E::tens_l &&
            A.obj_eq(e1->oa, A.dom(e2->fa)) &&
            B.obj_eq(B.cod(e1->gb), e2->ob))
            push("h3-interchange",
                 {edges::tens_l(P, e2->fa, B.dom(e1->gb)),
                  edges::tens_r(P, A.cod(e2->fa), e1->gb)});
        // naturality of alpha / beta (collapse direction)
        if (e1->k == E::alpha && e2->k == E::tens_r &&
            A.obj_eq(e2->oa, A.unit()))
            push("nat-alpha", {edges::alpha(P, B.cod(e2->gb))});
        if (e1->k == E::beta && e2->k == E::tens_l &&
            B.obj_eq(e2->ob, B.unit()))
            push("nat-beta", {edges::beta(P, A.cod(e2->fa))});
        // naturality of gamma in its first two arguments
        if (e1->k == E::whisk_r && e1->inner->k == E::tens_l &&
            e1->x->is_pair() && e2->k == E::gamma &&
            A.obj_eq(e2->oa, A.cod(e1->inner->fa)) &&
            A.obj_eq(e2->oa2, e1->x->a) && B.obj_eq(e2->ob, e1->x->b) &&
            B.obj_eq(e1->inner->ob, e1->x->b)) {
            auto f = e1->inner->fa;
            push("nat-gamma-a",
                 {edges::gamma(P, A.dom(f), e2->oa2, e2->ob),
                  edges::tens_l(P, A.tensor_arrows(f, A.id(e2->oa2)),
                                e2->ob)});
        }
        if (e1->k == E::gamma && e2->k == E::tens_l &&
            B.obj_eq(e2->ob, e1->ob)) {
            // candidates f with f ⊗ id = e2->fa (first argument)
            for (auto f : A.arrows_from(e1->oa))
                if (A.arr_eq(A.tensor_arrows(f, A.id(e1->oa2)), e2->fa))
                    push("nat-gamma-a",
                         {edges::whisk_r(edges::tens_l(P, f, e1->ob),
                                         pair_word(P, e1->oa2, e1->ob)),
                          edges::gamma(P, A.cod(f), e1->oa2, e1->ob)});
            // candidates f with id ⊗ f = e2->fa (second argument)
            for (auto f : A.arrows_from(e1->oa2))
                if (A.arr_eq(A.tensor_arrows(A.id(e1->oa), f), e2->fa))
                    push("nat-gamma-a2",
                         {edges::whisk_l(pair_word(P, e1->oa, e1->ob),
                                         edges::tens_l(P, f, e1->ob)),
                          edges::gamma(P, e1->oa, A.cod(f), e1->ob)});
        }
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::tens_l && e2->k == E::gamma &&
            A.obj_eq(e2->oa, e1->x->a) &&
            A.obj_eq(e2->oa2, A.cod(e1->inner->fa)) &&
            B.obj_eq(e2->ob, e1->x->b) &&
            B.obj_eq(e1->inner->ob, e1->x->b)) {
            auto f = e1->inner->fa;
            push("nat-gamma-a2",
                 {edges::gamma(P, e2->oa, A.dom(f), e2->ob),
                  edges::tens_l(P, A.tensor_arrows(A.id(e2->oa), f),
                                e2->ob)});
        }
        // naturality of gamma in b: backward (3-edge side built)
        if (e1->k == E::gamma && e2->k == E::tens_r &&
            A.obj_eq(e2->oa, A.tensor(e1->oa, e1->oa2)) &&
            B.obj_eq(B.dom(e2->gb), e1->ob)) {
            auto g = e2->gb;
            push("nat-gamma-b",
                 {edges::whisk_l(pair_word(P, e1->oa, e1->ob),
                                 edges::tens_r(P, e1->oa2, g)),
                  edges::whisk_r(edges::tens_r(P, e1->oa, g),
                                 pair_word(P, e1->oa2, B.cod(g))),
                  edges::gamma(P, e1->oa, e1->oa2, B.cod(g))});
        }
        // naturality of delta in b / b' (2-edge sides)
        if (e1->k == E::whisk_r && e1->inner->k == E::tens_r &&
            e1->x->is_pair() && e2->k == E::delta &&
            A.obj_eq(e2->oa, e1->inner->oa) &&
            A.obj_eq(e1->x->a, e1->inner->oa) &&
            B.obj_eq(e2->ob, B.cod(e1->inner->gb)) &&
            B.obj_eq(e2->ob2, e1->x->b)) {
            auto g = e1->inner->gb;
            push("nat-delta-b",
                 {edges::delta(P, e2->oa, B.dom(g), e2->ob2),
                  edges::tens_r(P, e2->oa,
                                B.tensor_arrows(g, B.id(e2->ob2)))});
        }
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::tens_r && e2->k == E::delta &&
            A.obj_eq(e2->oa, e1->x->a) &&
            A.obj_eq(e1->inner->oa, e1->x->a) &&
            B.obj_eq(e2->ob, e1->x->b) &&
            B.obj_eq(e2->ob2, B.cod(e1->inner->gb))) {
            auto g = e1->inner->gb;
            push("nat-delta-b2",
                 {edges::delta(P, e2->oa, e2->ob, B.dom(g)),
                  edges::tens_r(P, e2->oa,
                                B.tensor_arrows(B.id(e2->ob), g))});
        }
        if (e1->k == E::delta && e2->k == E::tens_r &&
            A.obj_eq(e2->oa, e1->oa)) {
            for (auto g : B.arrows_from(e1->ob))
                if (B.arr_eq(B.tensor_arrows(g, B.id(e1->ob2)), e2->gb))
                    push("nat-delta-b",
                         {edges::whisk_r(edges::tens_r(P, e1->oa, g),
                                         pair_word(P, e1->oa, e1->ob2)),
                          edges::delta(P, e1->oa, B.cod(g), e1->ob2)});
            for (auto g : B.arrows_from(e1->ob2))
                if (B.arr_eq(B.tensor_arrows(B.id(e1->ob), g), e2->gb))
                    push("nat-delta-b2",
                         {edges::whisk_l(pair_word(P, e1->oa, e1->ob),
                                         edges::tens_r(P, e1->oa, g)),
                          edges::delta(P, e1->oa, e1->ob, B.cod(g))});
        }
        // naturality of delta in a: backward (3-edge side built)
        if (e1->k == E::delta && e2->k == E::tens_l &&
            B.obj_eq(e2->ob, B.tensor(e1->ob, e1->ob2)) &&
            A.obj_eq(A.dom(e2->fa), e1->oa)) {
            auto f = e2->fa;
            push("nat-delta-a",
                 {edges::whisk_l(pair_word(P, e1->oa, e1->ob),
                                 edges::tens_l(P, f, e1->ob2)),
                  edges::whisk_r(edges::tens_l(P, f, e1->ob),
                                 pair_word(P, A.cod(f), e1->ob2)),
                  edges::delta(P, A.cod(f), e1->ob, e1->ob2)});
        }
        // delta-sym square
        if (e1->k == E::sym && e1->x->is_pair() && e1->y->is_pair() &&
            A.obj_eq(e1->x->a, e1->y->a) && e2->k == E::delta &&
            A.obj_eq(e2->oa, e1->x->a) && B.obj_eq(e2->ob, e1->y->b) &&
            B.obj_eq(e2->ob2, e1->x->b))
            push("delta-sym",
                 {edges::delta(P, e2->oa, e1->x->b, e1->y->b),
                  edges::tens_r(P, e2->oa, B.sym(e1->x->b, e1->y->b))});
        if (e1->k == E::delta && e2->k == E::tens_r &&
            A.obj_eq(e2->oa, e1->oa) &&
            B.arr_eq(e2->gb, B.sym(e1->ob, e1->ob2)))
            push("delta-sym",
                 {edges::sym(P, pair_word(P, e1->oa, e1->ob),
                             pair_word(P, e1->oa, e1->ob2)),
                  edges::delta(P, e1->oa, e1->ob2, e1->ob)});
        // gamma-sym square
        if (e1->k == E::sym && e1->x->is_pair() && e1->y->is_pair() &&
            B.obj_eq(e1->x->b, e1->y->b) && e2->k == E::gamma &&
            A.obj_eq(e2->oa, e1->y->a) && A.obj_eq(e2->oa2, e1->x->a) &&
            B.obj_eq(e2->ob, e1->x->b))
            push("gamma-sym",
                 {edges::gamma(P, e1->x->a, e1->y->a, e1->x->b),
                  edges::tens_l(P, A.sym(e1->x->a, e1->y->a), e1->x->b)});
        if (e1->k == E::gamma && e2->k == E::tens_l &&
            B.obj_eq(e2->ob, e1->ob) &&
            A.arr_eq(e2->fa, A.sym(e1->oa, e1->oa2)))
            push("gamma-sym",
                 {edges::sym(P, pair_word(P, e1->oa, e1->ob),
                             pair_word(P, e1->oa2, e1->ob)),
                  edges::gamma(P, e1->oa2, e1->oa, e1->ob)});
        // alpha-tensor / beta-tensor backward (2-edge side)
        if (e1->k == E::runit && e1->x->is_unit() && e2->k == E::alpha) {
            for (auto [b, b2] : B.untensor_candidates(e2->ob))
                push("alpha-tensor",
                     {edges::whisk_l(unit_word(P), edges::alpha(P, b2)),
                      edges::whisk_r(edges::alpha(P, b),
                                     pair_word(P, A.unit(), b2)),
                      edges::delta(P, A.unit(), b, b2)});
        }
        if (e1->k == E::runit && e1->x->is_unit() && e2->k == E::beta) {
            for (auto [a, a2] : A.untensor_candidates(e2->oa))
                push("beta-tensor",
                     {edges::whisk_l(unit_word(P), edges::beta(P, a2)),
                      edges::whisk_r(edges::beta(P, a),
                                     pair_word(P, a2, B.unit())),
                      edges::gamma(P, a, a2, B.unit())});
        }
        return;
    }

    if (q.size() == 3) {
        const auto& e1 = q[0];
        const auto& e2 = q[1];
        const auto& e3 = q[2];
        // pentagon backward
        if (e1->k == E::whisk_l && e1->inner->k == E::assoc &&
            e2->k == E::assoc && e3->k == E::whisk_r &&
            e3->inner->k == E::assoc) {
            auto X = e1->x, Y = e1->inner->x, Z = e1->inner->y,
                 T = e1->inner->z;
            if (weq(e2->x, X) && weq(e2->y, tensor_word(Y, Z)) &&
                weq(e2->z, T) && weq(e3->x, T) && weq(e3->inner->x, X) &&
                weq(e3->inner->y, Y) && weq(e3->inner->z, Z))
                push("pentagon",
                     {edges::assoc(P, X, Y, tensor_word(Z, T)),
                      edges::assoc(P, tensor_word(X, Y), Z, T)});
        }
        // hexagon both directions
        if (e1->k == E::assoc && e2->k == E::sym && e3->k == E::assoc &&
            weq(e2->x, tensor_word(e1->x, e1->y)) && weq(e2->y, e1->z) &&
            weq(e3->x, e1->z) && weq(e3->y, e1->x) && weq(e3->z, e1->y))
            push("hexagon",
                 {edges::whisk_l(e1->x, edges::sym(P, e1->y, e1->z)),
                  edges::assoc(P, e1->x, e1->z, e1->y),
                  edges::whisk_r(edges::sym(P, e1->x, e1->z), e1->y)});
        if (e1->k == E::whisk_l && e1->inner->k == E::sym &&
            e2->k == E::assoc && e3->k == E::whisk_r &&
            e3->inner->k == E::sym) {
            auto X = e1->x, Y = e1->inner->x, Z = e1->inner->y;
            if (weq(e2->x, X) && weq(e2->y, Z) && weq(e2->z, Y) &&
                weq(e3->x, Y) && weq(e3->inner->x, X) &&
                weq(e3->inner->y, Z))
                push("hexagon",
                     {edges::assoc(P, X, Y, Z),
                      edges::sym(P, tensor_word(X, Y), Z),
                      edges::assoc(P, Z, X, Y)});
        }
        // naturality of gamma in b, forward (3 edges -> 2)
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::tens_r && e2->k == E::whisk_r &&
            e2->inner->k == E::tens_r && e2->x->is_pair() &&
            e3->k == E::gamma) {
            auto a = e1->x->a;
            auto a2 = e1->inner->oa;
            auto g = e1->inner->gb;
            if (A.obj_eq(e2->inner->oa, a) &&
                B.arr_eq(e2->inner->gb, g) &&
                A.obj_eq(e2->x->a, a2) &&
                B.obj_eq(e2->x->b, B.cod(g)) &&
                B.obj_eq(e1->x->b, B.dom(g)) &&
                A.obj_eq(e3->oa, a) && A.obj_eq(e3->oa2, a2) &&
                B.obj_eq(e3->ob, B.cod(g)))
                push("nat-gamma-b",
                     {edges::gamma(P, a, a2, B.dom(g)),
                      edges::tens_r(P, A.tensor(a, a2), g)});
        }
        // naturality of delta in a, forward (3 edges -> 2)
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::tens_l && e2->k == E::whisk_r &&
            e2->inner->k == E::tens_l && e2->x->is_pair() &&
            e3->k == E::delta) {
            auto a = e1->x->a;
            auto f = e1->inner->fa;
            auto b = e1->x->b;
            auto b2 = e1->inner->ob;
            if (A.obj_eq(A.dom(f), a) && A.arr_eq(e2->inner->fa, f) &&
                B.obj_eq(e2->inner->ob, b) && A.obj_eq(e2->x->a, A.cod(f)) &&
                B.obj_eq(e2->x->b, b2) && A.obj_eq(e3->oa, A.cod(f)) &&
                B.obj_eq(e3->ob, b) && B.obj_eq(e3->ob2, b2))
                push("nat-delta-a",
                     {edges::delta(P, a, b, b2),
                      edges::tens_l(P, f, B.tensor(b, b2))});
        }
        // delta-assoc forward: [1⊗delta, delta, a⊗assoc] -> [assoc, delta⊗1, delta]
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::delta && e2->k == E::delta &&
            e3->k == E::tens_r) {
            auto a = e1->x->a;
            auto b = e1->x->b;
            auto b2 = e1->inner->ob;
            auto b3 = e1->inner->ob2;
            if (A.obj_eq(e1->inner->oa, a) && A.obj_eq(e2->oa, a) &&
                B.obj_eq(e2->ob, b) &&
                B.obj_eq(e2->ob2, B.tensor(b2, b3)) &&
                A.obj_eq(e3->oa, a) &&
                B.arr_eq(e3->gb, B.assoc(b, b2, b3))) {
                auto pab = pair_word(P, a, b);
                auto pab2 = pair_word(P, a, b2);
                auto pab3 = pair_word(P, a, b3);
                push("delta-assoc",
                     {edges::assoc(P, pab, pab2, pab3),
                      edges::whisk_r(edges::delta(P, a, b, b2), pab3),
                      edges::delta(P, a, B.tensor(b, b2), b3)});
            }
        }
        // delta-assoc backward
        if (e1->k == E::assoc && e2->k == E::whisk_r &&
            e2->inner->k == E::delta && e3->k == E::delta &&
            e1->x->is_pair() && e1->y->is_pair() && e1->z->is_pair()) {
            auto a = e1->x->a;
            auto b = e1->x->b;
            auto b2 = e1->y->b;
            auto b3 = e1->z->b;
            if (A.obj_eq(e1->y->a, a) && A.obj_eq(e1->z->a, a) &&
                A.obj_eq(e2->inner->oa, a) && B.obj_eq(e2->inner->ob, b) &&
                B.obj_eq(e2->inner->ob2, b2) && weq(e2->x, e1->z) &&
                A.obj_eq(e3->oa, a) && B.obj_eq(e3->ob, B.tensor(b, b2)) &&
                B.obj_eq(e3->ob2, b3))
                push("delta-assoc",
                     {edges::whisk_l(e1->x, edges::delta(P, a, b2, b3)),
                      edges::delta(P, a, b, B.tensor(b2, b3)),
                      edges::tens_r(P, a, B.assoc(b, b2, b3))});
        }
        // gamma-assoc forward
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::gamma && e2->k == E::gamma &&
            e3->k == E::tens_l) {
            auto a = e1->x->a;
            auto b = e1->x->b;
            auto a2 = e1->inner->oa;
            auto a3 = e1->inner->oa2;
            if (B.obj_eq(e1->inner->ob, b) && A.obj_eq(e2->oa, a) &&
                A.obj_eq(e2->oa2, A.tensor(a2, a3)) &&
                B.obj_eq(e2->ob, b) &&
                A.arr_eq(e3->fa, A.assoc(a, a2, a3)) &&
                B.obj_eq(e3->ob, b)) {
                auto pab = pair_word(P, a, b);
                auto pa2b = pair_word(P, a2, b);
                auto pa3b = pair_word(P, a3, b);
                push("gamma-assoc",
                     {edges::assoc(P, pab, pa2b, pa3b),
                      edges::whisk_r(edges::gamma(P, a, a2, b), pa3b),
                      edges::gamma(P, A.tensor(a, a2), a3, b)});
            }
        }
        // gamma-assoc backward
        if (e1->k == E::assoc && e2->k == E::whisk_r &&
            e2->inner->k == E::gamma && e3->k == E::gamma &&
            e1->x->is_pair() && e1->y->is_pair() && e1->z->is_pair()) {
            auto a = e1->x->a;
            auto a2 = e1->y->a;
            auto a3 = e1->z->a;
            auto b = e1->x->b;
            if (B.obj_eq(e1->y->b, b) && B.obj_eq(e1->z->b, b) &&
                A.obj_eq(e2->inner->oa, a) && A.obj_eq(e2->inner->oa2, a2) &&
                B.obj_eq(e2->inner->ob, b) && weq(e2->x, e1->z) &&
                A.obj_eq(e3->oa, A.tensor(a, a2)) && A.obj_eq(e3->oa2, a3) &&
                B.obj_eq(e3->ob, b))
                push("gamma-assoc",
                     {edges::whisk_l(e1->x, edges::gamma(P, a2, a3, b)),
                      edges::gamma(P, a, A.tensor(a2, a3), b),
                      edges::tens_l(P, A.assoc(a, a2, a3), b)});
        }
        // delta-runit / gamma-runit / delta-lunit / gamma-lunit backward
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::beta && e2->k == E::delta &&
            e3->k == E::tens_r && A.obj_eq(e1->inner->oa, e1->x->a) &&
            A.obj_eq(e2->oa, e1->x->a) && B.obj_eq(e2->ob, e1->x->b) &&
            B.obj_eq(e2->ob2, B.unit()) &&
            B.arr_eq(e3->gb, B.runit(e1->x->b)))
            push("delta-runit", {edges::runit(P, e1->x)});
        if (e1->k == E::whisk_l && e1->x->is_pair() &&
            e1->inner->k == E::alpha && e2->k == E::gamma &&
            e3->k == E::tens_l && B.obj_eq(e1->inner->ob, e1->x->b) &&
            A.obj_eq(e2->oa, e1->x->a) && A.obj_eq(e2->oa2, A.unit()) &&
            B.obj_eq(e2->ob, e1->x->b) &&
            A.arr_eq(e3->fa, A.runit(e1->x->a)))
            push("gamma-runit", {edges::runit(P, e1->x)});
        if (e1->k == E::whisk_r && e1->inner->k == E::beta &&
            e1->x->is_pair() && e2->k == E::delta && e3->k == E::tens_r &&
            A.obj_eq(e1->inner->oa, e1->x->a) &&
            A.obj_eq(e2->oa, e1->x->a) && B.obj_eq(e2->ob, B.unit()) &&
            B.obj_eq(e2->ob2, e1->x->b) &&
            B.arr_eq(e3->gb, B.lunit(e1->x->b)))
            push("delta-lunit", {edges::lunit(P, e1->x)});
        if (e1->k == E::whisk_r && e1->inner->k == E::alpha &&
            e1->x->is_pair() && e2->k == E::gamma && e3->k == E::tens_l &&
            B.obj_eq(e1->inner->ob, e1->x->b) &&
            A.obj_eq(e2->oa, A.unit()) && A.obj_eq(e2->oa2, e1->x->a) &&
            B.obj_eq(e2->ob, e1->x->b) &&
            A.arr_eq(e3->fa, A.lunit(e1->x->a)))
            push("gamma-lunit", {edges::lunit(P, e1->x)});
        // alpha-tensor / beta-tensor forward
        if (e1->k == E::whisk_l && e1->x->is_unit() &&
            e1->inner->k == E::alpha && e2->k == E::whisk_r &&
            e2->inner->k == E::alpha && e2->x->is_pair() &&
            A.obj_eq(e2->x->a, A.unit()) &&
            B.obj_eq(e2->x->b, e1->inner->ob) && e3->k == E::delta &&
            A.obj_eq(e3->oa, A.unit()) &&
            B.obj_eq(e3->ob, e2->inner->ob) &&
            B.obj_eq(e3->ob2, e1->inner->ob))
            push("alpha-tensor",
                 {edges::runit(P, unit_word(P)),
                  edges::alpha(P, B.tensor(e2->inner->ob, e1->inner->ob))});
        if (e1->k == E::whisk_l && e1->x->is_unit() &&
            e1->inner->k == E::beta && e2->k == E::whisk_r &&
            e2->inner->k == E::beta && e2->x->is_pair() &&
            B.obj_eq(e2->x->b, B.unit()) &&
            A.obj_eq(e2->x->a, e1->inner->oa) && e3->k == E::gamma &&
            B.obj_eq(e3->ob, B.unit()) &&
            A.obj_eq(e3->oa, e2->inner->oa) &&
            A.obj_eq(e3->oa2, e1->inner->oa))
            push("beta-tensor",
                 {edges::runit(P, unit_word(P)),
                  edges::beta(P, A.tensor(e2->inner->oa, e1->inner->oa))});
        // gamma-delta interchange forward (3 -> 8)
        if (e1->k == E::whisk_l && e1->inner->k == E::delta &&
            e2->k == E::whisk_r && e2->inner->k == E::delta &&
            e3->k == E::gamma && e1->x->is_tensor() &&
            e1->x->left->is_pair() && e1->x->right->is_pair()) {
            auto a = e1->x->left->a;
            auto b = e1->x->left->b;
            auto b2 = e1->x->right->b;
            auto a2 = e1->inner->oa;
            if (A.obj_eq(e1->x->right->a, a) &&
                B.obj_eq(e1->inner->ob, b) && B.obj_eq(e1->inner->ob2, b2) &&
                A.obj_eq(e2->inner->oa, a) && B.obj_eq(e2->inner->ob, b) &&
                B.obj_eq(e2->inner->ob2, b2) && e2->x->is_pair() &&
                A.obj_eq(e2->x->a, a2) &&
                B.obj_eq(e2->x->b, B.tensor(b, b2)) &&
                A.obj_eq(e3->oa, a) && A.obj_eq(e3->oa2, a2) &&
                B.obj_eq(e3->ob, B.tensor(b, b2))) {
                auto pab = pair_word(P, a, b);
                auto pab2 = pair_word(P, a, b2);
                auto pa2b = pair_word(P, a2, b);
                auto pa2b2 = pair_word(P, a2, b2);
                auto m = mfour_path(P, pab, pab2, pa2b, pa2b2);
                std::vector<EdgePtr<MA, MB>> repl = m.edges;
                repl.push_back(edges::whisk_l(
                    tensor_word(pab, pa2b), edges::gamma(P, a, a2, b2)));
                repl.push_back(edges::whisk_r(
                    edges::gamma(P, a, a2, b),
                    pair_word(P, A.tensor(a, a2), b2)));
                repl.push_back(
                    edges::delta(P, A.tensor(a, a2), b, b2));
                push("gamma-delta-mix", std::move(repl));
            }
        }
        return;
    }

    if (q.size() == 8) {
        // gamma-delta interchange backward (8 -> 3)
        const auto& e6 = q[5];
        const auto& e7 = q[6];
        const auto& e8 = q[7];
        if (e6->k == E::whisk_l && e6->inner->k == E::gamma &&
            e7->k == E::whisk_r && e7->inner->k == E::gamma &&
            e8->k == E::delta) {
            auto a = e7->inner->oa;
            auto a2 = e7->inner->oa2;
            auto b = e7->inner->ob;
            auto b2 = e6->inner->ob;
            if (A.obj_eq(e6->inner->oa, a) && A.obj_eq(e6->inner->oa2, a2) &&
                A.obj_eq(e8->oa, A.tensor(a, a2)) && B.obj_eq(e8->ob, b) &&
                B.obj_eq(e8->ob2, b2)) {
                auto pab = pair_word(P, a, b);
                auto pab2 = pair_word(P, a, b2);
                auto pa2b = pair_word(P, a2, b);
                auto pa2b2 = pair_word(P, a2, b2);
                auto m = mfour_path(P, pab, pab2, pa2b, pa2b2);
                bool match = true;
                for (int i = 0; i < 5; ++i)
                    if (q[i]->key != m.edges[i]->key) match = false;
                if (match && e6->x->key == tensor_word(pab, pa2b)->key &&
                    e7->x->key == pair_word(P, A.tensor(a, a2), b2)->key)
                    push("gamma-delta-mix",
                         {edges::whisk_l(tensor_word(pab, pab2),
                                         edges::delta(P, a2, b, b2)),
                          edges::whisk_r(edges::delta(P, a, b, b2),
                                         pair_word(P, a2, B.tensor(b, b2))),
                          edges::gamma(P, a, a2, B.tensor(b, b2))});
            }
        }
        return;
    }
}

/// Identity-side relation instances insertable at a subword occurrence:
/// pairs composing to the identity plus the two H3 identity edges.
template <class MA, class MB>
void insertions_at(const PresCtx<MA, MB>& P, const WordPtr<MA, MB>& s,
                   std::vector<CoreMatch<MA, MB>>& out) {
    using E = std::vector<EdgePtr<MA, MB>>;
    out.push_back({"iso-lunit", E{edges::lunit_inv(P, s),
                                  edges::lunit(P, s)}});
    out.push_back({"iso-runit", E{edges::runit_inv(P, s),
                                  edges::runit(P, s)}});
    if (s->is_tensor()) {
        out.push_back({"iso-sym", E{edges::sym(P, s->left, s->right),
                                    edges::sym(P, s->right, s->left)}});
        if (s->right->is_tensor())
            out.push_back(
                {"iso-assoc",
                 E{edges::assoc(P, s->left, s->right->left, s->right->right),
                   edges::assoc_inv(P, s->left, s->right->left,
                                    s->right->right)}});
        if (s->left->is_tensor())
            out.push_back(
                {"iso-assoc",
                 E{edges::assoc_inv(P, s->left->left, s->left->right,
                                    s->right),
                   edges::assoc(P, s->left->left, s->left->right, s->right)}});
        if (s->left->is_unit())
            out.push_back({"iso-lunit", E{edges::lunit(P, s->right),
                                          edges::lunit_inv(P, s->right)}});
        if (s->right->is_unit())
            out.push_back({"iso-runit", E{edges::runit(P, s->left),
                                          edges::runit_inv(P, s->left)}});
    }
    if (s->is_pair()) {
        out.push_back(
            {"h3-id-r", E{edges::tens_r(P, s->a, P.B.id(s->b))}});
        out.push_back(
            {"h3-id-l", E{edges::tens_l(P, P.A.id(s->a), s->b)}});
    }
}

} // namespace rels

namespace detail {

/// Whisker contexts, outermost first.
template <class MA, class MB>
struct WhiskCtx {
    bool left; // true: X ⊗ -, false: - ⊗ X
    WordPtr<MA, MB> x;
};

template <class MA, class MB>
std::vector<EdgePtr<MA, MB>> rewrap(
    const std::vector<detail::WhiskCtx<MA, MB>>& ctxs,
    const std::vector<EdgePtr<MA, MB>>& core) {
    std::vector<EdgePtr<MA, MB>> out = core;
    for (auto it = ctxs.rbegin(); it != ctxs.rend(); ++it) {
        std::vector<EdgePtr<MA, MB>> next;
        next.reserve(out.size());
        for (const auto& e : out)
            next.push_back(it->left ? edges::whisk_l(it->x, e)
                                    : edges::whisk_r(e, it->x));
        out = std::move(next);
    }
    return out;
}

template <class MA, class MB>
void occurrences(const WordPtr<MA, MB>& w,
                 std::vector<detail::WhiskCtx<MA, MB>>& ctx,
                 std::vector<std::pair<std::vector<detail::WhiskCtx<MA, MB>>,
                                       WordPtr<MA, MB>>>& out) {
    out.push_back({ctx, w});
    if (w->is_tensor()) {
        ctx.push_back({false, w->right}); // left child: - ⊗ right
        occurrences(w->left, ctx, out);
        ctx.back() = {true, w->left}; // right child: left ⊗ -
        occurrences(w->right, ctx, out);
        ctx.pop_back();
    }
}

} // namespace detail

/// Every path obtainable from p by one relation-instance rewrite (either
/// orientation, any factorization position, under any whisker context),
/// ordered by (relation id, position, result key).
template <class MA, class MB>
std::vector<Rewrite<MA, MB>> neighbors(const PresCtx<MA, MB>& P,
                                       const TenPath<MA, MB>& p) {
    std::vector<Rewrite<MA, MB>> out;
    const int n = static_cast<int>(p.edges.size());

    auto splice = [&](int start, int len,
                      const std::vector<EdgePtr<MA, MB>>& repl,
                      const std::string& rel) {
        TenPath<MA, MB> r{p.dom, {}};
        r.edges.insert(r.edges.end(), p.edges.begin(),
                       p.edges.begin() + start);
        r.edges.insert(r.edges.end(), repl.begin(), repl.end());
        r.edges.insert(r.edges.end(), p.edges.begin() + start + len,
                       p.edges.end());
        out.push_back(Rewrite<MA, MB>{std::move(r), rel, start});
    };

    // substitution moves
    for (int start = 0; start < n; ++start) {
        for (int len : {1, 2, 3, 8}) {
            if (start + len > n) continue;
            std::vector<EdgePtr<MA, MB>> core(p.edges.begin() + start,
                                              p.edges.begin() + start + len);
            std::vector<detail::WhiskCtx<MA, MB>> ctxs;
            while (true) {
                std::vector<rels::CoreMatch<MA, MB>> ms;
                rels::match_core(P, core, ms);
                for (auto& m : ms)
                    splice(start, len, detail::rewrap(ctxs, m.repl), m.rel);
                // peel one common whisker level
                bool all_l = true, all_r = true;
                for (const auto& e : core) {
                    all_l = all_l && e->k == EdgeKind::whisk_l &&
                            word_eq(e->x, core[0]->x);
                    all_r = all_r && e->k == EdgeKind::whisk_r &&
                            word_eq(e->x, core[0]->x);
                }
                if (!all_l && !all_r) break;
                ctxs.push_back({all_l, core[0]->x});
                std::vector<EdgePtr<MA, MB>> peeled;
                peeled.reserve(core.size());
                for (const auto& e : core) peeled.push_back(e->inner);
                core = std::move(peeled);
            }
        }
    }
    // insertion moves
    for (int start = 0; start <= n; ++start) {
        WordPtr<MA, MB> at = start == 0 ? p.dom : p.edges[start - 1]->cod;
        std::vector<detail::WhiskCtx<MA, MB>> ctx;
        std::vector<std::pair<std::vector<detail::WhiskCtx<MA, MB>>,
                              WordPtr<MA, MB>>> occs;
        detail::occurrences(at, ctx, occs);
        for (auto& [c, sub] : occs) {
            std::vector<rels::CoreMatch<MA, MB>> ms;
            rels::insertions_at(P, sub, ms);
            for (auto& m : ms)
                splice(start, 0, detail::rewrap(c, m.repl), m.rel);
        }
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const Rewrite<MA, MB>& a, const Rewrite<MA, MB>& b) {
                         if (a.rel != b.rel) return a.rel < b.rel;
                         if (a.pos != b.pos) return a.pos < b.pos;
                         return a.result.key() < b.result.key();
                     });
    return out;
}

} // namespace smck

#endif
