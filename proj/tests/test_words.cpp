#include <catch2/catch_amalgamated.hpp>

#include "smckit/fixtures.hpp"
#include "smckit/tensorops.hpp"

using namespace smck;
using namespace smck::fixtures;

namespace {
const SmcStructure g_a = z3_monoid();
const SmcStructure g_b = z2();
const TableSmc g_ma{g_a};
const TableSmc g_mb{g_b};
const PresCtx<TableSmc, TableSmc> P{g_ma, g_mb};
} // namespace

TEST_CASE("word construction and endpoints") {
    auto I = unit_word(P);
    auto p01 = pair_word(P, 0, 1);
    auto w = tensor_word(p01, I);
    CHECK(w->leaves == 1);
    CHECK(w->total_leaves == 2);
    CHECK(w->key != p01->key);

    auto g = edges::gamma(P, 0, 0, 1);
    CHECK(word_eq(g->dom, tensor_word(p01, p01)));
    CHECK(word_eq(g->cod, p01)); // 0⊗0 = 0 in the Z3 monoid's object set

    auto d = edges::delta(P, 0, 1, 1);
    CHECK(word_eq(d->cod, pair_word(P, 0, 0))); // 1 xor 1 = 0

    auto al = edges::alpha(P, 1);
    CHECK(word_eq(al->dom, I));
    CHECK(word_eq(al->cod, pair_word(P, 0, 1)));

    auto tl = edges::tens_l(P, 2, 1);
    CHECK(word_eq(tl->dom, p01));
    CHECK(word_eq(tl->cod, p01)); // one-object A side
}

TEST_CASE("paths compose and whisker") {
    auto p01 = pair_word(P, 0, 1);
    auto s = edges::sym(P, p01, p01);
    auto pth = make_path(s->dom, {s, edges::sym(P, p01, p01)});
    CHECK(pth.size() == 2);
    CHECK(word_eq(pth.cod(), s->dom));
    CHECK_THROWS_AS(make_path(p01, {s}), Error);

    auto w = whisker_left_path(p01, pth);
    CHECK(w.size() == 2);
    CHECK(word_eq(w.dom, tensor_word(p01, s->dom)));

    // identities absorb: id ⊗ id = id
    auto idp = identity_path(p01);
    CHECK(tensor_path(idp, idp).is_identity());
}

TEST_CASE("tensor of paths uses the fixed expansion order") {
    auto p01 = pair_word(P, 0, 1);
    auto f = edge_path(edges::tens_l(P, 1, 1)); // arrow 1 of A at b=1
    auto g = edge_path(edges::tens_r(P, 0, 1)); // a=0, id-ish arrow 1 of B
    auto t = tensor_path(f, g);
    REQUIRE(t.size() == 2);
    CHECK(t.edges[0]->k == EdgeKind::whisk_l);
    CHECK(t.edges[1]->k == EdgeKind::whisk_r);
    CHECK(word_eq(t.edges[0]->x, f.dom));
    (void)p01;
}

TEST_CASE("canonical permutations") {
    auto x = pair_word(P, 0, 0);
    auto y = pair_word(P, 1, 1);
    auto s = edges::sym(P, x, y);
    CHECK(edge_perm(s) == Perm{1, 0});
    auto a = edges::assoc(P, x, y, x);
    CHECK(edge_perm(a) == Perm{0, 1, 2});
    auto w = edges::whisk_l(x, s);
    CHECK(edge_perm(w) == Perm{0, 2, 1});

    // sym;sym composes to the identity permutation
    auto loop = make_path(s->dom, {s, edges::sym(P, y, x)});
    CHECK(path_perm(loop) == identity_perm(2));
    CHECK(canonical_decide(loop, identity_path(s->dom)));

    // sym(X,X) at a single pair leaf is not the identity
    auto sxx = edge_path(edges::sym(P, x, x));
    CHECK_FALSE(canonical_decide(sxx, identity_path(sxx.dom)));
}

TEST_CASE("canonical_decide rejects non-canonical paths and mismatches") {
    auto x = pair_word(P, 0, 0);
    auto h3 = edge_path(edges::tens_r(P, 0, 0));
    CHECK_THROWS_AS(canonical_decide(h3, h3), Error);
    auto s = edge_path(edges::sym(P, x, x));
    CHECK_THROWS_AS(canonical_decide(s, identity_path(x)), Error);
}

TEST_CASE("normal form and canonical_arrow") {
    auto x = pair_word(P, 0, 0);
    auto y = pair_word(P, 0, 1);
    auto I = unit_word(P);
    // ((x ⊗ I) ⊗ (y ⊗ x))
    auto w = tensor_word(tensor_word(x, I), tensor_word(y, x));
    auto nf = smck::detail::normalize(P, w);
    CHECK(nf.leaves.size() == 3);
    CHECK(word_eq(nf.path.cod(), nf.comb));
    CHECK(path_perm(nf.path) == identity_perm(3));

    // canonical arrow realizing a 3-cycle on (x,y,x) -> (x,x,y)
    auto src = tensor_word(x, tensor_word(y, x));
    auto dst = tensor_word(x, tensor_word(x, y));
    Perm perm{0, 2, 1};
    auto arr = canonical_arrow(P, src, dst, perm);
    CHECK(word_eq(arr.dom, src));
    CHECK(word_eq(arr.cod(), dst));
    CHECK(path_perm(arr) == perm);

    // impossible permutation (labels differ) is rejected
    CHECK_THROWS_AS(canonical_arrow(P, src, dst, Perm{1, 0, 2}), Error);
}

TEST_CASE("mfour path has the middle-four permutation") {
    auto x = pair_word(P, 0, 0);
    auto y = pair_word(P, 0, 1);
    auto m = mfour_path(P, x, y, x, y);
    CHECK(path_perm(m) == Perm{0, 2, 1, 3});
    CHECK(word_eq(m.dom,
                  tensor_word(tensor_word(x, y), tensor_word(x, y))));
    CHECK(word_eq(m.cod(),
                  tensor_word(tensor_word(x, x), tensor_word(y, y))));
}

TEST_CASE("path inverse inverts canonical paths") {
    auto x = pair_word(P, 0, 0);
    auto y = pair_word(P, 0, 1);
    auto m = mfour_path(P, x, y, y, x);
    auto mi = path_inverse(P, m);
    auto round = concat(m, mi);
    CHECK(canonical_decide(round, identity_path(m.dom)));
}

TEST_CASE("word enumeration respects the leaf bound") {
    auto ws = enumerate_words(P, 2);
    // sizes: 1 leaf: I + 1*2 pairs = 3; 2 leaves: 3*3 tensors = 9
    CHECK(ws.size() == 12);
    for (const auto& w : ws) CHECK(w->total_leaves <= 2);
}

TEST_CASE("relation instances are parallel and within the leaf bound") {
    auto insts = relation_table(P, 4);
    CHECK(insts.size() > 100);
    for (const auto& inst : insts) {
        CHECK(word_eq(inst.lhs.dom, inst.rhs.dom));
        CHECK(word_eq(inst.lhs.cod(), inst.rhs.cod()));
        CHECK(inst.lhs.dom->total_leaves <= 4);
    }
}
