#include <catch2/catch_amalgamated.hpp>

#include <random>

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

using Path = TenPath<TableSmc, TableSmc>;

bool has_neighbor(const Path& p, const Path& q) {
    for (auto& rw : neighbors(P, p))
        if (rw.result.key() == q.key()) return true;
    return false;
}
} // namespace

TEST_CASE("relation table and matcher agree instance by instance") {
    auto insts = relation_table(P, 4);
    size_t checked = 0;
    for (const auto& inst : insts) {
        INFO(inst.rel << ": " << inst.lhs.shown() << "  ~  "
                      << inst.rhs.shown());
        CHECK(has_neighbor(inst.lhs, inst.rhs));
        CHECK(has_neighbor(inst.rhs, inst.lhs));
        ++checked;
    }
    CHECK(checked == insts.size());
}

TEST_CASE("whiskered instances are still matched") {
    auto insts = relation_table(P, 3);
    auto ctx_word = pair_word(P, 0, 1);
    int tried = 0;
    for (const auto& inst : insts) {
        if (tried >= 40) break;
        ++tried;
        auto l = whisker_left_path(ctx_word, inst.lhs);
        auto r = whisker_left_path(ctx_word, inst.rhs);
        INFO(inst.rel);
        CHECK(has_neighbor(l, r));
        auto l2 = whisker_right_path(inst.lhs, ctx_word);
        auto r2 = whisker_right_path(inst.rhs, ctx_word);
        CHECK(has_neighbor(l2, r2));
    }
}

TEST_CASE("identity is decided trivially") {
    auto x = pair_word(P, 0, 1);
    auto p = edge_path(edges::sym(P, x, x));
    auto v = decide_equal(P, p, p, 0, {});
    CHECK(v.is_equal());
}

TEST_CASE("the two unit introductions are identified quickly") {
    auto beta_i = edge_path(edges::beta(P, 0));
    auto alpha_i = edge_path(edges::alpha(P, 0));
    auto v = decide_equal(P, beta_i, alpha_i, 4, {});
    REQUIRE(v.is_equal());
    CHECK(replay_witness(P, beta_i, alpha_i, v));
}

TEST_CASE("iso pairs collapse at budget 2") {
    auto x = pair_word(P, 0, 0);
    auto y = pair_word(P, 0, 1);
    std::vector<Path> loops = {
        make_path(tensor_word(x, tensor_word(y, x)),
                  {edges::assoc(P, x, y, x), edges::assoc_inv(P, x, y, x)}),
        make_path(tensor_word(unit_word(P), y),
                  {edges::lunit(P, y), edges::lunit_inv(P, y)}),
        make_path(y, {edges::runit_inv(P, y), edges::runit(P, y)}),
        make_path(tensor_word(x, y),
                  {edges::sym(P, x, y), edges::sym(P, y, x)}),
    };
    for (const auto& p : loops) {
        auto v = decide_equal(P, p, identity_path(p.dom), 2, {});
        INFO(p.shown());
        REQUIRE(v.is_equal());
        CHECK(replay_witness(P, p, identity_path(p.dom), v));
    }
}

TEST_CASE("endpoint mismatch is a precondition error") {
    auto x = pair_word(P, 0, 0);
    auto y = pair_word(P, 0, 1);
    CHECK_THROWS_AS(decide_equal(P, identity_path(x), identity_path(y), 1, {}),
                    Error);
}

TEST_CASE("budget exhaustion returns unknown with spent count") {
    // deep mixed pair: two long unrelated-looking paths
    auto x = pair_word(P, 0, 0);
    auto p = make_path(tensor_word(x, x),
                       {edges::sym(P, x, x), edges::sym(P, x, x),
                        edges::sym(P, x, x), edges::sym(P, x, x)});
    auto q = make_path(tensor_word(x, x), {edges::gamma(P, 0, 0, 0)});
    // endpoints: gamma lands at (0,0) pair, p stays at (x*x): not parallel,
    // so build a parallel-but-hard pair instead: sym vs identity
    auto s = edge_path(edges::sym(P, x, x));
    auto v = decide_equal(P, s, identity_path(s.dom), 3, {});
    CHECK(v.is_unknown());
    CHECK(v.expanded == 3);
    (void)p;
    (void)q;
}

TEST_CASE("extensions refute sym(X,X) vs identity over the Z3 base") {
    // evaluator: the strict functor sending (•,b) words to b with the
    // symmetry of z2 acting... use a table target where sym acts
    // non-trivially: the Z3-monoid-valued extension of the word category
    // over (Z3mon, Z2): F̄((•,b)) = •; canonical arrows map to canonicals
    // of the target; tens_l(f,b) ↦ f. Distinctness comes from tens_l.
    auto p = edge_path(edges::tens_l(P, 1, 0));
    auto q = edge_path(edges::tens_l(P, 2, 0));
    Extension<TableSmc, TableSmc> ext{
        "collapse-to-a",
        [](const Path& path) {
            // strict evaluator into the Z3 monoid: every word ↦ the
            // object •, pair (•,b) carries no B data; canonical edges
            // and tens_r map to 0, tens_l(f, b) ↦ f, whiskers add.
            std::function<int(const EdgePtr<TableSmc, TableSmc>&)> ev =
                [&](const EdgePtr<TableSmc, TableSmc>& e) -> int {
                switch (e->k) {
                    case EdgeKind::tens_l: return e->fa;
                    case EdgeKind::whisk_l:
                    case EdgeKind::whisk_r: return ev(e->inner);
                    default: return 0;
                }
            };
            int acc = 0;
            for (const auto& e : path.edges) acc = (acc + ev(e)) % 3;
            return cat("z3:", acc);
        }};
    auto v = decide_equal(P, p, q, 10, {ext});
    REQUIRE(v.is_distinct());
    CHECK(v.extension == "collapse-to-a");
    CHECK(v.lhs_image != v.rhs_image);
}

TEST_CASE("no refutation without extensions, and equal pairs never refute") {
    auto p = edge_path(edges::tens_l(P, 1, 0));
    auto q = edge_path(edges::tens_l(P, 2, 0));
    auto v = decide_equal(P, p, q, 5, {});
    CHECK(v.is_unknown());
}

TEST_CASE("canonical fragment: BFS agrees with the permutation decision") {
    std::mt19937 rng(20240817);
    const int budget = 12;
    auto words = enumerate_words(P, 4);
    std::vector<WordPtr<TableSmc, TableSmc>> pool;
    for (auto& w : words)
        if (w->leaves >= 1 && w->leaves <= 3) pool.push_back(w);
    REQUIRE(!pool.empty());

    auto random_canonical_walk = [&](const WordPtr<TableSmc, TableSmc>& from,
                                     int steps) {
        Path p = identity_path(from);
        for (int i = 0; i < steps; ++i) {
            std::vector<Rewrite<TableSmc, TableSmc>> moves;
            for (auto& rw : neighbors(P, p))
                if (path_is_canonical(rw.result)) moves.push_back(rw);
            if (moves.empty()) break;
            p = moves[rng() % moves.size()].result;
        }
        return p;
    };

    int agreements = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto from = pool[rng() % pool.size()];
        Path p = random_canonical_walk(from, 1 + rng() % 3);
        // q: the canonical arrow with the same endpoints and either the
        // same or a perturbed permutation
        Perm perm = path_perm(p);
        Path q = canonical_arrow(P, from, p.cod(), perm);
        bool expect = true;
        if (trial % 3 == 0 && perm.size() >= 2) {
            // try a transposition; keep it only if labels still match
            Perm alt = perm;
            std::swap(alt[0], alt[1]);
            try {
                q = canonical_arrow(P, from, p.cod(), alt);
                expect = false;
            } catch (const Error&) {
            }
        }
        bool cd = canonical_decide(p, q);
        CHECK(cd == (expect && true));
        auto v = decide_equal(P, p, q, budget, {});
        if (v.is_equal()) {
            CHECK(cd);
            CHECK(replay_witness(P, p, q, v));
            ++agreements;
        }
        CHECK_FALSE(v.is_distinct());
    }
    CHECK(agreements > 0);
}
