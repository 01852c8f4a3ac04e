#include <catch2/catch_amalgamated.hpp>

#include "smckit/fincat.hpp"
#include "smckit/fixtures.hpp"

using namespace smck;

namespace {

FinCat terminal_cat() {
    FinCat c = make_fincat(1, 1);
    c.arrows[0] = Arrow{0, 0, 0};
    c.identity[0] = 0;
    c.comp_at(0, 0) = 0;
    return c;
}

FinCat discrete(int n) {
    FinCat c = make_fincat(n, n);
    for (int i = 0; i < n; ++i) {
        c.arrows[i] = Arrow{i, i, i};
        c.identity[i] = i;
        c.comp_at(i, i) = i;
    }
    return c;
}

// Three-element commutative monoid on {1, e, f} would not be closed;
// use {1, e} with e·e = e for the mutation tests.
FinCat idem_monoid_cat() { return fixtures::idem_monoid().base; }

} // namespace

TEST_CASE("terminal category validates") {
    CHECK(validate_category(terminal_cat()).empty());
}

TEST_CASE("discrete category on {0,1} validates") {
    CHECK(validate_category(discrete(2)).empty());
}

TEST_CASE("broken comp table is reported with the offending triple") {
    // one-object monoid Z4: mutate one entry so associativity fails
    FinCat c = fixtures::cyclic_monoid(4).base;
    REQUIRE(validate_category(c).empty());
    c.comp_at(1, 1) = 3; // 1+1 "=" 3
    Report r = validate_category(c);
    REQUIRE_FALSE(r.empty());
    CHECK(mentions(r, "associativity"));
}

TEST_CASE("dangling id is a structural error, not a law violation") {
    FinCat c = discrete(2);
    c.arrows[1].cod = 7;
    Report r = validate_category(c);
    REQUIRE_FALSE(r.empty());
    CHECK(r.front().structural);
}

TEST_CASE("compose is table lookup") {
    FinCat m = idem_monoid_cat();
    CHECK(compose(m, 1, 1) == 1);        // e∘e = e
    CHECK(compose(m, m.id(0), 1) == 1);  // id∘e = e

    FinCat z3 = fixtures::z3_monoid().base;
    CHECK(compose(z3, 1, 2) == 0); // 1+2 = 0 mod 3
}

TEST_CASE("compose rejects non-composable pairs") {
    FinCat c = discrete(2);
    CHECK_THROWS_AS(compose(c, 0, 1), Error);
}

TEST_CASE("size caps are enforced") {
    CHECK_THROWS_AS(make_fincat(65, 0), CapError);
    CHECK_THROWS_AS(make_fincat(1, 513), CapError);
}

TEST_CASE("product category") {
    FinCat one = terminal_cat();
    ProductCat p = product_category(one, one);
    CHECK(p.cat.n_obj == 1);
    CHECK(p.cat.n_arr() == 1);
    CHECK(validate_category(p.cat).empty());

    ProductCat q = product_category(discrete(2), discrete(2));
    CHECK(q.cat.n_obj == 4);
    CHECK(q.cat.n_arr() == 4);
    CHECK(validate_category(q.cat).empty());

    // projections of Z2 x Z3-monoid are functors
    ProductCat z = product_category(discrete(2), fixtures::z3_monoid().base);
    CHECK(validate_category(z.cat).empty());
    CHECK(validate_functor(z.p1, z.cat, discrete(2)).empty());
    CHECK(validate_functor(z.p2, z.cat, fixtures::z3_monoid().base).empty());
}

TEST_CASE("product projections jointly reflect arrow equality") {
    FinCat a = idem_monoid_cat();
    FinCat b = fixtures::z3_monoid().base;
    ProductCat p = product_category(a, b);
    for (ArrId f = 0; f < p.cat.n_arr(); ++f)
        for (ArrId g = 0; g < p.cat.n_arr(); ++g) {
            bool same_proj = p.p1.arr(f) == p.p1.arr(g) &&
                             p.p2.arr(f) == p.p2.arr(g);
            CHECK(same_proj == (f == g));
        }
}

TEST_CASE("validate_functor basics") {
    FinCat m = idem_monoid_cat();
    CHECK(validate_functor(identity_functor_data(m), m, m).empty());

    // e ↦ id is a monoid hom
    FunctorData collapse;
    collapse.obj_map = {0};
    collapse.arr_map = {0, 0};
    CHECK(validate_functor(collapse, m, m).empty());

    // e ↦ e with broken composition: send id to e
    FunctorData bad;
    bad.obj_map = {0};
    bad.arr_map = {1, 1};
    Report r = validate_functor(bad, m, m);
    CHECK(mentions(r, "functor-identity"));
}

TEST_CASE("constant functor to a chosen object validates") {
    FinCat d2 = discrete(2);
    FunctorData k;
    k.obj_map = {1, 1};
    k.arr_map = {1, 1};
    CHECK(validate_functor(k, d2, d2).empty());
}

TEST_CASE("validate_functor identity is empty for every corpus category") {
    for (const auto& c :
         {terminal_cat(), discrete(2), idem_monoid_cat(),
          fixtures::z3_monoid().base, fixtures::z2_x_z3().base}) {
        CHECK(validate_functor(identity_functor_data(c), c, c).empty());
    }
}

TEST_CASE("validate_nattrans") {
    FinCat m = idem_monoid_cat();
    FunctorData idm = identity_functor_data(m);

    NatTransData idt;
    idt.components = {0};
    CHECK(validate_nattrans(idt, idm, idm, m, m).empty());

    // component e between the identity functor and itself is natural
    // (the monoid is commutative)
    NatTransData te;
    te.components = {1};
    CHECK(validate_nattrans(te, idm, idm, m, m).empty());

    // no component exists between distinct constant functors into a
    // discrete category: structural error
    FinCat d2 = discrete(2);
    FunctorData k0{{0, 0}, {0, 0}}, k1{{1, 1}, {1, 1}};
    NatTransData t01;
    t01.components = {0, 0};
    Report r = validate_nattrans(t01, k0, k1, d2, d2);
    REQUIRE_FALSE(r.empty());
    CHECK(r.front().structural);
}

TEST_CASE("compose_chain and inverses") {
    FinCat z3 = fixtures::z3_monoid().base;
    CHECK(compose_chain(z3, 0, {1, 1, 1}) == 0);
    CHECK(inverse(z3, 1) == 2);
    FinCat m = idem_monoid_cat();
    CHECK(find_inverse(m, 1) == -1);
}
