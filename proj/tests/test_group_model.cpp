#include <doctest.h>

#include <random>

#include "gkgraph/group_model.hpp"

using namespace gk;

TEST_CASE("finite field modulus selection is deterministic") {
    FiniteField f4(2, 2);
    CHECK(f4.spec().modulus == std::vector<int>{1, 1, 1}); // x^2 + x + 1
    CHECK(f4.order() == 4);

    FiniteField f9(3, 2);
    CHECK(f9.spec().modulus == std::vector<int>{1, 0, 1}); // x^2 + 1
    CHECK(f9.order() == 9);

    FiniteField f3(3, 1);
    CHECK(f3.spec().modulus == std::vector<int>{0, 1}); // x
    CHECK(f3.order() == 3);

    CHECK_THROWS_AS(FiniteField(4, 2), ValidationError);
    CHECK_THROWS_AS(FiniteField(2, 0), ValidationError);

    FiniteFieldSpec bad{2, 2, {1, 0, 1}}; // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS((FiniteField{bad}), ValidationError);
    CHECK_NOTHROW(FiniteField(f9.spec()));
}

TEST_CASE("field arithmetic") {
    FiniteField f4(2, 2);
    FqElem x = f4.element_at(2); // the polynomial x
    CHECK(f4.mul(x, x) == f4.add(x, f4.one())); // x^2 = x + 1 mod x^2+x+1
    CHECK(f4.is_one(f4.pow(x, 3)));
    CHECK(f4.multiplicative_order(x) == 3);

    FiniteField f9(3, 2);
    for (unsigned long long i = 0; i < 9; ++i) {
        FqElem e = f9.element_at(i);
        CHECK(f9.index_of(e) == i);
        CHECK(f9.is_zero(f9.add(e, f9.neg(e))));
        if (!f9.is_zero(e)) CHECK(8 % f9.multiplicative_order(e) == 0);
    }
    CHECK_THROWS_AS(f9.multiplicative_order(f9.zero()), ValidationError);

    FqElem g = f9.element_of_order(2);
    CHECK(f9.multiplicative_order(g) == 2);
    CHECK_THROWS_AS(f9.element_of_order(5), ValidationError);
}

TEST_CASE("irreducibility tests") {
    CHECK(polynomial_is_irreducible(2, {1, 1, 1}));       // x^2+x+1
    CHECK_FALSE(polynomial_is_irreducible(2, {1, 0, 1})); // (x+1)^2
    CHECK(polynomial_is_irreducible(2, {1, 1, 0, 1}));    // x^3+x+1
    CHECK(polynomial_is_irreducible(3, {1, 0, 1}));       // x^2+1 over F_3
    CHECK_FALSE(polynomial_is_irreducible(3, {2, 0, 1})); // x^2-1
}

TEST_CASE("frobenius degrees and modules") {
    CHECK(frobenius_degree(5, 7) == 4);
    CHECK(frobenius_degree(3, 2) == 2);
    CHECK(frobenius_degree(2, 3) == 1);
    CHECK(frobenius_degree(13, 3) == 3); // 3^3 = 27 = 2*13 + 1

    FrobeniusModuleSpec m = build_frobenius_module(2, 3, 32);
    CHECK(m.field.d == 1);
    CHECK(m.generator_action == FqElem{2}); // x -> -x on F_3
    CHECK(verify_fixed_point_free(m));

    FrobeniusModuleSpec big = build_frobenius_module(5, 7, 32);
    CHECK(big.field.d == 4);
    CHECK(verify_fixed_point_free(big));

    FrobeniusModuleSpec lit = build_frobenius_module(3, 2, 32, true);
    CHECK(lit.field.d == 2); // blanket degree p-1
    CHECK(verify_fixed_point_free(lit));

    CHECK_THROWS_AS(build_frobenius_module(13, 2, 8), FieldTooLarge);
    CHECK_THROWS_AS(build_frobenius_module(3, 3, 32), ValidationError);

    // corrupting the action is caught by the verifier
    FrobeniusModuleSpec broken = build_frobenius_module(2, 3, 32);
    broken.generator_action = FqElem{1}; // identity fixes everything
    CHECK_FALSE(verify_fixed_point_free(broken));
}

TEST_CASE("recipe for an edge builds the order-75 witness") {
    PrimeGraph xi = new_graph({3, 5}, {{3, 5}});
    auto r = find_solvable_recipe(xi);
    REQUIRE(r.has_value());
    CHECK(r->order_or_zero() == 75); // F_25 : C_3
    CHECK(r->W_primes.empty());
    REQUIRE(r->U_components.size() == 1);
    CHECK(r->U_components[0].u == 3);
    REQUIRE(r->V_components.size() == 1);
    CHECK(r->V_components[0].v == 5);
    CHECK(r->V_components[0].dim() == 2);
    CHECK(recipe_to_json(*r).find("\"order\"") != std::string::npos);

    ExplicitGroup g = realize_explicit(*r);
    CHECK(g.order() == 75);
    CHECK(g.primes() == std::set<Vertex>{3, 5});
    CHECK(pgc_of_explicit(g) == xi);
}

TEST_CASE("recipe failures name the broken clause") {
    PrimeGraph tri = new_graph({3, 5, 7}, {{3, 5}, {3, 7}, {5, 7}});
    CHECK_FALSE(find_solvable_recipe(tri).has_value());

    // forced source chain 7 -> 11 -> 3 with 7 not dividing 10
    PrimeGraph chain = new_graph({3, 7, 11}, {{7, 11}, {3, 11}});
    Coloring c;
    c.assignment = {{7, 0}, {11, 1}, {3, 2}};
    c.k = 3;
    CHECK_THROWS_AS(build_solvable_recipe(chain, c), HypothesisViolation);

    // the same shape with 5 as source works since 5 | 10
    PrimeGraph ok = new_graph({3, 5, 11}, {{5, 11}, {3, 11}});
    Coloring c2;
    c2.assignment = {{5, 0}, {11, 1}, {3, 2}};
    c2.k = 3;
    CHECK_NOTHROW(build_solvable_recipe(ok, c2));
}

TEST_CASE("explicit group operations") {
    PrimeGraph xi = new_graph({3, 5, 7}, {{3, 5}, {3, 7}});
    auto r = find_solvable_recipe(xi);
    REQUIRE(r.has_value());
    ExplicitGroup g = realize_explicit(*r);
    CHECK(g.order() == 525); // C_3 acting on F_25 x F_7
    CHECK(pgc_of_explicit(g) == xi);

    CHECK(g.is_identity(g.identity()));
    CHECK(g.element_order(g.identity()) == 1);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        GroupElement a = g.element_at(rng() % g.order());
        CHECK(g.order() % g.element_order(a) == 0);
        CHECK(g.is_identity(g.mul(a, g.inverse(a))));
    }
    CHECK_NOTHROW(g.verify_axioms(99, 50));

    CHECK_THROWS_AS(realize_explicit(*r, 100), OrderBoundExceeded);

    SolvableRecipe sym = *r;
    EProfile e;
    e.data = bundled_dataset().get("PSL(2,13)");
    sym.e_profile = e;
    CHECK_THROWS_AS(realize_explicit(sym), HypothesisViolation);
}

TEST_CASE("pgc of tiny groups") {
    PrimeGraph single = new_graph({2}, {});
    auto r = find_solvable_recipe(single);
    REQUIRE(r.has_value());
    ExplicitGroup c2 = realize_explicit(*r);
    CHECK(c2.order() == 2);
    CHECK(pgc_of_explicit(c2) == single);

    // two isolated primes: direct product, 3 and 5 commute so 3-5 is a GK edge
    // and the complement has no edge
    PrimeGraph two = new_graph({3, 5}, {});
    auto r2 = find_solvable_recipe(two);
    REQUIRE(r2.has_value());
    CHECK(pgc_of_explicit(realize_explicit(*r2)) == two);
}

TEST_CASE("property: realized groups reproduce their target complement") {
    // every triangle-free graph on {3,5,7} plus selected 4-vertex targets
    std::vector<PrimeGraph> targets;
    std::vector<Vertex> vs = {3, 5, 7};
    std::vector<std::pair<Vertex, Vertex>> all = {{3, 5}, {3, 7}, {5, 7}};
    for (unsigned mask = 0; mask < 8; ++mask) {
        if (mask == 7) continue; // the triangle
        std::vector<std::pair<Vertex, Vertex>> es;
        for (std::size_t b = 0; b < 3; ++b)
            if (mask & (1u << b)) es.push_back(all[b]);
        targets.push_back(new_graph(vs, es));
    }
    targets.push_back(new_graph({2, 3, 5}, {{2, 5}, {3, 5}}));
    targets.push_back(new_graph({2, 3, 5, 7}, {{3, 5}, {3, 7}}));
    for (const PrimeGraph& t : targets) {
        auto r = find_solvable_recipe(t);
        REQUIRE(r.has_value());
        unsigned long long n = r->order_or_zero();
        REQUIRE(n != 0);
        if (n > 200000) continue; // keep the scan cheap
        ExplicitGroup g = realize_explicit(*r, 200000);
        CHECK(pgc_of_explicit(g) == t);
        CHECK(g.primes() == std::set<Vertex>(t.vertices().begin(), t.vertices().end()));
    }
}

TEST_CASE("symbolic assembly of a three-layer product") {
    const GroupData& H = bundled_dataset().get("PSL(2,13)");
    PrimeGraph K_pgc = new_graph({5}, {});

    PrimeGraph got = pgc_semidirect_symbolic({{11, {2, 3}}}, H, K_pgc, {5});
    PrimeGraph want = new_graph({2, 3, 5, 7, 11, 13},
                                {{2, 7}, {2, 13}, {3, 7}, {3, 13}, {5, 11},
                                 {7, 11}, {7, 13}, {11, 13}});
    CHECK(got == want);

    // A-prime inside pi(H): both the action and the H complement must agree
    PrimeGraph got2 = pgc_semidirect_symbolic({{13, {3}}}, H, K_pgc, {5});
    PrimeGraph want2 = new_graph({2, 3, 5, 7, 13},
                                 {{2, 7}, {2, 13}, {3, 7}, {5, 13}, {7, 13}});
    CHECK(got2 == want2);

    // no A, no K: the middle factor alone
    PrimeGraph got3 = pgc_semidirect_symbolic({}, H, new_graph({}, {}), {});
    CHECK(got3 == H.pgc);

    CHECK_THROWS_AS(pgc_semidirect_symbolic({}, H, new_graph({3}, {}), {3}),
                    DisjointnessViolation);
    CHECK_THROWS_AS(pgc_semidirect_symbolic({{11, {}}}, H, new_graph({11}, {}), {11}),
                    DisjointnessViolation);
}
