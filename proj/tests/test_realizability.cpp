#include <doctest.h>

#include "gkgraph/realizability.hpp"
#include "naive_psl.hpp"

using namespace gk;

namespace {

PrimeGraph pgc_psl() {
    return new_graph({2, 3, 7, 13}, {{2, 7}, {2, 13}, {3, 7}, {3, 13}, {7, 13}});
}

PrimeGraph pgc_2psl() {
    return new_graph({2, 3, 7, 13}, {{3, 7}, {3, 13}, {7, 13}});
}

} // namespace

TEST_CASE("condition names") {
    CHECK(condition_name(Condition::Cond1) == "1");
    CHECK(condition_name(Condition::Cond2a) == "2a");
    CHECK(condition_name(Condition::Cond2bI) == "2bi");
    CHECK(condition_name(Condition::Cond2bII) == "2bii");
    CHECK(condition_name(Condition::None) == "none");
}

TEST_CASE("solvable realizability") {
    std::optional<Coloring> cert;
    CHECK(is_solvable_realizable(new_graph({3, 5}, {{3, 5}}), &cert));
    REQUIRE(cert.has_value());
    CHECK(cert->is_proper_on(new_graph({3, 5}, {{3, 5}})));

    // triangle kills it
    CHECK_FALSE(is_solvable_realizable(new_graph({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}})));
    // K4 minus perfect matching is triangle free and 2-colorable
    CHECK(is_solvable_realizable(new_graph({2, 3, 5, 7}, {{2, 3}, {2, 5}, {3, 7}, {5, 7}})));
    CHECK(is_solvable_realizable(new_graph({2}, {})));
}

TEST_CASE("fermat membership") {
    CHECK(is_fermat(3));
    CHECK(is_fermat(65537));
    CHECK_FALSE(is_fermat(7));
    CHECK_FALSE(is_fermat(2));
    CHECK(default_fermat_primes() == std::set<Vertex>{3, 5, 17, 257, 65537});
}

TEST_CASE("classification of the two reference complements") {
    Verdict v = classify_psl213(pgc_psl());
    CHECK(v.realizable);
    CHECK(v.condition == Condition::Cond2a);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->X == std::set<Vertex>{2, 3, 7, 13});
    CHECK(check_condition_2a(pgc_psl(), v.certificate->X));
    CHECK(v.certificate->coloring.is_proper_on(pgc_psl()));

    Verdict w = classify_psl213(pgc_2psl());
    CHECK(w.realizable);
    CHECK(w.condition == Condition::Cond2bII);
    REQUIRE(w.certificate.has_value());
    auto r = check_condition_2b(pgc_2psl(), w.certificate->X, w.certificate->labeling);
    REQUIRE(r.has_value());
    CHECK(*r == Variant2b::II);
}

TEST_CASE("condition 1 graphs classify as 1") {
    Verdict v = classify_psl213(new_graph({3, 5}, {{3, 5}}));
    CHECK(v.realizable);
    CHECK(v.condition == Condition::Cond1);
    REQUIRE(v.cond1_coloring.has_value());
    CHECK(v.cond1_coloring->is_proper_on(new_graph({3, 5}, {{3, 5}})));
}

TEST_CASE("K4 is refused with a note") {
    PrimeGraph k4 = new_graph({2, 3, 5, 7},
                              {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {5, 7}});
    Verdict v = classify_psl213(k4);
    CHECK_FALSE(v.realizable);
    CHECK(v.condition == Condition::None);
    CHECK(v.refutation_note.has_value());
}

TEST_CASE("condition 2b rejects bad labelings") {
    std::set<Vertex> X = {2, 3, 7, 13};
    CHECK_THROWS_AS(check_condition_2b(pgc_2psl(), X, {{'a', 2}, {'b', 3}, {'c', 7}}),
                    BadLabeling);
    CHECK_THROWS_AS(
        check_condition_2b(pgc_2psl(), X,
                           {{'a', 2}, {'b', 2}, {'c', 7}, {'d', 13}}),
        BadLabeling);
    CHECK_THROWS_AS(
        check_condition_2b(pgc_2psl(), X,
                           {{'a', 5}, {'b', 3}, {'c', 7}, {'d', 13}}),
        BadLabeling);
    CHECK_THROWS_AS(check_condition_2a(pgc_2psl(), {2, 3, 7}), BadSubset);
}

TEST_CASE("oracle agreement on every graph over {2,3,7,13}") {
    std::vector<Vertex> vs = {2, 3, 7, 13};
    std::vector<std::pair<Vertex, Vertex>> all_edges;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            all_edges.emplace_back(vs[i], vs[j]);
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (std::size_t b = 0; b < all_edges.size(); ++b)
            if (mask & (1u << b)) es.push_back(all_edges[b]);
        PrimeGraph g = new_graph(vs, es);
        Verdict fast = classify_psl213(g);
        naive::NaiveVerdict slow = naive::classify(g);
        CHECK(fast.realizable == slow.realizable);
        CHECK(condition_name(fast.condition) == slow.cls);
    }
}

TEST_CASE("structural hypotheses") {
    // clause (1): 2 connects outside piT
    PrimeGraph g = new_graph({2, 3, 5}, {{2, 5}});
    CHECK(check_structural_hypotheses(g, {2, 3}, {3}));
    // clause (2): fermat member 3 has odd neighbor 7 with non-fermat piT neighbor 13
    PrimeGraph h = new_graph({2, 3, 7, 13}, {{3, 7}, {7, 13}});
    CHECK(check_structural_hypotheses(h, {2, 3, 13}, {3}));
    // neither clause: 3's odd neighbor 7 has no non-fermat piT neighbor
    PrimeGraph bad = new_graph({2, 3, 7}, {{3, 7}});
    CHECK_FALSE(check_structural_hypotheses(bad, {2, 3}, {3}));
    CHECK(check_structural_hypotheses(pgc_psl(), {2, 3, 7, 13}, {3}));
}

TEST_CASE("applicability reports for bundled groups") {
    const Dataset& ds = bundled_dataset();

    ApplicabilityReport a11 = check_applicability(ds.get("A_11"));
    CHECK(a11.pass);
    REQUIRE(a11.pair.has_value());
    CHECK(*a11.pair == std::pair<Vertex, Vertex>{7, 11});
    CHECK(a11.to_text().find("PASS overall") != std::string::npos);

    ApplicabilityReport s63 = check_applicability(ds.get("S_6(3)"));
    CHECK(s63.pass);
    REQUIRE(s63.pair.has_value());
    CHECK(*s63.pair == std::pair<Vertex, Vertex>{7, 13});

    ApplicabilityReport hs = check_applicability(ds.get("HS"));
    CHECK(hs.pass);
    REQUIRE(hs.pair.has_value());
    CHECK(*hs.pair == std::pair<Vertex, Vertex>{7, 11});

    // triangle-free pgc: the pair clauses hold vacuously
    ApplicabilityReport a12 = check_applicability(ds.get("A_12"));
    CHECK(a12.pass);
}

TEST_CASE("verdict json shape") {
    std::string j = verdict_to_json(classify_psl213(pgc_psl()));
    CHECK(j.find("\"realizable\"") != std::string::npos);
    CHECK(j.find("\"2a\"") != std::string::npos);
}
