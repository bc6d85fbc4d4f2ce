#include <doctest.h>

#include "gkgraph/data_store.hpp"

using namespace gk;

TEST_CASE("bundled dataset loads, validates and has all records") {
    const Dataset& d = bundled_dataset();
    CHECK(d.records.size() == 20);
    for (const auto& [name, rec] : d.records) {
        CHECK(name == rec.name);
        CHECK_NOTHROW(rec.validate());
    }
    std::vector<std::string> expected = {
        "2.A_11", "2.A_12", "2.A_13", "2.G_2(4)", "2.HS", "2.PSL(2,13)",
        "2.S_6(3)", "A_11", "A_12", "A_13", "A_14", "A_15", "A_16",
        "Aut(PSL(2,13))", "C_3 × 2.PSL(2,13)", "F_3^36 ⋊ 2.PSL(2,13)",
        "G_2(4)", "HS", "PSL(2,13)", "S_6(3)"};
    for (const auto& n : expected) CHECK(d.records.count(n) == 1);
}

TEST_CASE("spot checks against the reference tables") {
    const Dataset& d = bundled_dataset();

    const GroupData& psl = d.get("PSL(2,13)");
    CHECK(psl.pi == std::set<Vertex>{2, 3, 7, 13});
    CHECK(psl.simple);
    CHECK(psl.schur_multiplier == 2);
    CHECK(psl.out_order == 2);
    CHECK(psl.pgc.edges() == std::vector<std::pair<Vertex, Vertex>>{
                                 {2, 7}, {2, 13}, {3, 7}, {3, 13}, {7, 13}});
    CHECK(psl.brauer.count(2));
    CHECK(psl.brauer.count(3));
    CHECK(psl.brauer.count(7));
    CHECK(psl.brauer.count(13));

    const GroupData& cover = d.get("2.PSL(2,13)");
    CHECK(cover.pgc.edges() == std::vector<std::pair<Vertex, Vertex>>{
                                   {3, 7}, {3, 13}, {7, 13}});
    CHECK_FALSE(cover.simple);

    const GroupData& a11 = d.get("A_11");
    CHECK(a11.pi == std::set<Vertex>{2, 3, 5, 7, 11});
    CHECK_FALSE(a11.fixed_point_rows.empty());
    for (const auto& row : a11.fixed_point_rows) CHECK(row.count(2));
}

TEST_CASE("auxiliary non-simple records") {
    const Dataset& d = bundled_dataset();
    int aux_with_713 = 0;
    for (const auto& [name, rec] : d.records) {
        if (rec.simple) continue;
        auto es = rec.pgc.edges();
        if (std::find(es.begin(), es.end(), std::pair<Vertex, Vertex>{7, 13}) != es.end())
            ++aux_with_713;
    }
    CHECK(aux_with_713 >= 2);
}

TEST_CASE("json round trip") {
    const Dataset& d = bundled_dataset();
    Dataset back = dataset_from_json(dataset_to_json(d));
    CHECK(back.records.size() == d.records.size());
    for (const auto& [name, rec] : d.records) {
        const GroupData& b = back.get(name);
        CHECK(b.pi == rec.pi);
        CHECK(b.pgc == rec.pgc);
        CHECK(b.fixed_point_rows == rec.fixed_point_rows);
        CHECK(b.brauer == rec.brauer);
        CHECK(b.schur_multiplier == rec.schur_multiplier);
        CHECK(b.out_order == rec.out_order);
        CHECK(b.simple == rec.simple);
    }
}

TEST_CASE("lookup and parse failures") {
    const Dataset& d = bundled_dataset();
    CHECK_THROWS_AS(d.get("M_11"), UnknownGroup);
    CHECK_THROWS_AS(dataset_from_json("not json"), ParseError);
    CHECK_THROWS_AS(dataset_from_json("{\"records\": 3}"), ParseError);
}

TEST_CASE("validation rejects inconsistent records") {
    GroupData bad = bundled_dataset().get("A_11");
    bad.pi.erase(11); // pgc still mentions 11
    CHECK_THROWS_AS(bad.validate(), InvalidGroupData);

    GroupData bad2 = bundled_dataset().get("A_11");
    bad2.schur_multiplier = 0;
    CHECK_THROWS_AS(bad2.validate(), InvalidGroupData);

    GroupData bad3 = bundled_dataset().get("A_11");
    bad3.fixed_point_rows.push_back({23});
    CHECK_THROWS_AS(bad3.validate(), InvalidGroupData);

    GroupData bad4 = bundled_dataset().get("PSL(2,13)");
    bad4.brauer[7].push_back({7}); // a row may not contain its characteristic
    CHECK_THROWS_AS(bad4.validate(), InvalidGroupData);
}

TEST_CASE("load_dataset resolution") {
    Dataset d = load_dataset("");
    CHECK(d.records.size() == bundled_dataset().records.size());
    CHECK_THROWS(load_dataset("/nonexistent/path.json"));
}
