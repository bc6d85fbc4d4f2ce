#include "gkgraph/data_store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gk {

void GroupData::validate() const {
    auto fail = [&](const std::string& clause) {
        throw InvalidGroupData("record \"" + name + "\": " + clause);
    };
    if (name.empty()) fail("empty name");
    if (pi.empty()) fail("empty prime set");
    for (Vertex p : pi)
        if (p <= 0 || !is_prime(static_cast<unsigned long long>(p)))
            fail("non-prime " + std::to_string(p) + " in pi");
    if (schur_multiplier < 1) fail("Schur multiplier below 1");
    if (out_order < 1) fail("outer automorphism order below 1");
    std::set<Vertex> pgc_verts(pgc.vertices().begin(), pgc.vertices().end());
    if (pgc_verts != pi) fail("pgc vertex set differs from pi");
    for (const auto& row : fixed_point_rows) {
        for (Vertex p : row)
            if (!pi.count(p))
                fail("fixed-point row member " + std::to_string(p) + " outside pi");
        if (simple && !row.count(2)) fail("fixed-point row of a simple group lacks 2");
    }
    for (const auto& [p, rows] : brauer) {
        if (!pi.count(p)) fail("Brauer characteristic " + std::to_string(p) + " outside pi");
        for (const auto& row : rows) {
            for (Vertex r : row) {
                if (!pi.count(r))
                    fail("Brauer row member " + std::to_string(r) + " outside pi");
                if (r == p)
                    fail("Brauer row at p=" + std::to_string(p) +
                         " contains its own characteristic");
            }
        }
    }
}

const GroupData& Dataset::get(const std::string& name) const {
    auto it = records.find(name);
    if (it == records.end()) throw UnknownGroup("no record named \"" + name + "\"");
    return it->second;
}

PrimeGraph Dataset::get_pgc(const std::string& name) const { return get(name).pgc; }

namespace {

nlohmann::json record_to_json_obj(const GroupData& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["pi"] = d.pi;
    j["schur"] = d.schur_multiplier;
    j["out"] = d.out_order;
    j["pgc"] = nlohmann::json::parse(to_json(d.pgc));
    j["fixed_rows"] = d.fixed_point_rows;
    nlohmann::json brauer = nlohmann::json::object();
    for (const auto& [p, rows] : d.brauer) brauer[std::to_string(p)] = rows;
    j["brauer"] = brauer;
    j["simple"] = d.simple;
    return j;
}

GroupData record_from_json_obj(const nlohmann::json& j) {
    GroupData d;
    try {
        d.name = j.at("name").get<std::string>();
        d.pi = std::set<Vertex>(j.at("pi").begin(), j.at("pi").end());
        d.schur_multiplier = j.at("schur").get<long long>();
        d.out_order = j.at("out").get<long long>();
        d.pgc = graph_from_json(j.at("pgc").dump());
        for (const auto& row : j.at("fixed_rows"))
            d.fixed_point_rows.push_back(std::set<Vertex>(row.begin(), row.end()));
        for (const auto& [key, rows] : j.at("brauer").items()) {
            Vertex p = std::stoll(key);
            for (const auto& row : rows)
                d.brauer[p].push_back(std::set<Vertex>(row.begin(), row.end()));
            d.brauer[p]; // keep characteristics with zero rows
        }
        d.simple = j.at("simple").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad group record: ") + e.what());
    }
    return d;
}

// The reference tables: prime sets, Schur multipliers, outer automorphism
// orders, complement graphs, fixed-point rows and Brauer fixed-point rows for
// the alternating, sporadic and Lie-type groups the deciders consume, plus
// the two auxiliary complement graphs used by the backward construction.
const char* kBundledJson = R"GK({
"version": "1",
"records": [
{"name":"A_11","pi":[2,3,5,7,11],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,11],"edges":[[2,11],[3,11],[5,7],[5,11],[7,11]]},
 "fixed_rows":[[2,3,5,7],[2,3,5,7,11]],"brauer":{}},
{"name":"2.A_11","pi":[2,3,5,7,11],"schur":1,"out":2,"simple":false,
 "pgc":{"vertices":[2,3,5,7,11],"edges":[[3,11],[5,7],[5,11],[7,11]]},
 "fixed_rows":[[2,3,5,7],[2,3,5,7,11]],"brauer":{}},
{"name":"A_12","pi":[2,3,5,7,11],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,11],"edges":[[2,11],[3,11],[5,11],[7,11]]},
 "fixed_rows":[[2,3,5,7,11]],"brauer":{}},
{"name":"2.A_12","pi":[2,3,5,7,11],"schur":1,"out":2,"simple":false,
 "pgc":{"vertices":[2,3,5,7,11],"edges":[[3,11],[5,11],[7,11]]},
 "fixed_rows":[[2,3,5,7,11]],"brauer":{}},
{"name":"A_13","pi":[2,3,5,7,11,13],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,11,13],"edges":[[2,11],[2,13],[3,11],[3,13],[5,11],[5,13],[7,11],[7,13],[11,13]]},
 "fixed_rows":[[2,3,5,7,11],[2,3,5,7,11,13]],"brauer":{}},
{"name":"2.A_13","pi":[2,3,5,7,11,13],"schur":1,"out":2,"simple":false,
 "pgc":{"vertices":[2,3,5,7,11,13],"edges":[[3,11],[3,13],[5,11],[5,13],[7,11],[7,13],[11,13]]},
 "fixed_rows":[[2,3,5,7,11],[2,3,5,7,11,13]],"brauer":{}},
{"name":"A_14","pi":[2,3,5,7,11,13],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,11,13],"edges":[[2,11],[2,13],[3,13],[5,11],[5,13],[7,11],[7,13],[11,13]]},
 "fixed_rows":[],"brauer":{}},
{"name":"A_15","pi":[2,3,5,7,11,13],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,11,13],"edges":[[2,13],[3,13],[5,11],[5,13],[7,11],[7,13],[11,13]]},
 "fixed_rows":[],"brauer":{}},
{"name":"A_16","pi":[2,3,5,7,11,13],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,11,13],"edges":[[2,13],[5,13],[7,11],[7,13],[11,13]]},
 "fixed_rows":[],"brauer":{}},
{"name":"PSL(2,13)","pi":[2,3,7,13],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,7,13],"edges":[[2,7],[2,13],[3,7],[3,13],[7,13]]},
 "fixed_rows":[[2,3,7],[2,3,7,13]],
 "brauer":{"2":[[3],[3,7],[3,7,13]],"3":[[2,7],[2,7,13]],"7":[[2,3],[2,3,13]],"13":[[2,3,7]]}},
{"name":"2.PSL(2,13)","pi":[2,3,7,13],"schur":1,"out":2,"simple":false,
 "pgc":{"vertices":[2,3,7,13],"edges":[[3,7],[3,13],[7,13]]},
 "fixed_rows":[[2,3,7],[2,3,7,13],[3],[3,7],[3,7,13]],
 "brauer":{"2":[[3],[3,7],[3,7,13]],"3":[[],[2,7],[2,7,13],[7],[7,13]],"7":[[2,3],[2,3,13],[3],[3,13]],"13":[[],[2,3,7],[3],[3,7]]}},
{"name":"Aut(PSL(2,13))","pi":[2,3,7,13],"schur":1,"out":1,"simple":false,
 "pgc":{"vertices":[2,3,7,13],"edges":[[2,13],[3,7],[3,13],[7,13]]},
 "fixed_rows":[[2,3,7],[2,3,7,13]],"brauer":{}},
{"name":"S_6(3)","pi":[2,3,5,7,13],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,13],"edges":[[2,7],[3,7],[3,13],[5,7],[5,13],[7,13]]},
 "fixed_rows":[[2,3,5,7,13]],"brauer":{}},
{"name":"2.S_6(3)","pi":[2,3,5,7,13],"schur":1,"out":2,"simple":false,
 "pgc":{"vertices":[2,3,5,7,13],"edges":[[3,7],[3,13],[5,7],[5,13],[7,13]]},
 "fixed_rows":[[2,3,5,7,13]],"brauer":{}},
{"name":"HS","pi":[2,3,5,7,11],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,11],"edges":[[2,7],[2,11],[3,7],[3,11],[5,7],[5,11],[7,11]]},
 "fixed_rows":[[2,3,5,7,11]],"brauer":{}},
{"name":"2.HS","pi":[2,3,5,7,11],"schur":1,"out":2,"simple":false,
 "pgc":{"vertices":[2,3,5,7,11],"edges":[[3,7],[3,11],[5,7],[5,11],[7,11]]},
 "fixed_rows":[[2,3,5,7,11]],"brauer":{}},
{"name":"G_2(4)","pi":[2,3,5,7,13],"schur":2,"out":2,"simple":true,
 "pgc":{"vertices":[2,3,5,7,13],"edges":[[2,7],[2,13],[3,13],[5,7],[5,13],[7,13]]},
 "fixed_rows":[[2,3,5,7,13]],"brauer":{}},
{"name":"2.G_2(4)","pi":[2,3,5,7,13],"schur":1,"out":2,"simple":false,
 "pgc":{"vertices":[2,3,5,7,13],"edges":[[3,13],[5,7],[5,13],[7,13]]},
 "fixed_rows":[[2,3,5],[2,3,5,7,13]],"brauer":{}},
{"name":"C_3 × 2.PSL(2,13)","pi":[2,3,7,13],"schur":1,"out":1,"simple":false,
 "pgc":{"vertices":[2,3,7,13],"edges":[[7,13]]},
 "fixed_rows":[],"brauer":{}},
{"name":"F_3^36 ⋊ 2.PSL(2,13)","pi":[2,3,7,13],"schur":1,"out":1,"simple":false,
 "pgc":{"vertices":[2,3,7,13],"edges":[[3,13],[7,13]]},
 "fixed_rows":[],"brauer":{}}
]})GK";

} // namespace

Dataset dataset_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad dataset JSON: ") + e.what());
    }
    Dataset d;
    try {
        d.version = j.at("version").get<std::string>();
        if (!j.at("records").is_array()) throw ParseError("\"records\" must be an array");
        for (const auto& rec : j.at("records")) {
            GroupData g = record_from_json_obj(rec);
            if (d.records.count(g.name))
                throw ValidationError("duplicate record name \"" + g.name + "\"");
            try {
                g.validate();
            } catch (const InvalidGroupData& e) {
                throw ValidationError(e.what());
            }
            d.records.emplace(g.name, std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad dataset JSON: ") + e.what());
    }
    return d;
}

std::string dataset_to_json(const Dataset& d) {
    nlohmann::json j;
    j["version"] = d.version;
    j["records"] = nlohmann::json::array();
    for (const auto& [name, rec] : d.records) j["records"].push_back(record_to_json_obj(rec));
    return j.dump(1);
}

const Dataset& bundled_dataset() {
    static const Dataset d = dataset_from_json(kBundledJson);
    return d;
}

Dataset load_dataset(const std::string& path_or_empty) {
    std::string path = path_or_empty;
    if (path.empty())
        if (const char* env = std::getenv("GKGRAPH_DATA")) path = env;
    if (path.empty()) return bundled_dataset();
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dataset file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return dataset_from_json(buf.str());
}

std::string group_data_to_json(const GroupData& d) { return record_to_json_obj(d).dump(); }

} // namespace gk
