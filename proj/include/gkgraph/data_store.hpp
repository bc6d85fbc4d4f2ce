#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gkgraph/graph_core.hpp"

namespace gk {

// One record of the bundled group tables: prime set, Schur multiplier, outer
// automorphism group order, prime graph complement, fixed-point rows and
// per-characteristic Brauer rows.
struct GroupData {
    std::string name;
    std::set<Vertex> pi;
    long long schur_multiplier = 1;
    long long out_order = 1;
    PrimeGraph pgc;
    std::vector<std::set<Vertex>> fixed_point_rows;
    std::map<Vertex, std::vector<std::set<Vertex>>> brauer;
    bool simple = false;

    void validate() const; // throws InvalidGroupData naming the failed clause
};

struct Dataset {
    std::string version;
    std::map<std::string, GroupData> records;

    const GroupData& get(const std::string& name) const; // throws UnknownGroup
    PrimeGraph get_pgc(const std::string& name) const;
};

// Parse + validate a dataset from JSON text. Validation errors name the record
// and the violated clause.
Dataset dataset_from_json(const std::string& text);
std::string dataset_to_json(const Dataset& d);

// The compiled-in reference tables (20 records).
const Dataset& bundled_dataset();

// Resolution order: explicit path argument, then GKGRAPH_DATA, then bundled.
Dataset load_dataset(const std::string& path_or_empty);

std::string group_data_to_json(const GroupData& d);

} // namespace gk
