#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkgraph/character_engine.hpp"
#include "gkgraph/data_store.hpp"
#include "gkgraph/digraph_engine.hpp"
#include "gkgraph/graph_core.hpp"
#include "gkgraph/group_model.hpp"
#include "gkgraph/realizability.hpp"

namespace py = pybind11;
using namespace gk;

namespace {

std::map<Vertex, int> coloring_dict(const Coloring& c) { return c.assignment; }

Coloring coloring_from_dict(const std::map<Vertex, int>& d) {
    Coloring c;
    c.assignment = d;
    for (const auto& [v, col] : d) c.k = std::max(c.k, col + 1);
    return c;
}

} // namespace

PYBIND11_MODULE(_gkgraph, m) {
    m.doc() = "prime graph complement realizability toolkit";

    py::register_exception<Error>(m, "GkError");

    py::class_<PrimeGraph>(m, "PrimeGraph")
        .def(py::init([](const std::vector<Vertex>& vertices,
                         const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return new_graph(vertices, edges);
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertices", &PrimeGraph::vertices)
        .def_property_readonly("edges", &PrimeGraph::edges)
        .def("has_edge", &PrimeGraph::has_edge)
        .def("to_dot", [](const PrimeGraph& g) { return to_dot(g); })
        .def("to_json", [](const PrimeGraph& g) { return to_json(g); })
        .def("to_terse", [](const PrimeGraph& g) { return to_terse(g); })
        .def("__eq__", [](const PrimeGraph& a, const PrimeGraph& b) { return a == b; })
        .def("__repr__", [](const PrimeGraph& g) {
            return "PrimeGraph(\"" + to_terse(g) + "\")";
        });

    m.def("parse_graph", &parse_graph, "parse the JSON or terse text form");
    m.def("complement", &complement);
    m.def("induced", &induced);
    m.def("triangles", [](const PrimeGraph& g) {
        std::vector<std::tuple<Vertex, Vertex, Vertex>> out;
        for (const auto& t : triangles(g)) out.emplace_back(t[0], t[1], t[2]);
        return out;
    });
    m.def("is_prime", [](unsigned long long n) { return is_prime(n); });
    m.def(
        "k_colorable",
        [](const PrimeGraph& g, int k,
           const std::map<Vertex, int>& fixed) -> py::object {
            auto c = k_colorable(g, k, fixed);
            if (!c) return py::none();
            return py::cast(coloring_dict(*c));
        },
        py::arg("g"), py::arg("k") = 3, py::arg("fixed") = std::map<Vertex, int>{});

    m.def("is_solvable_realizable",
          [](const PrimeGraph& g) { return is_solvable_realizable(g); });
    m.def("classify_psl213", [](const PrimeGraph& g) {
        return verdict_to_json(classify_psl213(g));
    });
    m.def(
        "monochromatic_neighbor_coloring",
        [](const PrimeGraph& g, const std::set<Vertex>& piT) {
            return coloring_dict(monochromatic_neighbor_coloring(g, piT));
        },
        py::arg("pgc"), py::arg("piT"));

    m.def(
        "build_frobenius_module",
        [](Vertex p, Vertex q, int max_field_bits, bool literal_degree) {
            auto spec = build_frobenius_module(p, q, max_field_bits, literal_degree);
            py::dict d;
            d["p"] = spec.p;
            d["q"] = spec.field.q;
            d["degree"] = spec.field.d;
            d["modulus"] = spec.field.modulus;
            d["generator"] = spec.generator_action;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("max_field_bits") = 20,
        py::arg("literal_degree") = false);

    m.def(
        "realize",
        [](const PrimeGraph& g, unsigned long long bound) -> py::object {
            auto recipe = find_solvable_recipe(g);
            if (!recipe) return py::none();
            py::dict d;
            d["recipe"] = recipe_to_json(*recipe);
            unsigned long long order = recipe->order_or_zero();
            d["order"] = order;
            if (order != 0 && order <= bound) {
                ExplicitGroup eg = realize_explicit(*recipe, bound);
                d["pgc"] = pgc_of_explicit(eg);
            }
            return d;
        },
        py::arg("g"), py::arg("bound") = 1000000);

    m.def("fixed_dim", [](long long mm, const std::vector<long long>& values) {
        CyclicCharacterSlice s;
        s.m = mm;
        for (long long v : values) s.values.push_back(Rational(v));
        return fixed_dim(s);
    });
    m.def(
        "suzgen_decide",
        [](const PrimeGraph& lambda, const PrimeGraph& pgcG,
           const std::vector<std::set<Vertex>>& rows, Vertex p) -> py::object {
            std::vector<EdgeRemovalSet> family;
            for (const auto& row : rows) family.push_back(edge_removal_set(p, row));
            auto y = suzgen_decide(lambda, pgcG, family, p);
            if (!y) return py::none();
            return py::cast(*y);
        },
        py::arg("lam"), py::arg("pgcG"), py::arg("rows"), py::arg("p"));

    m.def("dataset_names", [](const std::string& path) {
        std::vector<std::string> names;
        for (const auto& [name, rec] : load_dataset(path).records) names.push_back(name);
        return names;
    }, py::arg("path") = "");
    m.def("dataset_pgc", [](const std::string& name, const std::string& path) {
        return load_dataset(path).get_pgc(name);
    }, py::arg("name"), py::arg("path") = "");
    m.def("applicability", [](const std::string& name, const std::string& path) {
        auto rep = check_applicability(load_dataset(path).get(name));
        py::dict d;
        d["pass"] = rep.pass;
        d["colorable"] = rep.colorable;
        d["pair_found"] = rep.pair_found;
        if (rep.pair)
            d["pair"] = py::make_tuple(rep.pair->first, rep.pair->second);
        d["outward_capable"] = rep.outward_capable;
        d["schur_ok"] = rep.schur_ok;
        d["out_ok"] = rep.out_ok;
        return d;
    }, py::arg("name"), py::arg("path") = "");
}
