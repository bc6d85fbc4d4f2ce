#include "gkgraph/digraph_engine.hpp"

#include <algorithm>
#include <sstream>

namespace gk {

bool Orientation::has_arc(Vertex from, Vertex to) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(from, to));
}

Orientation orient_by_coloring(const PrimeGraph& g, const Coloring& c) {
    int max_color = 0;
    for (Vertex v : g.vertices()) max_color = std::max(max_color, c.color_of(v));
    if (max_color > 2)
        throw ImproperColoring("orientation needs at most 3 color classes");
    if (!c.is_proper_on(g))
        throw ImproperColoring("coloring is not proper on the graph");
    Orientation o;
    o.base = g;
    for (const auto& [p, q] : g.edges()) {
        if (c.color_of(p) < c.color_of(q))
            o.arcs.emplace_back(p, q);
        else
            o.arcs.emplace_back(q, p);
    }
    std::sort(o.arcs.begin(), o.arcs.end());
    return o;
}

std::map<Vertex, int> longest_path_lengths(const Orientation& o) {
    const auto& vs = o.base.vertices();
    std::map<Vertex, std::vector<Vertex>> out_arcs;
    std::map<Vertex, int> in_degree;
    for (Vertex v : vs) {
        out_arcs[v];
        in_degree[v] = 0;
    }
    for (const auto& [from, to] : o.arcs) {
        out_arcs[from].push_back(to);
        ++in_degree[to];
    }
    // Kahn's algorithm, smallest-ready-vertex-first for determinism.
    std::set<Vertex> ready;
    for (Vertex v : vs)
        if (in_degree[v] == 0) ready.insert(v);
    std::vector<Vertex> order;
    while (!ready.empty()) {
        Vertex v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (Vertex w : out_arcs[v])
            if (--in_degree[w] == 0) ready.insert(w);
    }
    if (order.size() != vs.size())
        throw CyclicOrientation("orientation contains a directed cycle");
    std::map<Vertex, int> length;
    for (Vertex v : vs) length[v] = 0;
    for (Vertex v : order)
        for (Vertex w : out_arcs[v]) length[w] = std::max(length[w], length[v] + 1);
    return length;
}

bool has_directed_three_path(const Orientation& o) {
    auto lengths = longest_path_lengths(o);
    for (const auto& [v, len] : lengths)
        if (len >= 3) return true;
    return false;
}

Coloring monochromatic_neighbor_coloring(const PrimeGraph& pgc,
                                         const std::set<Vertex>& piT,
                                         const std::optional<Orientation>& frobenius_arcs) {
    for (Vertex p : piT)
        if (!pgc.has_vertex(p))
            throw UnknownVertex("piT member " + std::to_string(p) + " not in graph");

    std::set<Vertex> outside;
    for (Vertex v : pgc.vertices())
        if (!piT.count(v)) outside.insert(v);
    PrimeGraph outer = induced(pgc, outside);

    std::set<Vertex> frontier; // N(piT) \ piT
    for (Vertex v : neighbors(pgc, piT))
        if (!piT.count(v)) frontier.insert(v);

    Orientation outer_orientation;
    if (frobenius_arcs) {
        outer_orientation = *frobenius_arcs;
        if (outer_orientation.base != outer)
            throw ValidationError("supplied orientation must cover exactly the edges "
                                  "with both ends outside piT");
        if (has_directed_three_path(outer_orientation))
            throw DirectedThreePath("supplied orientation has a directed 3-path");
    } else {
        std::map<Vertex, int> pin;
        for (Vertex v : frontier) pin[v] = 2;
        auto c = k_colorable(outer, 3, pin);
        if (!c) c = k_colorable(outer, 3);
        if (!c)
            throw ImproperColoring("part outside piT is not 3-colorable");
        outer_orientation = orient_by_coloring(outer, *c);
    }

    // Augmented digraph: one auxiliary source per piT vertex (tag -p), piT
    // edges to the outside oriented outward, piT-internal edges dropped.
    std::vector<Vertex> aug_vertices(pgc.vertices());
    std::vector<std::pair<Vertex, Vertex>> aug_edges;
    Orientation aug;
    for (Vertex p : piT) {
        aug_vertices.push_back(-p);
        aug_edges.emplace_back(-p, p);
        aug.arcs.emplace_back(-p, p);
    }
    for (const auto& [p, q] : pgc.edges()) {
        bool p_in = piT.count(p) > 0, q_in = piT.count(q) > 0;
        if (p_in && q_in) continue;
        aug_edges.emplace_back(p, q);
        if (p_in)
            aug.arcs.emplace_back(p, q);
        else if (q_in)
            aug.arcs.emplace_back(q, p);
        else
            aug.arcs.push_back(outer_orientation.has_arc(p, q) ? std::make_pair(p, q)
                                                               : std::make_pair(q, p));
    }
    aug.base = make_graph(aug_vertices, aug_edges, false);
    std::sort(aug.arcs.begin(), aug.arcs.end());

    auto lengths = longest_path_lengths(aug); // throws CyclicOrientation
    int max_len = 0;
    for (const auto& [v, len] : lengths) max_len = std::max(max_len, len);
    if (max_len >= 3)
        throw DirectedThreePath("augmented digraph has a directed 3-path");

    Coloring result;
    result.k = 3;
    for (Vertex v : pgc.vertices()) result.assignment[v] = lengths.at(v);
    return result;
}

std::string to_dot(const Orientation& o) {
    std::ostringstream os;
    os << "digraph oriented {\n";
    for (Vertex v : o.base.vertices()) {
        if (v < 0)
            os << "  \"v" << -v << "\" [shape=point];\n";
        else
            os << "  \"" << v << "\";\n";
    }
    auto name = [](Vertex v) {
        return v < 0 ? "v" + std::to_string(-v) : std::to_string(v);
    };
    for (const auto& [from, to] : o.arcs)
        os << "  \"" << name(from) << "\" -> \"" << name(to) << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace gk
