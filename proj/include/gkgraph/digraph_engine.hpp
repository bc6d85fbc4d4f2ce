#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gkgraph/graph_core.hpp"

namespace gk {

// Acyclic orientation of a PrimeGraph. Vertices of `base` may include
// auxiliary placeholders tagged with negative integers so they can never
// collide with primes.
struct Orientation {
    PrimeGraph base;
    std::vector<std::pair<Vertex, Vertex>> arcs; // (from, to), sorted

    bool has_arc(Vertex from, Vertex to) const;
};

// Arcs run from lower color class to higher (O -> D, O -> I, D -> I).
// Requires a proper coloring with at most 3 classes; the result has no
// directed path of 3 arcs and no directed cycle.
Orientation orient_by_coloring(const PrimeGraph& g, const Coloring& c);

// Length (in arcs) of the longest directed path terminating at each vertex,
// by topological-order dynamic program. Throws CyclicOrientation.
std::map<Vertex, int> longest_path_lengths(const Orientation& o);

bool has_directed_three_path(const Orientation& o);

// The Gallai-Roy style construction: augment with one auxiliary vertex per
// member of piT (arc aux -> p), orient every piT-to-outside edge outward, keep
// the supplied orientation on edges with both ends outside piT, and color all
// real vertices by longest-path length. Edges internal to piT are dropped from
// the colored graph (the coloring is proper on pgc minus those edges), piT
// vertices land on color 1 and N(piT)\piT is monochromatic on color 2.
//
// When no orientation is supplied one is synthesized from a proper 3-coloring
// of the outside part that pins N(piT)\piT to the last color class.
Coloring monochromatic_neighbor_coloring(const PrimeGraph& pgc,
                                         const std::set<Vertex>& piT,
                                         const std::optional<Orientation>& frobenius_arcs = {});

std::string to_dot(const Orientation& o);

} // namespace gk
