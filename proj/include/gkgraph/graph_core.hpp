#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkgraph/errors.hpp"

namespace gk {

using Vertex = long long; // a prime, or a negative auxiliary tag in orientations

// Deterministic Miller-Rabin, exact for all inputs below 2^63.
bool is_prime(unsigned long long n);

// Undirected simple graph on prime-labeled vertices. Stored canonically:
// vertices sorted ascending, adjacency as bitmasks over the sorted index.
// Enumeration-oriented, capped at 16 vertices.
class PrimeGraph {
public:
    static constexpr std::size_t kMaxVertices = 16;

    PrimeGraph() = default;

    const std::vector<Vertex>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    int index_of(Vertex v) const;
    bool has_vertex(Vertex v) const { return index_of(v) >= 0; }
    bool has_edge(Vertex p, Vertex q) const;
    std::uint32_t adjacency_mask(std::size_t index) const { return adj_[index]; }
    std::size_t degree(Vertex v) const;

    // Edges with smaller endpoint first, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    std::size_t edge_count() const;

    bool operator==(const PrimeGraph& other) const {
        return verts_ == other.verts_ && adj_ == other.adj_;
    }
    bool operator!=(const PrimeGraph& other) const { return !(*this == other); }

private:
    std::vector<Vertex> verts_;
    std::vector<std::uint32_t> adj_;

    friend PrimeGraph make_graph(std::vector<Vertex> vertices,
                                 const std::vector<std::pair<Vertex, Vertex>>& edges,
                                 bool require_prime);
};

// Validating constructor: primality, loop and endpoint checks, canonical order.
PrimeGraph new_graph(const std::vector<Vertex>& vertices,
                     const std::vector<std::pair<Vertex, Vertex>>& edges);

// Same canonicalization without the primality check; used by the orientation
// engine for graphs that carry negative auxiliary vertices.
PrimeGraph make_graph(std::vector<Vertex> vertices,
                      const std::vector<std::pair<Vertex, Vertex>>& edges,
                      bool require_prime = true);

struct Coloring {
    std::map<Vertex, int> assignment;
    int k = 0;

    int color_of(Vertex v) const;
    bool is_proper_on(const PrimeGraph& g) const;
};

PrimeGraph complement(const PrimeGraph& g);
PrimeGraph induced(const PrimeGraph& g, const std::set<Vertex>& s);
std::vector<std::array<Vertex, 3>> triangles(const PrimeGraph& g);
bool is_triangle_free(const PrimeGraph& g);

// Deterministic backtracking: vertices in ascending order, colors in ascending
// index; first proper k-coloring extending `fixed`, or nullopt.
std::optional<Coloring> k_colorable(const PrimeGraph& g, int k,
                                    const std::map<Vertex, int>& fixed = {});

// Open neighborhood of a set (may intersect the set).
std::set<Vertex> neighbors(const PrimeGraph& g, const std::set<Vertex>& s);

// --- external interfaces ---

std::string to_dot(const PrimeGraph& g);
std::string to_json(const PrimeGraph& g);
PrimeGraph graph_from_json(const std::string& text);

// Terse text form: "2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13".
PrimeGraph graph_from_terse(const std::string& text);
std::string to_terse(const PrimeGraph& g);

// Accepts either the JSON or the terse form.
PrimeGraph parse_graph(const std::string& text);

} // namespace gk
