#include "gkgraph/graph_core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gk {

namespace {

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
    return static_cast<unsigned long long>(
        static_cast<unsigned __int128>(a) * b % m);
}

unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                                 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is a known deterministic witness set below 3.3 * 10^24.
    for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                                 29ull, 31ull, 37ull}) {
        unsigned long long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

int PrimeGraph::index_of(Vertex v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

bool PrimeGraph::has_edge(Vertex p, Vertex q) const {
    int i = index_of(p), j = index_of(q);
    if (i < 0 || j < 0 || i == j) return false;
    return (adj_[i] >> j) & 1u;
}

std::size_t PrimeGraph::degree(Vertex v) const {
    int i = index_of(v);
    if (i < 0) throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
    return static_cast<std::size_t>(std::popcount(adj_[i]));
}

std::vector<std::pair<Vertex, Vertex>> PrimeGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if ((adj_[i] >> j) & 1u) out.emplace_back(verts_[i], verts_[j]);
    return out;
}

std::size_t PrimeGraph::edge_count() const {
    std::size_t total = 0;
    for (auto m : adj_) total += std::popcount(m);
    return total / 2;
}

PrimeGraph make_graph(std::vector<Vertex> vertices,
                      const std::vector<std::pair<Vertex, Vertex>>& edges,
                      bool require_prime) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() > PrimeGraph::kMaxVertices)
        throw GraphTooLarge("graph has " + std::to_string(vertices.size()) +
                            " vertices, cap is " + std::to_string(PrimeGraph::kMaxVertices));
    if (require_prime)
        for (Vertex v : vertices)
            if (v <= 0 || !is_prime(static_cast<unsigned long long>(v)))
                throw NonPrimeVertex("vertex " + std::to_string(v) + " is not prime");
    PrimeGraph g;
    g.verts_ = std::move(vertices);
    g.adj_.assign(g.verts_.size(), 0);
    for (const auto& [p, q] : edges) {
        if (p == q) throw LoopEdge("loop at " + std::to_string(p));
        int i = g.index_of(p), j = g.index_of(q);
        if (i < 0 || j < 0)
            throw DanglingEdge("edge " + std::to_string(p) + "-" + std::to_string(q) +
                               " has an endpoint outside the vertex set");
        g.adj_[i] |= 1u << j;
        g.adj_[j] |= 1u << i;
    }
    return g;
}

PrimeGraph new_graph(const std::vector<Vertex>& vertices,
                     const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return make_graph(vertices, edges, true);
}

int Coloring::color_of(Vertex v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
        throw UnknownVertex("vertex " + std::to_string(v) + " has no color");
    return it->second;
}

bool Coloring::is_proper_on(const PrimeGraph& g) const {
    for (const auto& [p, q] : g.edges())
        if (color_of(p) == color_of(q)) return false;
    return true;
}

PrimeGraph complement(const PrimeGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> comp_edges;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) comp_edges.emplace_back(vs[i], vs[j]);
    return make_graph(vs, comp_edges, false);
}

PrimeGraph induced(const PrimeGraph& g, const std::set<Vertex>& s) {
    std::vector<Vertex> vs;
    for (Vertex v : s) {
        if (!g.has_vertex(v))
            throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
        vs.push_back(v);
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) es.emplace_back(vs[i], vs[j]);
    return make_graph(vs, es, false);
}

std::vector<std::array<Vertex, 3>> triangles(const PrimeGraph& g) {
    std::vector<std::array<Vertex, 3>> out;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) continue;
            for (std::size_t k = j + 1; k < vs.size(); ++k)
                if (g.has_edge(vs[i], vs[k]) && g.has_edge(vs[j], vs[k]))
                    out.push_back({vs[i], vs[j], vs[k]});
        }
    return out;
}

bool is_triangle_free(const PrimeGraph& g) { return triangles(g).empty(); }

std::optional<Coloring> k_colorable(const PrimeGraph& g, int k,
                                    const std::map<Vertex, int>& fixed) {
    const auto& vs = g.vertices();
    for (const auto& [v, c] : fixed) {
        if (!g.has_vertex(v))
            throw InvalidFixedAssignment("fixed vertex " + std::to_string(v) +
                                         " not in graph");
        if (c < 0 || c >= k)
            throw InvalidFixedAssignment("fixed color " + std::to_string(c) +
                                         " out of range for k=" + std::to_string(k));
    }
    std::vector<int> color(vs.size(), -1);
    for (const auto& [v, c] : fixed) color[g.index_of(v)] = c;

    std::vector<std::size_t> order; // free vertices only, ascending
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (color[i] < 0) order.push_back(i);

    auto conflicts = [&](std::size_t i, int c) {
        std::uint32_t m = g.adjacency_mask(i);
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            if (color[j] == c) return true;
        }
        return false;
    };
    for (const auto& [v, c] : fixed)
        if (conflicts(static_cast<std::size_t>(g.index_of(v)), c)) return std::nullopt;

    std::size_t pos = 0;
    while (true) {
        if (pos == order.size()) break;
        std::size_t i = order[pos];
        int c = color[i] + 1;
        color[i] = -1;
        while (c < k && conflicts(i, c)) ++c;
        if (c < k) {
            color[i] = c;
            ++pos;
        } else {
            if (pos == 0) return std::nullopt;
            --pos;
        }
    }
    Coloring result;
    result.k = k;
    for (std::size_t i = 0; i < vs.size(); ++i) result.assignment[vs[i]] = color[i];
    return result;
}

std::set<Vertex> neighbors(const PrimeGraph& g, const std::set<Vertex>& s) {
    std::set<Vertex> out;
    for (Vertex v : s) {
        int i = g.index_of(v);
        if (i < 0) throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
        std::uint32_t m = g.adjacency_mask(static_cast<std::size_t>(i));
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            out.insert(g.vertices()[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

std::string to_dot(const PrimeGraph& g) {
    std::ostringstream os;
    os << "graph pgc {\n";
    for (Vertex v : g.vertices()) os << "  \"" << v << "\";\n";
    for (const auto& [p, q] : g.edges()) os << "  \"" << p << "\" -- \"" << q << "\";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const PrimeGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    j["edges"] = nlohmann::json::array();
    for (const auto& [p, q] : g.edges()) j["edges"].push_back({p, q});
    return j.dump();
}

PrimeGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph JSON needs a \"vertices\" array");
    std::vector<Vertex> vs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer()) throw ParseError("vertices must be integers");
        vs.push_back(v.get<Vertex>());
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("each edge must be a pair of integers");
            es.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
    }
    return new_graph(vs, es);
}

PrimeGraph graph_from_terse(const std::string& text) {
    std::string verts_part = text, edges_part;
    if (auto semi = text.find(';'); semi != std::string::npos) {
        verts_part = text.substr(0, semi);
        edges_part = text.substr(semi + 1);
    }
    std::vector<Vertex> vs;
    std::istringstream vin(verts_part);
    std::string tok;
    while (vin >> tok) {
        try {
            vs.push_back(std::stoll(tok));
        } catch (...) {
            throw ParseError("bad vertex token \"" + tok + "\"");
        }
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    std::istringstream ein(edges_part);
    while (ein >> tok) {
        auto dash = tok.find('-', 1); // skip a leading sign position
        if (dash == std::string::npos) throw ParseError("bad edge token \"" + tok + "\"");
        try {
            es.emplace_back(std::stoll(tok.substr(0, dash)), std::stoll(tok.substr(dash + 1)));
        } catch (...) {
            throw ParseError("bad edge token \"" + tok + "\"");
        }
    }
    if (vs.empty() && es.empty()) throw ParseError("empty graph description");
    return new_graph(vs, es);
}

std::string to_terse(const PrimeGraph& g) {
    std::ostringstream os;
    bool first = true;
    for (Vertex v : g.vertices()) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    os << " ;";
    for (const auto& [p, q] : g.edges()) os << ' ' << p << '-' << q;
    return os.str();
}

PrimeGraph parse_graph(const std::string& text) {
    auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw ParseError("empty graph description");
    if (text[start] == '{') return graph_from_json(text);
    return graph_from_terse(text);
}

} // namespace gk
