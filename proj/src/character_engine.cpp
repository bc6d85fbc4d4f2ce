#include "gkgraph/character_engine.hpp"

#include <algorithm>
#include <numeric>

namespace gk {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

long long fixed_dim(const CyclicCharacterSlice& s) {
    if (s.m <= 0 || static_cast<long long>(s.values.size()) != s.m)
        throw ValidationError("slice needs exactly m values, m positive");
    Rational sum;
    for (const Rational& v : s.values) sum = sum + v;
    Rational avg = sum * Rational(1, s.m);
    if (!avg.is_integer() || avg.num < 0)
        throw NonIntegralAverage("character average " + std::to_string(avg.num) + "/" +
                                 std::to_string(avg.den) + " is not a nonnegative integer");
    return avg.num;
}

EdgeRemovalSet edge_removal_set(Vertex p, const std::set<Vertex>& row) {
    if (row.count(p))
        throw CharacteristicInSet("positive-average set contains the characteristic " +
                                  std::to_string(p));
    EdgeRemovalSet out;
    out.p = p;
    for (Vertex q : row) out.edges.insert({std::min(p, q), std::max(p, q)});
    return out;
}

std::optional<std::set<std::size_t>> suzgen_decide(const PrimeGraph& lambda,
                                                   const PrimeGraph& pgcG,
                                                   const std::vector<EdgeRemovalSet>& family,
                                                   Vertex p) {
    if (lambda.vertices() != pgcG.vertices())
        throw VertexMismatch("lambda and pgc(G) must share one vertex set");
    for (const auto& rem : family)
        if (rem.p != p)
            throw ValidationError("family member has characteristic " +
                                  std::to_string(rem.p) + ", expected " + std::to_string(p));

    std::set<std::pair<Vertex, Vertex>> difference;
    for (const auto& e : lambda.edges())
        if (!pgcG.has_edge(e.first, e.second)) return std::nullopt; // not a subgraph
    for (const auto& e : pgcG.edges()) {
        if (lambda.has_edge(e.first, e.second)) continue;
        if (e.first != p && e.second != p) return std::nullopt; // deletion away from p
        difference.insert(e);
    }

    std::set<std::size_t> Y;
    std::set<std::pair<Vertex, Vertex>> covered;
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::set<std::pair<Vertex, Vertex>> effective;
        bool inside = true;
        for (const auto& e : family[i].edges) {
            if (!pgcG.has_edge(e.first, e.second)) continue; // clip to actual edges
            if (!difference.count(e)) { inside = false; break; }
            effective.insert(e);
        }
        if (!inside) continue;
        Y.insert(i);
        covered.insert(effective.begin(), effective.end());
    }
    if (Y.empty() || covered != difference) return std::nullopt;
    return Y;
}

std::set<Vertex> combine_profiles(const std::set<Vertex>& P, const std::set<Vertex>& Q) {
    std::set<Vertex> out = P;
    out.insert(Q.begin(), Q.end());
    return out;
}

std::set<Vertex> extend_profile(const std::set<Vertex>& row, const std::set<Vertex>& piN) {
    return combine_profiles(row, piN);
}

FixedPointProfile induce_profile(const FixedPointProfile& profile, long long out_order) {
    long long o = out_order;
    while (o > 1 && o % 2 == 0) o /= 2;
    if (o != 1) throw ValidationError("outer order must be a power of 2");
    for (const auto& row : profile.rows)
        if (!row.count(2))
            throw MissingTwo("a fixed-point row of " + profile.group + " lacks 2");
    FixedPointProfile out = profile;
    out.group = profile.group + ".O";
    return out;
}

} // namespace gk
