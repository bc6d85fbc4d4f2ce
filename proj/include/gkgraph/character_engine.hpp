#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkgraph/graph_core.hpp"

namespace gk {

// Exact rational arithmetic, enough for character averages.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_integer() const { return den == 1; }
};

// Restriction of a character to a cyclic group of order m: the value on each
// power g^j of a fixed generator, j = 0..m-1. Exact rationals only; the table
// data this is applied to is always rational-integer valued.
struct CyclicCharacterSlice {
    long long m = 0;
    std::vector<Rational> values;
};

// dim of the fixed-point space of <g> on the module affording the slice:
// (1/m) * sum_j values[j]. Throws NonIntegralAverage when that average is not
// a nonnegative integer.
long long fixed_dim(const CyclicCharacterSlice& s);

// The pgc edges a characteristic-p module with positive-average primes `row`
// can delete: one p-q edge per member.
struct EdgeRemovalSet {
    Vertex p = 0;
    std::set<std::pair<Vertex, Vertex>> edges; // smaller endpoint first
};

EdgeRemovalSet edge_removal_set(Vertex p, const std::set<Vertex>& row); // CharacteristicInSet

// Decide whether some nonempty subset of `family` deletes exactly the edge
// difference between pgcG and the target lambda. Requires equal vertex sets
// (VertexMismatch otherwise); rejects unless lambda is a subgraph of pgcG and
// every missing edge contains p. Returns the maximal admissible index set Y
// when its removal sets (clipped to actual pgcG edges) cover the difference
// exactly, nullopt otherwise.
std::optional<std::set<std::size_t>> suzgen_decide(const PrimeGraph& lambda,
                                                   const PrimeGraph& pgcG,
                                                   const std::vector<EdgeRemovalSet>& family,
                                                   Vertex p);

// Direct-sum semantics on fixed-point rows: primes fixing on either summand.
std::set<Vertex> combine_profiles(const std::set<Vertex>& P, const std::set<Vertex>& Q);

// Inflation through a kernel of prime support piN: kernel primes always fix.
std::set<Vertex> extend_profile(const std::set<Vertex>& row, const std::set<Vertex>& piN);

// Fixed-point rows of a group and its 2-power extensions.
struct FixedPointProfile {
    std::string group;
    std::vector<std::set<Vertex>> rows;
};

// Induction along a 2-group of outer automorphisms preserves the rows; every
// row must contain 2 for the argument to apply (MissingTwo otherwise).
FixedPointProfile induce_profile(const FixedPointProfile& profile, long long out_order);

} // namespace gk
