#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkgraph/data_store.hpp"
#include "gkgraph/graph_core.hpp"

namespace gk {

// ---------------------------------------------------------------------------
// Finite fields F_{q^d}, polynomial basis, modulus = lexicographically
// smallest monic irreducible of degree d. Elements are coefficient vectors,
// low degree first; element #i has the base-q digits of i as coefficients,
// which fixes the deterministic enumeration order used everywhere below.
// ---------------------------------------------------------------------------

struct FiniteFieldSpec {
    Vertex q = 0;
    int d = 0;
    std::vector<int> modulus; // length d+1, monic, low degree first
};

using FqElem = std::vector<int>;

class FiniteField {
public:
    FiniteField(Vertex q, int d); // finds the modulus
    explicit FiniteField(const FiniteFieldSpec& spec); // verifies irreducibility

    const FiniteFieldSpec& spec() const { return spec_; }
    unsigned long long order() const { return order_; } // q^d

    FqElem zero() const;
    FqElem one() const;
    FqElem element_at(unsigned long long index) const;
    unsigned long long index_of(const FqElem& x) const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem pow(const FqElem& a, unsigned long long e) const;
    bool is_zero(const FqElem& a) const;
    bool is_one(const FqElem& a) const;
    unsigned long long multiplicative_order(const FqElem& a) const;

    // First element (in enumeration order) whose ((q^d-1)/p)-th power is not
    // the identity, raised to that power: a deterministic element of order p.
    FqElem element_of_order(Vertex p) const;

private:
    FiniteFieldSpec spec_;
    unsigned long long order_ = 0;
};

bool polynomial_is_irreducible(Vertex q, const std::vector<int>& poly);

// ---------------------------------------------------------------------------
// Frobenius modules: an order-p scalar acting on F_{q^d}^+ without fixed
// points.
// ---------------------------------------------------------------------------

struct FrobeniusModuleSpec {
    Vertex p = 0;
    FiniteFieldSpec field;
    FqElem generator_action;
};

// Smallest d with p | q^d - 1 by default; the blanket d = p-1 of the source
// construction is available behind `literal_degree`.
FrobeniusModuleSpec build_frobenius_module(Vertex p, Vertex q, int max_field_bits,
                                           bool literal_degree = false);

// Exhaustive scan of the whole field: generator^k fixes only 0 for 0<k<p.
bool verify_fixed_point_free(const FrobeniusModuleSpec& spec);

// Smallest d >= 1 with p | q^d - 1.
int frobenius_degree(Vertex p, Vertex q);

// ---------------------------------------------------------------------------
// Solvable recipes: the J x| (E x K) data, E trivial for the explicit path.
// Vertex classes come from the orientation of a proper 3-coloring:
// sinks V (longest outgoing path 0), middles U (1), sources W (2).
// Middle components are cyclic C_u; every source arc w -> u requires w | u-1.
// Sink components are tensor products of induced factors (for middle
// in-neighbors) and pullback scalar factors (for source in-neighbors).
// ---------------------------------------------------------------------------

struct UComponent {
    Vertex u = 0;
    std::map<Vertex, long long> twists; // w -> multiplier of order w mod u
};

struct SinkFactor {
    enum Kind { Induced, Scalar } kind = Scalar;
    Vertex actor = 0;                 // u (Induced) or w (Scalar)
    int degree = 0;                   // ord of v mod actor
    std::vector<Vertex> twist_primes; // W(u), Induced only
    long long dim() const;
};

struct VComponent {
    Vertex v = 0;
    std::vector<SinkFactor> factors;
    long long dim() const; // product of factor dims, 1 when no in-neighbors
};

struct EProfile {
    GroupData data;                              // the nonsolvable slot
    std::map<Vertex, std::set<Vertex>> module_rows; // p -> fixed-point prime set
};

struct SolvableRecipe {
    std::vector<Vertex> W_primes;
    std::vector<UComponent> U_components;
    std::vector<VComponent> V_components;
    PrimeGraph target;
    Coloring coloring;
    std::optional<EProfile> e_profile; // symbolic-only when present

    unsigned long long order_or_zero() const; // 0 on overflow past 2^62
};

std::string recipe_to_json(const SolvableRecipe& r);

// Build a recipe for the supplied coloring; throws HypothesisViolation with
// the violated clause when the coloring cannot drive the construction.
SolvableRecipe build_solvable_recipe(const PrimeGraph& xi, const Coloring& coloring,
                                     const std::optional<EProfile>& e = {});

// Search proper 3-colorings in deterministic order for one that builds.
std::optional<SolvableRecipe> find_solvable_recipe(const PrimeGraph& xi);

// ---------------------------------------------------------------------------
// Explicit groups: elements are (V-vectors, U-exponents, W-exponents) with
// semidirect composition; W acts on U by multipliers, K = U x| W acts on each
// V-component through its tensor factors.
// ---------------------------------------------------------------------------

struct GroupElement {
    std::vector<std::vector<int>> v; // per V-component, flat tensor coordinates
    std::vector<long long> u;        // per U-component, exponent mod u
    std::vector<long long> w;        // per W-prime, exponent mod w
};

class ExplicitGroup {
public:
    ExplicitGroup(const SolvableRecipe& recipe, unsigned long long order_bound);

    const SolvableRecipe& recipe() const { return recipe_; }
    unsigned long long order() const { return order_; }

    GroupElement identity() const;
    bool is_identity(const GroupElement& g) const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& g) const;
    unsigned long long element_order(const GroupElement& g) const;
    GroupElement element_at(unsigned long long index) const;

    std::set<Vertex> primes() const;

    // Deterministic seeded spot check of the group axioms; throws on failure.
    void verify_axioms(unsigned long long seed, int triples) const;

private:
    struct FactorData; // per sink factor: field, scalars, slot bookkeeping
    SolvableRecipe recipe_;
    unsigned long long order_ = 0;
    std::vector<std::vector<FactorData>> factor_data_;
    std::vector<long long> v_dims_;

    void apply_action(const GroupElement& k, std::vector<std::vector<int>>& v) const;

public:
    ~ExplicitGroup();
    ExplicitGroup(const ExplicitGroup&);
    ExplicitGroup& operator=(const ExplicitGroup&) = delete;
};

ExplicitGroup realize_explicit(const SolvableRecipe& r,
                               unsigned long long order_bound = 1000000,
                               unsigned long long axiom_seed = 20260825);

// Exhaustive element-order scan when |G| <= full_scan_bound, otherwise cyclic
// subgroups of a deterministic generating-set closure.
PrimeGraph pgc_of_explicit(const ExplicitGroup& g,
                           unsigned long long full_scan_bound = 100000);

// ---------------------------------------------------------------------------
// Symbolic pgc of A x| (H x K): rule-based assembly from fixed-point data.
// A_primes maps each prime p of the normal product A to the set of primes r
// whose order-r elements act with a fixed point on the p-component (all other
// prime orders act Frobeniusly).
// ---------------------------------------------------------------------------

PrimeGraph pgc_semidirect_symbolic(const std::map<Vertex, std::set<Vertex>>& A_primes,
                                   const GroupData& H,
                                   const PrimeGraph& K_pgc,
                                   const std::set<Vertex>& K_primes);

} // namespace gk
