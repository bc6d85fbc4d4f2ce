#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkgraph/data_store.hpp"
#include "gkgraph/graph_core.hpp"

namespace gk {

enum class Condition { Cond1, Cond2a, Cond2bI, Cond2bII, None };

std::string condition_name(Condition c);

struct Certificate {
    std::set<Vertex> X;                    // the distinguished 4-vertex set
    std::map<char, Vertex> labeling;       // 'a'..'d' -> vertex, Cond2b only
    Coloring coloring;                     // proper 3-coloring, N(X)\X monochromatic
};

struct Verdict {
    bool realizable = false;
    Condition condition = Condition::None;
    std::optional<Coloring> cond1_coloring;
    std::optional<Certificate> certificate;
    std::optional<std::string> refutation_note;
};

std::string verdict_to_json(const Verdict& v);

// Default Fermat prime set; covers every prime below 2^63 under current
// knowledge, overridable by callers that want to be stricter.
const std::set<Vertex>& default_fermat_primes();
bool is_fermat(Vertex p, const std::set<Vertex>& fermat = default_fermat_primes());

// Solvable realizability: triangle free and 3-colorable.
bool is_solvable_realizable(const PrimeGraph& g,
                            std::optional<Coloring>* certificate = nullptr);

// The shared preamble clause of Condition 2: some proper 3-coloring of g makes
// N(X)\X monochromatic. Returns the first such coloring (3 shared-color
// choices tried in ascending order), or nullopt.
std::optional<Coloring> monochromatic_outside_coloring(const PrimeGraph& g,
                                                       const std::set<Vertex>& X);

bool check_condition_2a(const PrimeGraph& g, const std::set<Vertex>& X);

enum class Variant2b { I, II };
std::optional<Variant2b> check_condition_2b(const PrimeGraph& g,
                                            const std::set<Vertex>& X,
                                            const std::map<char, Vertex>& labeling);

Verdict classify_psl213(const PrimeGraph& g);

// Main-theorem hypothesis check: (1) 2 adjacent to something outside piT, or
// (2) every odd neighbor q of a Fermat member of piT has a non-Fermat piT
// neighbor.
bool check_structural_hypotheses(const PrimeGraph& g, const std::set<Vertex>& piT,
                                 const std::set<Vertex>& fermat_primes_in_T);

struct ApplicabilityReport {
    bool pass = false;
    bool colorable = false;
    bool pair_found = false;
    std::optional<std::pair<Vertex, Vertex>> pair; // the non-Fermat triangle pair
    bool fermat_neighbors_ok = false;
    bool outward_ok = false;
    std::set<Vertex> outward_capable; // odd primes that may connect outward
    bool schur_ok = false;
    bool out_ok = false;
    std::string to_text() const;
};

ApplicabilityReport check_applicability(const GroupData& d,
                                        const std::set<Vertex>& fermat = default_fermat_primes());

} // namespace gk
