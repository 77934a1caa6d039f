#pragma once

#include <string>

#include "girthpath/digraph.hpp"
#include "girthpath/exact.hpp"
#include "girthpath/rational.hpp"

namespace girthpath {

// Closed-form thresholds evaluated for an instance with n vertices, minimum
// out-degree delta and girth g (nullopt = infinite).
struct BoundTable {
    std::optional<long long> thomasse;  // delta*(g-1); absent for infinite g
    Rat thm1;                           // 2*delta*(1-1/g); 2*delta for infinite g
    Rat thm2_oriented;                  // 1.5*delta
    Rat thm2_girth4;                    // 1.6535*delta
    std::optional<Rat> shen;            // (2 - 1/(g-73))*delta, finite g >= 74 only
    long long ch_cycle = 0;             // ceil(2n/(delta+1))
    Rat hkn_threshold;                  // 0.3465*n
};

BoundTable bound_table(int n, int delta, std::optional<int> girth_value);

struct ClaimOutcome {
    std::string id;
    bool holds = true;
    // Offending vertices, as one or more vertex sequences (e.g. the two
    // disjoint cycles, or a single stray out-neighbour).
    std::vector<std::vector<Vertex>> counterwitness;
};

enum class KeyLemmaOutcome { LongPath, SmallSubgraph };

// Result of running the small-subgraph analysis on an oriented instance.
// The pipeline first normalizes the input to a strongly-connected core with
// all out-degrees exactly delta; `ell` and `best_path` refer to that core
// (mapped back to host-graph ids), which is also where the witness sets
// A, B, B^- and S live.
struct KeyLemmaReport {
    int delta = 0;
    int ell = 0;
    PathWitness best_path;  // length == ell
    KeyLemmaOutcome outcome = KeyLemmaOutcome::LongPath;

    // Present iff outcome == SmallSubgraph. Vertex ids are host-graph ids.
    std::vector<Vertex> s_vertices;
    int s_min_outdeg = 0;        // min out-degree of the host-induced S
    int s_min_outdeg_core = 0;   // same, measured inside the pruned core
    int a_index = -1;
    std::vector<Vertex> a_set;
    std::vector<Vertex> b_set;
    std::vector<Vertex> b_minus_set;
    std::vector<ClaimOutcome> claims_checked;
    bool claims_are_probe = false;  // true when recorded outside l < 2*delta

    std::vector<Vertex> core_vertices;
    int core_out_degree = 0;  // == delta after pruning
};

// Lemma-4 analysis. Requires an oriented graph with min out-degree >= delta.
// Returns LongPath when the normalized core has a path of length >= 2*delta;
// otherwise derives the subgraph S with |S| <= delta and
// min_outdeg(S) >= 2*delta - ell, recording the claim checks along the way.
// With probe_claims set, instances whose core lands exactly on ell == 2*delta
// additionally run the claim checkers and record them as probes.
KeyLemmaReport analyze_key_lemma(const Digraph& d, int delta,
                                 const SolverLimits& limits = {},
                                 bool probe_claims = false);

// D contains no two vertex-disjoint directed cycles of length >= delta+1.
ClaimOutcome check_claim_no_two_long_cycles(const Digraph& d, int delta,
                                            const SolverLimits& limits = {});

// Every out-neighbour of P.vertices[a_index - 1] lies on P.
ClaimOutcome check_claim_outneighbours_on_path(const Digraph& d, const PathWitness& p,
                                               int a_index);

// N^+(B^-) stays inside the cycle closed by the endpoint's back-arc.
ClaimOutcome check_claim_bminus_into_cycle(const Digraph& d, const PathWitness& p,
                                           int a_index);

enum class BoundStatus { satisfied, violated, not_applicable };

struct BoundCheck {
    std::string name;
    std::optional<Rat> threshold;
    BoundStatus status = BoundStatus::not_applicable;
    bool asserted = true;  // false for conjecture probes (never test failures)
};

struct PathBoundsReport {
    int n = 0;
    long long m = 0;
    int delta = 0;
    int ell = 0;
    std::optional<int> girth_value;
    bool oriented = false;
    PathWitness witness;
    std::vector<BoundCheck> checks;
    bool conjecture1_met = false;               // recorded only
    std::optional<double> conjecture7_ratio;    // ell / (g * delta), recorded only
    bool all_asserted_hold() const;
};

// Computes exact ell, girth and degree profile, then marks every applicable
// closed-form bound satisfied/violated. Conjecture rows are recorded but
// never asserted.
PathBoundsReport verify_path_bounds(const Digraph& d, const SolverLimits& limits = {});

}  // namespace girthpath
