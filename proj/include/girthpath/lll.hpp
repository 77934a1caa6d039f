#pragma once

#include <cstdint>

#include "girthpath/digraph.hpp"
#include "girthpath/exact.hpp"
#include "girthpath/rational.hpp"

namespace girthpath {

// Configuration of the permutation-resampling partition. All logarithms are
// natural. t is derived as floor(c_prime * d / ln d).
struct LllConfig {
    Rat C{1, 1};
    int d = 0;
    double c_prime = 0.0;
    std::uint64_t seed = 0;
    long long max_resample_rounds = 1'000'000;
};

struct Feasibility {
    int t = 0;
    bool feasible = false;
    long double inequality_value = 0.0L;  // 2*e^{-d/(12t)+1} * (C*(dt)^2 + 1)
};

// Left-hand side of the local-lemma inequality, exposed so tests can
// re-evaluate it independently.
long double lll_inequality_lhs(const Rat& C, int d, int t);

// Computes t and checks the inequality against 1. Throws on d <= 1.
Feasibility lll_feasibility(const LllConfig& cfg);

// True iff |d+(v, part) - d+(v)/t| >= d+(v)/(2t), evaluated exactly in
// integer arithmetic (both sides scaled by 2t).
bool bad_event(const Digraph& d, Vertex v, const std::vector<Vertex>& part, int t);

bool is_cd_regular(const Digraph& d, const Rat& C, int min_out);

struct PartitionCertificate {
    std::vector<std::vector<Vertex>> parts;
    int t = 1;
    std::vector<int> sizes;
    double degree_floor = 0.0;   // ln d / (2 c')
    int min_cross_degree = 0;    // min over (v, j) of d+(v, V_j)
    long long resample_rounds_used = 0;
    int fake_vertex_count = 0;
};

// Balanced partition into t parts such that every vertex keeps at least
// ceil(ln d / (2 c')) out-neighbours in every part. Blocks of size t get
// independent seeded permutations; while some (v, j) is a bad event, the
// permutations of every block meeting N+(v), plus v's own block, are
// redrawn (smallest (v, j) first). Fake padding vertices are dropped before
// the certificate is returned.
// Throws std::invalid_argument if D is not (C,d)-regular or t < 1, and
// convergence_error if the round cap is hit.
PartitionCertificate partition_lll(const Digraph& d, const LllConfig& cfg);

struct StitchResult {
    PathWitness path;
    std::vector<int> segment_lengths;     // arcs inside each part
    int connectors_used = 0;              // t - 1 crossing arcs
    long long guaranteed_floor = 0;       // t*(g-1) + t-1, g the exact girth
    std::optional<double> asymptotic_target;   // c*d*g/ln d, filled by the driver
};

// Walks a maximal path inside D[V_1] from the smallest vertex id, crosses to
// the next part via the endpoint's smallest out-neighbour there, and repeats
// through V_t. Requires d+(v, V_j) >= 1 for all v, j (discovered violations
// raise std::invalid_argument: invalid partition).
StitchResult stitch_long_path(const Digraph& d,
                              const std::vector<std::vector<Vertex>>& parts,
                              const SolverLimits& limits = {});

// Largest c' from the grid {2^0, 2^-1, ..., 2^-10} whose inequality passes
// lll_feasibility; 0.0 when none does.
double default_c_prime(const Rat& C, int d);

// Grid choice for the verification sweeps: the strict rule above when it
// yields something, otherwise the largest grid value putting t in [2, 3]
// (the resampling regime that converges at desk scale), otherwise the
// largest with t == 1.
double practical_c_prime(const Rat& C, int d);

struct Theorem4Result {
    StitchResult stitch;
    int t = 1;
    int d = 0;
    Rat C{1, 1};
    double c_prime = 0.0;  // 0 when the run fell back without a usable c'
    double c = 0.0;        // c' / 2
    bool fallback = false;
    std::optional<PartitionCertificate> certificate;
    std::optional<int> girth_value;
    std::optional<double> target;  // c*d*g/ln d
};

// End-to-end run: feasibility -> partition_lll -> stitch_long_path, with
// d = min out-degree of D. Falls back to the t = 1 maximal-path walk when
// d <= 1, no grid c' is feasible, or t <= 1; the provenance records it.
Theorem4Result theorem4_driver(const Digraph& d, const Rat& C,
                               std::optional<double> c_prime_override = {},
                               std::optional<std::uint64_t> seed = {},
                               const SolverLimits& limits = {});

}  // namespace girthpath
