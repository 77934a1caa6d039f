#pragma once

#include <functional>

#include "girthpath/digraph.hpp"

namespace girthpath {

// Size/budget limits for the exact solvers. Instances up to max_dp_vertices
// run subset dynamic programming; up to max_bb_vertices run depth-first
// branch-and-bound; anything larger is a scale_error. The node budget caps
// search expansions and turns into a budget_error, never a silent
// approximation.
struct SolverLimits {
    int max_dp_vertices = 22;
    int max_bb_vertices = 40;
    long long node_budget = 100'000'000;
};

struct LongestPathResult {
    int length = 0;
    PathWitness witness;
};

// Exact maximum directed-path length l(D) with a witness of that length.
LongestPathResult longest_path_exact(const Digraph& d, const SolverLimits& limits = {});

// Exact maximum over directed paths starting at `start`.
LongestPathResult longest_path_from(const Digraph& d, Vertex start,
                                    const SolverLimits& limits = {});

// Visits every maximum-length directed path exactly once, in lexicographic
// order of the vertex sequence. Enumeration scale: vertex_count must be
// within max_dp_vertices.
void for_each_maximum_path(const Digraph& d, const SolverLimits& limits,
                           const std::function<void(const PathWitness&)>& fn);
std::vector<PathWitness> enumerate_maximum_paths(const Digraph& d,
                                                 const SolverLimits& limits = {});

// For a path P that cannot be extended at its head: the cycle closed by the
// arc from the endpoint to its earliest on-path out-neighbour.
//   back_index: smallest index a with (endpoint -> P.vertices[a]) an arc;
//   bound:      arc length of that cycle, = P.length() - back_index + 1.
struct CycleBound {
    PathWitness path;
    int bound = 0;
    int back_index = 0;
};

// Throws std::invalid_argument if the endpoint has an out-neighbour off P
// ("path extendable") or no out-neighbour at all ("no cycle").
CycleBound cycle_bound(const Digraph& d, const PathWitness& p);

// Exact search for two vertex-disjoint directed cycles, each of length at
// least min_len; nullopt when none exist. Enumeration scale only.
std::optional<std::pair<CycleWitness, CycleWitness>> find_two_disjoint_cycles(
    const Digraph& d, int min_len, const SolverLimits& limits = {});

}  // namespace girthpath
