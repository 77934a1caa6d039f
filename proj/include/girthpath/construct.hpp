#pragma once

#include <cstdint>

#include "girthpath/digraph.hpp"
#include "girthpath/rational.hpp"

namespace girthpath {

// Complete directed graph on m vertices: all m(m-1) ordered arcs.
Digraph complete_digraph(int m);

// Replace all out-arcs of target_vertex by a chain of k complete bipartite
// layers of `delta` fresh vertices each (a 1-lift changes nothing). Requires
// every out-degree of the input to equal delta, which the output preserves.
struct LiftSpec {
    Vertex target_vertex = 0;
    int k = 1;
};

Digraph k_lift(const Digraph& d, const LiftSpec& spec, int delta);

// Parameters (delta, a, b) of the D_{a,b} family: the complete digraph on
// delta+1 vertices with vertex 0 a-lifted and vertices 1..delta b-lifted,
// in that order. Requires 1 <= a <= b and delta >= 1.
struct CounterexampleParams {
    int delta = 1;
    int a = 1;
    int b = 1;
};

Digraph build_counterexample(const CounterexampleParams& p);

// Vertices of D_{a,b}: (delta+1) + (a-1)*delta + delta^2*(b-1).
int counterexample_vertex_count(const CounterexampleParams& p);

// Parameter choice realizing girth exactly g: a = b = g/2 for even g,
// a = (g-1)/2 and b = (g+1)/2 for odd g. predicted_max_path = delta*b + a - 1,
// which equals (g*delta+g-2)/2 for even g and ((g+1)*delta+g-3)/2 for odd g.
struct Prop2Result {
    CounterexampleParams params;
    int predicted_max_path = 0;
};

Prop2Result proposition2_params(int g, int delta);

enum class GenKind { out_regular, oriented_min_outdeg, cd_regular };

// Seeded random instance generators for the verification sweeps.
//   out_regular:          every out-degree exactly d (2-cycles allowed)
//   oriented_min_outdeg:  oriented graph with min out-degree >= d
//   cd_regular:           out-degrees exactly d, in-degrees <= C*d
// Deterministic for a fixed seed; infeasible parameters or exhausted repair
// attempts raise std::invalid_argument / generation_error.
struct GenSpec {
    GenKind kind = GenKind::out_regular;
    int n = 0;
    int d_or_delta = 0;
    Rat C{1, 1};
    std::uint64_t seed = 0;
};

Digraph generate(const GenSpec& spec);

}  // namespace girthpath
