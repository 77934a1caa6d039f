#pragma once

#include "girthpath/digraph.hpp"

namespace girthpath {

// Maximal strongly-connected components, reported in topological order of
// the condensation: every arc between distinct components points from an
// earlier part to a later one. Vertices inside a part are ascending.
std::vector<std::vector<Vertex>> strong_components(const Digraph& d);

// Induced subgraph of some strong component whose internal minimum
// out-degree is >= delta, or nullopt if no component qualifies.
// Tie-break: the qualifying component containing the smallest vertex id.
std::optional<InducedSubgraph> min_outdeg_strong_subgraph(const Digraph& d, int delta);

}  // namespace girthpath
