#pragma once

#include "girthpath/digraph.hpp"

namespace girthpath::oracle {

// Reference implementations used only to cross-check the real solvers.
// Deliberately naive and independent of the code paths in exact.cpp and
// girth.cpp: plain recursive enumeration, no bitmasks, no pruning.

// Maximum directed-path length by enumerating every simple path.
int naive_longest_path(const Digraph& d);

// Every maximum-length path, as vertex sequences in lexicographic order.
std::vector<std::vector<Vertex>> naive_maximum_paths(const Digraph& d);

// Shortest directed cycle by enumerating every simple cycle once (anchored
// at its smallest vertex); nullopt when acyclic.
std::optional<int> naive_girth(const Digraph& d);

}  // namespace girthpath::oracle
