#pragma once

#include "girthpath/digraph.hpp"

namespace girthpath {

struct GirthResult {
    std::optional<int> girth;  // nullopt: acyclic, girth infinite
    std::optional<CycleWitness> witness;
    bool finite() const { return girth.has_value(); }
};

// Exact shortest directed-cycle length via a BFS from every vertex, with a
// witness cycle when finite.
GirthResult girth(const Digraph& d);

}  // namespace girthpath
