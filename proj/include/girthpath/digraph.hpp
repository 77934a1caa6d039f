#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace girthpath {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;  // (tail, head)

// Immutable directed graph over dense integer ids [0, vertex_count).
// The constructor keeps arcs exactly as given (self-loops and duplicates
// included) so that validate() can report them as data; every other
// operation in the library assumes a graph that passed validate().
class Digraph {
public:
    Digraph() = default;
    // Throws std::out_of_range if an endpoint is outside [0, vertex_count).
    Digraph(int vertex_count, const std::vector<Arc>& arcs);

    int vertex_count() const { return n_; }
    long long arc_count() const { return m_; }
    const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
    bool has_arc(Vertex tail, Vertex head) const;
    std::vector<Arc> arcs() const;  // lexicographically sorted

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

struct DegreeProfile {
    int min_out = 0;
    int max_out = 0;
    int min_in = 0;
    int max_in = 0;
};

// Directed simple path, stored as its vertex sequence. length() counts arcs.
struct PathWitness {
    std::vector<Vertex> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool valid_in(const Digraph& d) const;
};

// Directed cycle, stored as its vertex sequence (the closing arc
// vertices.back() -> vertices.front() is implicit). length() counts arcs,
// which equals the number of vertices.
struct CycleWitness {
    std::vector<Vertex> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    bool valid_in(const Digraph& d) const;
};

struct Violation {
    enum class Kind { SelfLoop, DuplicateArc };
    Kind kind;
    Arc arc;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Digraph& d);

// True iff no pair {(x,y),(y,x)} of opposite arcs is present.
bool is_oriented(const Digraph& d);

// Exact degree extremes. Throws std::invalid_argument on the empty graph.
DegreeProfile degree_profile(const Digraph& d);

// Induced subgraph relabelled to [0, |S|), with the remapping table back to
// the host graph: to_original[new_id] = old_id, ascending.
struct InducedSubgraph {
    Digraph graph;
    std::vector<Vertex> to_original;
};

// S may be given in any order; duplicates are collapsed. Throws
// std::out_of_range on an id outside the host graph.
InducedSubgraph induced_subgraph(const Digraph& d, std::vector<Vertex> s);

// Keeps, per vertex, the delta out-arcs with smallest head ids, so that
// every out-degree becomes exactly delta. Throws std::invalid_argument if
// some out-degree is below delta.
Digraph prune_to_exact_outdegree(const Digraph& d, int delta);

}  // namespace girthpath
