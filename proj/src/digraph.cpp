#include "girthpath/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace girthpath {

Digraph::Digraph(int vertex_count, const std::vector<Arc>& arcs)
    : n_(vertex_count), m_(static_cast<long long>(arcs.size())), out_(vertex_count), in_(vertex_count) {
    if (vertex_count < 0) throw std::out_of_range("negative vertex count");
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("arc endpoint " + std::to_string(u) + "->" + std::to_string(v) +
                                    " outside [0," + std::to_string(n_) + ")");
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& adj : out_) std::sort(adj.begin(), adj.end());
    for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    const auto& adj = out_[tail];
    return std::binary_search(adj.begin(), adj.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(static_cast<std::size_t>(m_));
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : out_[v]) result.emplace_back(v, w);
    return result;
}

bool PathWitness::valid_in(const Digraph& d) const {
    if (vertices.empty()) return false;
    std::vector<char> seen(d.vertex_count(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v < 0 || v >= d.vertex_count() || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !d.has_arc(vertices[i - 1], v)) return false;
    }
    return true;
}

bool CycleWitness::valid_in(const Digraph& d) const {
    if (vertices.size() < 2) return false;
    std::vector<char> seen(d.vertex_count(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v < 0 || v >= d.vertex_count() || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !d.has_arc(vertices[i - 1], v)) return false;
    }
    return d.has_arc(vertices.back(), vertices.front());
}

ValidationReport validate(const Digraph& d) {
    ValidationReport report;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        const auto& adj = d.out(v);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            if (adj[i] == v)
                report.violations.push_back({Violation::Kind::SelfLoop, {v, v}});
            if (i > 0 && adj[i] == adj[i - 1] && adj[i] != v)
                report.violations.push_back({Violation::Kind::DuplicateArc, {v, adj[i]}});
        }
    }
    return report;
}

bool is_oriented(const Digraph& d) {
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (Vertex w : d.out(v))
            if (w > v && d.has_arc(w, v)) return false;
    return true;
}

DegreeProfile degree_profile(const Digraph& d) {
    if (d.vertex_count() == 0)
        throw std::invalid_argument("degree profile undefined for the empty digraph");
    DegreeProfile p{d.out_degree(0), d.out_degree(0), d.in_degree(0), d.in_degree(0)};
    for (Vertex v = 1; v < d.vertex_count(); ++v) {
        p.min_out = std::min(p.min_out, d.out_degree(v));
        p.max_out = std::max(p.max_out, d.out_degree(v));
        p.min_in = std::min(p.min_in, d.in_degree(v));
        p.max_in = std::max(p.max_in, d.in_degree(v));
    }
    return p;
}

InducedSubgraph induced_subgraph(const Digraph& d, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s)
        if (v < 0 || v >= d.vertex_count())
            throw std::out_of_range("induced subgraph id " + std::to_string(v) + " out of range");

    std::vector<int> new_id(d.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) new_id[s[i]] = static_cast<int>(i);

    std::vector<Arc> arcs;
    for (Vertex v : s)
        for (Vertex w : d.out(v))
            if (new_id[w] >= 0) arcs.emplace_back(new_id[v], new_id[w]);

    return {Digraph(static_cast<int>(s.size()), arcs), std::move(s)};
}

Digraph prune_to_exact_outdegree(const Digraph& d, int delta) {
    if (delta < 0) throw std::invalid_argument("delta must be non-negative");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(d.vertex_count()) * delta);
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (d.out_degree(v) < delta)
            throw std::invalid_argument("insufficient out-degree at vertex " + std::to_string(v));
        // out(v) is sorted: the first delta entries are the smallest heads.
        for (int i = 0; i < delta; ++i) arcs.emplace_back(v, d.out(v)[i]);
    }
    return Digraph(d.vertex_count(), arcs);
}

}  // namespace girthpath
