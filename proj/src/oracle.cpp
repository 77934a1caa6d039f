#include "girthpath/oracle.hpp"

#include <algorithm>

namespace girthpath::oracle {

namespace {

void extend_all(const Digraph& d, std::vector<Vertex>& path, std::vector<char>& used,
                int& best) {
    best = std::max(best, static_cast<int>(path.size()) - 1);
    for (Vertex w : d.out(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        extend_all(d, path, used, best);
        path.pop_back();
        used[w] = 0;
    }
}

void collect_paths(const Digraph& d, std::vector<Vertex>& path, std::vector<char>& used,
                   int target, std::vector<std::vector<Vertex>>& out) {
    if (static_cast<int>(path.size()) - 1 == target) out.push_back(path);
    for (Vertex w : d.out(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        collect_paths(d, path, used, target, out);
        path.pop_back();
        used[w] = 0;
    }
}

// Walks simple paths from `anchor` through vertices > anchor only; an arc
// back to the anchor closes each cycle exactly once.
void cycle_scan(const Digraph& d, Vertex anchor, std::vector<Vertex>& path,
                std::vector<char>& used, int& best) {
    for (Vertex w : d.out(path.back())) {
        if (w == anchor) best = std::min(best, static_cast<int>(path.size()));
        if (w <= anchor || used[w]) continue;
        if (static_cast<int>(path.size()) >= best) continue;
        used[w] = 1;
        path.push_back(w);
        cycle_scan(d, anchor, path, used, best);
        path.pop_back();
        used[w] = 0;
    }
}

}  // namespace

int naive_longest_path(const Digraph& d) {
    int best = 0;
    std::vector<char> used(d.vertex_count(), 0);
    std::vector<Vertex> path;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        used[v] = 1;
        path.assign(1, v);
        extend_all(d, path, used, best);
        used[v] = 0;
    }
    return best;
}

std::vector<std::vector<Vertex>> naive_maximum_paths(const Digraph& d) {
    const int target = naive_longest_path(d);
    std::vector<std::vector<Vertex>> result;
    std::vector<char> used(d.vertex_count(), 0);
    std::vector<Vertex> path;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        used[v] = 1;
        path.assign(1, v);
        collect_paths(d, path, used, target, result);
        used[v] = 0;
    }
    return result;
}

std::optional<int> naive_girth(const Digraph& d) {
    int best = d.vertex_count() + 1;
    std::vector<char> used(d.vertex_count(), 0);
    std::vector<Vertex> path;
    for (Vertex anchor = 0; anchor < d.vertex_count(); ++anchor) {
        used[anchor] = 1;
        path.assign(1, anchor);
        cycle_scan(d, anchor, path, used, best);
        used[anchor] = 0;
    }
    if (best > d.vertex_count()) return std::nullopt;
    return best;
}

}  // namespace girthpath::oracle
