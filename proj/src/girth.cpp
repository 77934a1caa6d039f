#include "girthpath/girth.hpp"

#include <algorithm>
#include <vector>

namespace girthpath {

// BFS from every start vertex; an arc u -> start closes a cycle of length
// dist(u) + 1. Exploration is capped at the best length found so far, and
// 2 is a global optimum (no self-loops), so the scan exits early.
GirthResult girth(const Digraph& d) {
    const int n = d.vertex_count();
    GirthResult result;
    int best = n + 1;  // any simple cycle has length <= n

    std::vector<int> dist(n), parent(n);
    std::vector<Vertex> queue;
    for (Vertex start = 0; start < n && best > 2; ++start) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(start);
        dist[start] = 0;
        parent[start] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (dist[u] + 1 >= best) break;  // deeper arcs cannot improve
            for (Vertex w : d.out(u)) {
                if (w == start) {
                    best = dist[u] + 1;
                    CycleWitness cycle;
                    for (Vertex x = u; x != -1; x = parent[x]) cycle.vertices.push_back(x);
                    std::reverse(cycle.vertices.begin(), cycle.vertices.end());
                    result.witness = std::move(cycle);
                    break;
                }
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
            if (best == 2) break;
        }
    }

    if (best <= n) result.girth = best;
    else result.witness.reset();
    return result;
}

}  // namespace girthpath
