#include "girthpath/scc.hpp"

#include <algorithm>

namespace girthpath {

// Iterative Tarjan. Components complete in reverse topological order of the
// condensation; the final list is reversed so arcs run earlier -> later.
std::vector<std::vector<Vertex>> strong_components(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> components;
    int next_index = 0;

    struct Frame {
        Vertex v;
        std::size_t child;
    };
    std::vector<Frame> frames;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& adj = d.out(f.v);
            if (f.child < adj.size()) {
                Vertex w = adj[f.child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                Vertex v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::vector<Vertex> comp;
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != v);
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
            }
        }
    }
    std::reverse(components.begin(), components.end());
    return components;
}

std::optional<InducedSubgraph> min_outdeg_strong_subgraph(const Digraph& d, int delta) {
    std::optional<InducedSubgraph> best;
    Vertex best_min_id = -1;
    for (const auto& comp : strong_components(d)) {
        InducedSubgraph sub = induced_subgraph(d, comp);
        int min_out = sub.graph.vertex_count() == 0 ? -1 : sub.graph.out_degree(0);
        for (Vertex v = 0; v < sub.graph.vertex_count(); ++v)
            min_out = std::min(min_out, sub.graph.out_degree(v));
        if (min_out < delta) continue;
        Vertex min_id = comp.front();  // components are sorted ascending
        if (!best || min_id < best_min_id) {
            best = std::move(sub);
            best_min_id = min_id;
        }
    }
    return best;
}

}  // namespace girthpath
