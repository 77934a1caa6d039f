#include "girthpath/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "girthpath/errors.hpp"

namespace girthpath {

namespace {

// Representation caps: subset DP uses 32-bit masks, branch-and-bound 64-bit.
constexpr int kDpHardCap = 24;
constexpr int kBbHardCap = 62;

int dp_cutoff(const SolverLimits& limits) { return std::min(limits.max_dp_vertices, kDpHardCap); }
int bb_cutoff(const SolverLimits& limits) { return std::min(limits.max_bb_vertices, kBbHardCap); }

std::vector<std::uint32_t> adjacency_masks32(const Digraph& d) {
    std::vector<std::uint32_t> adj(d.vertex_count(), 0);
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (Vertex w : d.out(v)) adj[v] |= 1u << w;
    return adj;
}

std::vector<std::uint32_t> reverse_masks32(const Digraph& d) {
    std::vector<std::uint32_t> radj(d.vertex_count(), 0);
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (Vertex w : d.in(v)) radj[v] |= 1u << w;
    return radj;
}

// Subset DP over (vertex set, endpoint) states. endable[mask] holds the set
// of endpoints of simple paths whose vertex set is exactly mask.
LongestPathResult dp_longest(const Digraph& d, std::optional<Vertex> start) {
    const int n = d.vertex_count();
    const auto adj = adjacency_masks32(d);
    const auto radj = reverse_masks32(d);
    std::vector<std::uint32_t> endable(std::size_t(1) << n, 0);

    if (start) {
        endable[std::uint32_t(1) << *start] = std::uint32_t(1) << *start;
    } else {
        for (int v = 0; v < n; ++v) endable[std::uint32_t(1) << v] = std::uint32_t(1) << v;
    }

    int best_pop = 0;
    std::uint32_t best_mask = 0, best_end = 0;
    const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = endable[mask];
        if (!ends) continue;
        int pop = std::popcount(mask);
        if (pop > best_pop) {
            best_pop = pop;
            best_mask = mask;
            best_end = ends & (~ends + 1);  // lowest endpoint bit, deterministic
        }
        while (ends) {
            int e = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[e] & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                endable[mask | (std::uint32_t(1) << w)] |= std::uint32_t(1) << w;
            }
        }
    }

    // Walk the witness backwards, preferring the smallest predecessor id.
    LongestPathResult result;
    result.length = best_pop - 1;
    std::vector<Vertex> seq;
    std::uint32_t mask = best_mask, end = best_end;
    while (true) {
        int e = std::countr_zero(end);
        seq.push_back(e);
        std::uint32_t rest = mask ^ end;
        if (!rest) break;
        std::uint32_t preds = endable[rest] & radj[e];
        end = preds & (~preds + 1);
        mask = rest;
    }
    std::reverse(seq.begin(), seq.end());
    result.witness.vertices = std::move(seq);
    return result;
}

struct BbSearch {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t full;
    long long budget;
    long long nodes = 0;
    int best = -1;
    std::vector<Vertex> current, best_path;

    // Vertices reachable from e through free ones; an admissible cap on how
    // much the current path can still grow.
    std::uint64_t reachable(int e, std::uint64_t free) const {
        std::uint64_t reach = 0, frontier = adj[e] & free;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t bit = std::uint64_t(1) << u;
            if (reach & bit) continue;
            reach |= bit;
            frontier |= adj[u] & free & ~reach;
        }
        return reach;
    }

    void dfs(int e, std::uint64_t visited, int len) {
        if (++nodes > budget) throw budget_error("longest-path node budget exceeded");
        if (len > best) {
            best = len;
            best_path = current;
        }
        std::uint64_t ext = adj[e] & ~visited;
        if (!ext) return;
        std::uint64_t free = full & ~visited;
        if (len + std::popcount(free) <= best) return;
        if (len + std::popcount(reachable(e, free)) <= best) return;
        while (ext) {
            int w = std::countr_zero(ext);
            ext &= ext - 1;
            current.push_back(w);
            dfs(w, visited | (std::uint64_t(1) << w), len + 1);
            current.pop_back();
        }
    }
};

LongestPathResult bb_longest(const Digraph& d, std::optional<Vertex> start,
                             const SolverLimits& limits) {
    const int n = d.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : d.out(v)) adj[v] |= std::uint64_t(1) << w;

    BbSearch search{adj, n == 64 ? ~0ull : (std::uint64_t(1) << n) - 1, limits.node_budget,
                    0, -1, {}, {}};
    Vertex first = start.value_or(0), last = start.value_or(n - 1);
    for (Vertex v = first; v <= last; ++v) {
        search.current.assign(1, v);
        search.dfs(v, std::uint64_t(1) << v, 0);
    }
    return {search.best, PathWitness{std::move(search.best_path)}};
}

void check_nonempty(const Digraph& d) {
    if (d.vertex_count() == 0)
        throw std::invalid_argument("no directed path exists in the empty digraph");
}

}  // namespace

LongestPathResult longest_path_exact(const Digraph& d, const SolverLimits& limits) {
    check_nonempty(d);
    if (d.vertex_count() > bb_cutoff(limits))
        throw scale_error("instance too large for exact longest path (" +
                          std::to_string(d.vertex_count()) + " > " +
                          std::to_string(bb_cutoff(limits)) + " vertices)");
    if (d.vertex_count() <= dp_cutoff(limits)) return dp_longest(d, std::nullopt);
    return bb_longest(d, std::nullopt, limits);
}

LongestPathResult longest_path_from(const Digraph& d, Vertex start, const SolverLimits& limits) {
    check_nonempty(d);
    if (start < 0 || start >= d.vertex_count())
        throw std::out_of_range("start vertex out of range");
    if (d.vertex_count() > bb_cutoff(limits))
        throw scale_error("instance too large for exact longest path");
    if (d.vertex_count() <= dp_cutoff(limits)) return dp_longest(d, start);
    return bb_longest(d, start, limits);
}

void for_each_maximum_path(const Digraph& d, const SolverLimits& limits,
                           const std::function<void(const PathWitness&)>& fn) {
    check_nonempty(d);
    const int n = d.vertex_count();
    if (n > dp_cutoff(limits))
        throw scale_error("instance too large for maximum-path enumeration");
    const int ell = dp_longest(d, std::nullopt).length;

    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : d.out(v)) adj[v] |= std::uint64_t(1) << w;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;

    long long nodes = 0;
    std::vector<Vertex> current;
    PathWitness witness;

    // Lexicographic DFS; a prefix survives only if the vertices still
    // reachable through free ones can pad it back up to length ell.
    auto dfs = [&](auto&& self, int e, std::uint64_t visited, int len) -> void {
        if (++nodes > limits.node_budget)
            throw budget_error("maximum-path enumeration budget exceeded");
        if (len == ell) {
            witness.vertices = current;
            fn(witness);
            return;
        }
        std::uint64_t free = full & ~visited;
        std::uint64_t reach = 0, frontier = adj[e] & free;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t bit = std::uint64_t(1) << u;
            if (reach & bit) continue;
            reach |= bit;
            frontier |= adj[u] & free & ~reach;
        }
        if (len + std::popcount(reach) < ell) return;
        std::uint64_t ext = adj[e] & ~visited;
        while (ext) {
            int w = std::countr_zero(ext);
            ext &= ext - 1;
            current.push_back(w);
            self(self, w, visited | (std::uint64_t(1) << w), len + 1);
            current.pop_back();
        }
    };

    for (Vertex v = 0; v < n; ++v) {
        current.assign(1, v);
        dfs(dfs, v, std::uint64_t(1) << v, 0);
    }
}

std::vector<PathWitness> enumerate_maximum_paths(const Digraph& d, const SolverLimits& limits) {
    std::vector<PathWitness> paths;
    for_each_maximum_path(d, limits, [&](const PathWitness& p) { paths.push_back(p); });
    return paths;
}

CycleBound cycle_bound(const Digraph& d, const PathWitness& p) {
    if (!p.valid_in(d)) throw std::invalid_argument("cycle bound of an invalid path");
    std::vector<int> position(d.vertex_count(), -1);
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        position[p.vertices[i]] = static_cast<int>(i);

    Vertex endpoint = p.vertices.back();
    if (d.out_degree(endpoint) == 0)
        throw std::invalid_argument("no cycle: path endpoint has out-degree 0");
    int a = -1;
    for (Vertex w : d.out(endpoint)) {
        if (position[w] < 0)
            throw std::invalid_argument("path extendable: endpoint has an out-neighbour off the path");
        if (a < 0 || position[w] < a) a = position[w];
    }
    return {p, p.length() - a + 1, a};
}

namespace {

// Anchored spanning-cycle DP: dp[mask] is the endpoint set of simple paths
// that start at the lowest vertex of mask and cover mask exactly. Extending
// only to larger ids keeps the anchor fixed, so every cycle is produced once
// at its minimum vertex.
struct CycleTables {
    std::vector<std::uint32_t> dp;
    std::vector<char> exact;  // mask induces a spanning cycle of length >= min_len
};

CycleTables build_cycle_tables(const std::vector<std::uint32_t>& adj, int n, int min_len,
                               long long budget) {
    CycleTables t;
    const std::size_t size = std::size_t(1) << n;
    t.dp.assign(size, 0);
    t.exact.assign(size, 0);
    for (int v = 0; v < n; ++v) t.dp[std::uint32_t(1) << v] = std::uint32_t(1) << v;

    long long work = 0;
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        std::uint32_t ends = t.dp[mask];
        if (!ends) continue;
        const int anchor = std::countr_zero(mask);
        const std::uint32_t above_anchor = ~((std::uint32_t(2) << anchor) - 1);
        const bool closable = std::popcount(mask) >= std::max(min_len, 2);
        std::uint32_t scan = ends;
        while (scan) {
            int e = std::countr_zero(scan);
            scan &= scan - 1;
            if (closable && (adj[e] >> anchor & 1)) t.exact[mask] = 1;
            std::uint32_t ext = adj[e] & ~mask & above_anchor;
            work += std::popcount(ext) + 1;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                t.dp[mask | (std::uint32_t(1) << w)] |= std::uint32_t(1) << w;
            }
        }
        if (work > budget) throw budget_error("disjoint-cycle search budget exceeded");
    }
    return t;
}

CycleWitness reconstruct_cycle(const CycleTables& t, const std::vector<std::uint32_t>& adj,
                               const std::vector<std::uint32_t>& radj, std::uint32_t mask) {
    const int anchor = std::countr_zero(mask);
    std::uint32_t ends = t.dp[mask];
    int e = -1;
    for (std::uint32_t scan = ends; scan; scan &= scan - 1) {
        int cand = std::countr_zero(scan);
        if (adj[cand] >> anchor & 1) {
            e = cand;
            break;
        }
    }
    std::vector<Vertex> seq;
    std::uint32_t cur = mask;
    while (true) {
        seq.push_back(e);
        std::uint32_t rest = cur ^ (std::uint32_t(1) << e);
        if (!rest) break;
        std::uint32_t preds = t.dp[rest] & radj[e];
        e = std::countr_zero(preds);
        cur = rest;
    }
    std::reverse(seq.begin(), seq.end());
    return CycleWitness{std::move(seq)};
}

}  // namespace

std::optional<std::pair<CycleWitness, CycleWitness>> find_two_disjoint_cycles(
    const Digraph& d, int min_len, const SolverLimits& limits) {
    const int n = d.vertex_count();
    if (n > dp_cutoff(limits))
        throw scale_error("instance too large for disjoint-cycle search");
    if (n < 4) return std::nullopt;  // two disjoint cycles need >= 4 vertices
    min_len = std::max(min_len, 2);

    const auto adj = adjacency_masks32(d);
    const auto radj = reverse_masks32(d);
    CycleTables t = build_cycle_tables(adj, n, min_len, limits.node_budget);

    // has_long[mask]: some subset of mask induces a qualifying cycle.
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<char> has_long(std::size_t(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (t.exact[mask]) {
            has_long[mask] = 1;
            continue;
        }
        for (std::uint32_t scan = mask; scan; scan &= scan - 1) {
            if (has_long[mask ^ (scan & (~scan + 1))]) {
                has_long[mask] = 1;
                break;
            }
        }
    }

    auto minimize = [&](std::uint32_t mask) {
        for (bool shrunk = true; shrunk;) {
            shrunk = false;
            for (std::uint32_t scan = mask; scan; scan &= scan - 1) {
                std::uint32_t without = mask ^ (scan & (~scan + 1));
                if (has_long[without]) {
                    mask = without;
                    shrunk = true;
                    break;
                }
            }
        }
        return mask;  // minimal, hence exact[mask]
    };

    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (has_long[mask] && has_long[full & ~mask]) {
            std::uint32_t first = minimize(mask);
            std::uint32_t second = minimize(full & ~mask);
            return std::make_pair(reconstruct_cycle(t, adj, radj, first),
                                  reconstruct_cycle(t, adj, radj, second));
        }
    }
    return std::nullopt;
}

}  // namespace girthpath
