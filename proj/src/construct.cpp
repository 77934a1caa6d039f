#include "girthpath/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "girthpath/errors.hpp"
#include "girthpath/rng.hpp"

namespace girthpath {

Digraph complete_digraph(int m) {
    if (m < 1) throw std::invalid_argument("complete digraph needs at least one vertex");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m) * (m - 1));
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = 0; v < m; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(m, arcs);
}

Digraph k_lift(const Digraph& d, const LiftSpec& spec, int delta) {
    if (spec.k < 1) throw std::invalid_argument("lift parameter k must be >= 1");
    if (spec.target_vertex < 0 || spec.target_vertex >= d.vertex_count())
        throw std::invalid_argument("lift target vertex out of range");
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) != delta)
            throw std::invalid_argument("k-lift requires every out-degree to equal delta");
    if (spec.k == 1) return d;

    const Vertex target = spec.target_vertex;
    const int n = d.vertex_count();
    std::vector<Arc> arcs;
    for (const auto& arc : d.arcs())
        if (arc.first != target) arcs.push_back(arc);

    // Layers U_1..U_{k-1} of delta fresh ids each; U_0 = {target} and U_k is
    // the old out-neighbourhood. Consecutive layers are completely directed.
    auto layer_vertex = [&](int layer, int i) { return n + (layer - 1) * delta + i; };
    for (int i = 0; i < delta; ++i) arcs.emplace_back(target, layer_vertex(1, i));
    for (int layer = 1; layer + 1 < spec.k; ++layer)
        for (int i = 0; i < delta; ++i)
            for (int j = 0; j < delta; ++j)
                arcs.emplace_back(layer_vertex(layer, i), layer_vertex(layer + 1, j));
    for (int i = 0; i < delta; ++i)
        for (Vertex w : d.out(target)) arcs.emplace_back(layer_vertex(spec.k - 1, i), w);

    return Digraph(n + (spec.k - 1) * delta, arcs);
}

static void check_params(const CounterexampleParams& p) {
    if (p.delta < 1 || p.a < 1 || p.a > p.b)
        throw std::invalid_argument("counterexample params need delta >= 1 and 1 <= a <= b");
}

Digraph build_counterexample(const CounterexampleParams& p) {
    check_params(p);
    Digraph d = complete_digraph(p.delta + 1);
    d = k_lift(d, {0, p.a}, p.delta);
    for (Vertex v = 1; v <= p.delta; ++v) d = k_lift(d, {v, p.b}, p.delta);
    return d;
}

int counterexample_vertex_count(const CounterexampleParams& p) {
    check_params(p);
    return (p.delta + 1) + (p.a - 1) * p.delta + p.delta * p.delta * (p.b - 1);
}

Prop2Result proposition2_params(int g, int delta) {
    if (g < 2) throw std::invalid_argument("girth target must be >= 2");
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    CounterexampleParams p;
    p.delta = delta;
    if (g % 2 == 0) {
        p.a = p.b = g / 2;
    } else {
        p.a = (g - 1) / 2;
        p.b = (g + 1) / 2;
    }
    int predicted = delta * p.b + p.a - 1;
    int closed_form = g % 2 == 0 ? (g * delta + g - 2) / 2 : ((g + 1) * delta + g - 3) / 2;
    if (predicted != closed_form)
        throw std::logic_error("counterexample length formula mismatch");
    return {p, predicted};
}

namespace {

// Draws `count` distinct entries from `pool` (consumed in place).
std::vector<Vertex> sample_without_replacement(std::vector<Vertex>& pool, int count,
                                               SeededRng& rng) {
    std::vector<Vertex> picked;
    picked.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(pool.size()));
        picked.push_back(pool[j]);
        pool[j] = pool.back();
        pool.pop_back();
    }
    return picked;
}

Digraph generate_out_regular(int n, int d, SeededRng& rng) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * d);
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v) {
        pool.clear();
        for (Vertex w = 0; w < n; ++w)
            if (w != v) pool.push_back(w);
        for (Vertex w : sample_without_replacement(pool, d, rng)) arcs.emplace_back(v, w);
    }
    return Digraph(n, arcs);
}

Digraph generate_oriented(int n, int delta, SeededRng& rng) {
    constexpr int kAttempts = 100;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
        std::vector<Arc> arcs;
        bool ok = true;
        std::vector<Vertex> order = [&] {
            std::vector<Vertex> o(n);
            for (int i = 0; i < n; ++i) o[i] = i;
            rng.shuffle(o);
            return o;
        }();
        std::vector<Vertex> pool;
        for (Vertex v : order) {
            pool.clear();
            for (Vertex w = 0; w < n; ++w)
                if (w != v && !arc[v][w] && !arc[w][v]) pool.push_back(w);
            if (static_cast<int>(pool.size()) < delta) {
                ok = false;
                break;
            }
            for (Vertex w : sample_without_replacement(pool, delta, rng)) {
                arc[v][w] = 1;
                arcs.emplace_back(v, w);
            }
        }
        if (ok) return Digraph(n, arcs);
    }
    throw generation_error("generation failed: oriented instance after bounded repair attempts");
}

Digraph generate_cd_regular(int n, int d, const Rat& C, SeededRng& rng) {
    // In-degree cap floor(C*d), evaluated exactly.
    const long long cap = (C.num * d) / C.den;
    constexpr int kAttempts = 200;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<long long> in_count(n, 0);
        std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
        std::vector<Arc> arcs;
        bool ok = true;
        std::vector<Vertex> order = [&] {
            std::vector<Vertex> o(n);
            for (int i = 0; i < n; ++i) o[i] = i;
            rng.shuffle(o);
            return o;
        }();
        std::vector<Vertex> pool;
        for (Vertex v : order) {
            pool.clear();
            for (Vertex w = 0; w < n; ++w)
                if (w != v && !arc[v][w] && in_count[w] < cap) pool.push_back(w);
            if (static_cast<int>(pool.size()) < d) {
                ok = false;
                break;
            }
            for (Vertex w : sample_without_replacement(pool, d, rng)) {
                arc[v][w] = 1;
                ++in_count[w];
                arcs.emplace_back(v, w);
            }
        }
        if (ok) return Digraph(n, arcs);
    }
    throw generation_error("generation failed: (C,d)-regular instance after bounded repair attempts");
}

}  // namespace

Digraph generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
    SeededRng rng(spec.seed);
    switch (spec.kind) {
        case GenKind::out_regular:
            if (spec.d_or_delta < 0 || spec.d_or_delta >= spec.n)
                throw std::invalid_argument("out_regular requires 0 <= d < n");
            return generate_out_regular(spec.n, spec.d_or_delta, rng);
        case GenKind::oriented_min_outdeg:
            if (spec.d_or_delta < 0 || 2 * spec.d_or_delta > spec.n - 1)
                throw std::invalid_argument("oriented generation requires d <= (n-1)/2");
            return generate_oriented(spec.n, spec.d_or_delta, rng);
        case GenKind::cd_regular:
            if (spec.C < Rat(1)) throw std::invalid_argument("cd_regular requires C >= 1");
            if (spec.d_or_delta < 1 || spec.d_or_delta >= spec.n)
                throw std::invalid_argument("cd_regular requires 1 <= d < n");
            return generate_cd_regular(spec.n, spec.d_or_delta, spec.C, rng);
    }
    throw std::invalid_argument("unknown generator kind");
}

}  // namespace girthpath
