#include "girthpath/lll.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "girthpath/errors.hpp"
#include "girthpath/girth.hpp"
#include "girthpath/rng.hpp"

namespace girthpath {

long double lll_inequality_lhs(const Rat& C, int d, int t) {
    const long double c_val = static_cast<long double>(C.num) / static_cast<long double>(C.den);
    const long double dt = static_cast<long double>(d) * t;
    return 2.0L * std::exp(-static_cast<long double>(d) / (12.0L * t) + 1.0L) *
           (c_val * dt * dt + 1.0L);
}

Feasibility lll_feasibility(const LllConfig& cfg) {
    if (cfg.d <= 1) throw std::invalid_argument("feasibility needs d >= 2 (log d must be positive)");
    const long double ln_d = std::log(static_cast<long double>(cfg.d));
    int t = static_cast<int>(std::floor(static_cast<long double>(cfg.c_prime) * cfg.d / ln_d));
    if (t < 0) t = 0;
    Feasibility f;
    f.t = t;
    f.inequality_value =
        t >= 1 ? lll_inequality_lhs(cfg.C, cfg.d, t) : std::numeric_limits<long double>::infinity();
    f.feasible = t >= 1 && f.inequality_value < 1.0L;
    return f;
}

bool bad_event(const Digraph& d, Vertex v, const std::vector<Vertex>& part, int t) {
    if (t < 1) throw std::invalid_argument("bad event needs t >= 1");
    if (v < 0 || v >= d.vertex_count()) throw std::out_of_range("vertex out of range");
    std::vector<char> in_part(d.vertex_count(), 0);
    for (Vertex w : part) {
        if (w < 0 || w >= d.vertex_count()) throw std::out_of_range("part member out of range");
        in_part[w] = 1;
    }
    long long x = 0;
    for (Vertex w : d.out(v)) x += in_part[w];
    const long long dplus = d.out_degree(v);
    // |X - d+/t| >= d+/(2t), both sides scaled by 2t.
    long long dev = 2 * (t * x - dplus);
    if (dev < 0) dev = -dev;
    return dev >= dplus;
}

bool is_cd_regular(const Digraph& d, const Rat& C, int min_out) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (d.out_degree(v) < min_out) return false;
        // d-(v) <= C*d, exactly.
        if (static_cast<long long>(d.in_degree(v)) * C.den > C.num * min_out) return false;
    }
    return true;
}

namespace {

struct Assignment {
    int t = 1;
    int total = 0;  // n padded to a multiple of t
    std::vector<int> slot;  // slot[u] = part index of u, u in [0, total)

    int block_of(int u) const { return u / t; }
};

void redraw_block(Assignment& asg, int block, SeededRng& rng) {
    std::vector<int> perm = rng.permutation(asg.t);
    for (int k = 0; k < asg.t; ++k) asg.slot[block * asg.t + k] = perm[k];
}

}  // namespace

PartitionCertificate partition_lll(const Digraph& d, const LllConfig& cfg) {
    const int n = d.vertex_count();
    if (n == 0) throw std::invalid_argument("cannot partition the empty digraph");
    if (!is_cd_regular(d, cfg.C, cfg.d))
        throw std::invalid_argument("input is not (C,d)-regular for the supplied C and d");
    Feasibility feas = lll_feasibility(cfg);
    const int t = feas.t;
    if (t < 1) throw std::invalid_argument("c' gives t < 1; no partition to build");
    if (t > n) throw std::invalid_argument("c' gives more parts than vertices");

    SeededRng rng(cfg.seed);
    Assignment asg;
    asg.t = t;
    const int blocks = (n + t - 1) / t;
    asg.total = blocks * t;
    asg.slot.assign(asg.total, 0);
    for (int i = 0; i < blocks; ++i) redraw_block(asg, i, rng);

    // cross[v*t + j] = d+(v, V_j), maintained incrementally.
    std::vector<int> cross(static_cast<std::size_t>(n) * t, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : d.out(v)) ++cross[static_cast<std::size_t>(v) * t + asg.slot[w]];

    std::vector<char> bad(static_cast<std::size_t>(n) * t, 0);
    long long bad_count = 0;
    auto refresh_event = [&](Vertex v, int j) {
        const std::size_t idx = static_cast<std::size_t>(v) * t + j;
        const long long dplus = d.out_degree(v);
        long long dev = 2 * (static_cast<long long>(t) * cross[idx] - dplus);
        if (dev < 0) dev = -dev;
        const char now = dev >= dplus;
        bad_count += now - bad[idx];
        bad[idx] = now;
    };
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < t; ++j) refresh_event(v, j);

    std::vector<char> block_marked(blocks, 0), dirty_marked(n, 0);
    std::vector<int> resample_blocks;
    std::vector<Vertex> dirty;
    long long rounds = 0;

    while (bad_count > 0) {
        if (rounds >= cfg.max_resample_rounds)
            throw convergence_error("resampling did not converge within the round cap");
        ++rounds;

        Vertex bad_v = -1;
        for (std::size_t idx = 0; idx < bad.size(); ++idx) {
            if (bad[idx]) {
                bad_v = static_cast<Vertex>(idx / t);
                break;
            }
        }

        // Redraw every block meeting N+(bad_v), plus its own block.
        resample_blocks.clear();
        auto mark = [&](int b) {
            if (!block_marked[b]) {
                block_marked[b] = 1;
                resample_blocks.push_back(b);
            }
        };
        mark(asg.block_of(bad_v));
        for (Vertex w : d.out(bad_v)) mark(asg.block_of(w));
        std::sort(resample_blocks.begin(), resample_blocks.end());

        dirty.clear();
        auto touch = [&](Vertex v) {
            if (!dirty_marked[v]) {
                dirty_marked[v] = 1;
                dirty.push_back(v);
            }
        };
        for (int b : resample_blocks) {
            for (int k = 0; k < t; ++k) {
                int u = b * t + k;
                if (u >= n) continue;  // fake padding vertex, no arcs
                for (Vertex v2 : d.in(u)) --cross[static_cast<std::size_t>(v2) * t + asg.slot[u]];
            }
            redraw_block(asg, b, rng);
            for (int k = 0; k < t; ++k) {
                int u = b * t + k;
                if (u >= n) continue;
                for (Vertex v2 : d.in(u)) {
                    ++cross[static_cast<std::size_t>(v2) * t + asg.slot[u]];
                    touch(v2);
                }
            }
            block_marked[b] = 0;
        }
        for (Vertex v2 : dirty) {
            dirty_marked[v2] = 0;
            for (int j = 0; j < t; ++j) refresh_event(v2, j);
        }
    }

    PartitionCertificate cert;
    cert.t = t;
    cert.resample_rounds_used = rounds;
    cert.fake_vertex_count = asg.total - n;
    cert.degree_floor = std::log(static_cast<double>(cfg.d)) / (2.0 * cfg.c_prime);
    cert.parts.assign(t, {});
    for (Vertex v = 0; v < n; ++v) cert.parts[asg.slot[v]].push_back(v);
    cert.sizes.reserve(t);
    for (const auto& part : cert.parts) cert.sizes.push_back(static_cast<int>(part.size()));

    // Fresh recount, independent of the incremental bookkeeping above.
    std::vector<int> part_of(n, -1);
    for (int j = 0; j < t; ++j)
        for (Vertex v : cert.parts[j]) part_of[v] = j;
    int min_cross = std::numeric_limits<int>::max();
    std::vector<int> row(t, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(row.begin(), row.end(), 0);
        for (Vertex w : d.out(v)) ++row[part_of[w]];
        for (int j = 0; j < t; ++j) {
            min_cross = std::min(min_cross, row[j]);
            long long dev = 2 * (static_cast<long long>(t) * row[j] - d.out_degree(v));
            if (dev < 0) dev = -dev;
            if (dev >= d.out_degree(v))
                throw std::logic_error("resampling bookkeeping left a bad event in place");
        }
    }
    cert.min_cross_degree = min_cross;
    return cert;
}

StitchResult stitch_long_path(const Digraph& d, const std::vector<std::vector<Vertex>>& parts,
                              const SolverLimits&) {
    if (parts.empty()) throw std::invalid_argument("stitch needs at least one part");
    const int n = d.vertex_count();
    const int t = static_cast<int>(parts.size());
    std::vector<int> part_of(n, -1);
    for (int j = 0; j < t; ++j) {
        if (parts[j].empty()) throw std::invalid_argument("invalid partition: empty part");
        for (Vertex v : parts[j]) {
            if (v < 0 || v >= n) throw std::out_of_range("part member out of range");
            if (part_of[v] != -1) throw std::invalid_argument("invalid partition: parts overlap");
            part_of[v] = j;
        }
    }

    GirthResult g = girth(d);
    if (!g.finite())
        throw std::invalid_argument("invalid partition: host digraph is acyclic");

    StitchResult result;
    result.connectors_used = t - 1;
    result.segment_lengths.assign(t, 0);
    std::vector<char> visited(n, 0);

    Vertex cur = *std::min_element(parts[0].begin(), parts[0].end());
    visited[cur] = 1;
    result.path.vertices.push_back(cur);

    for (int j = 0; j < t; ++j) {
        if (j > 0) {
            Vertex next = -1;
            for (Vertex w : d.out(cur))
                if (part_of[w] == j && (next == -1 || w < next)) next = w;
            if (next == -1)
                throw std::invalid_argument("invalid partition: no crossing arc into part " +
                                            std::to_string(j));
            visited[next] = 1;
            result.path.vertices.push_back(next);
            cur = next;
        }
        // Maximal walk inside the part: always the smallest unvisited
        // out-neighbour that stays in part j.
        while (true) {
            Vertex next = -1;
            bool has_in_part = false;
            for (Vertex w : d.out(cur)) {
                if (part_of[w] != j) continue;
                has_in_part = true;
                if (!visited[w] && (next == -1 || w < next)) next = w;
            }
            if (next == -1) {
                if (!has_in_part)
                    throw std::invalid_argument(
                        "invalid partition: segment endpoint has no out-neighbour in its part");
                break;  // all in-part out-neighbours visited: a cycle closes
            }
            visited[next] = 1;
            result.path.vertices.push_back(next);
            ++result.segment_lengths[j];
            cur = next;
        }
    }

    result.guaranteed_floor =
        static_cast<long long>(t) * (*g.girth - 1) + (t - 1);
    if (result.path.length() < result.guaranteed_floor)
        throw std::logic_error("stitched path shorter than the provable floor");
    return result;
}

double default_c_prime(const Rat& C, int d) {
    if (d <= 1) return 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double c = std::ldexp(1.0, -k);
        LllConfig cfg{C, d, c, 0, 1};
        Feasibility f = lll_feasibility(cfg);
        if (f.feasible) return c;
    }
    return 0.0;
}

double practical_c_prime(const Rat& C, int d) {
    if (double strict = default_c_prime(C, d); strict > 0.0) return strict;
    const long double ln_d = std::log(static_cast<long double>(d));
    double with_t1 = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double c = std::ldexp(1.0, -k);
        int t = static_cast<int>(std::floor(static_cast<long double>(c) * d / ln_d));
        if (t >= 2 && t <= 3) return c;
        if (t == 1 && with_t1 == 0.0) with_t1 = c;
    }
    return with_t1;
}

Theorem4Result theorem4_driver(const Digraph& d, const Rat& C,
                               std::optional<double> c_prime_override,
                               std::optional<std::uint64_t> seed, const SolverLimits& limits) {
    DegreeProfile profile = degree_profile(d);
    const int deg = profile.min_out;
    if (deg < 1) throw std::invalid_argument("driver needs minimum out-degree >= 1");
    if (!is_cd_regular(d, C, deg))
        throw std::invalid_argument("input is not (C,d)-regular for the supplied C");

    Theorem4Result result;
    result.d = deg;
    result.C = C;

    double c_prime = 0.0;
    int t = 0;
    if (deg > 1) {
        c_prime = c_prime_override.value_or(default_c_prime(C, deg));
        if (c_prime > 0.0) {
            LllConfig probe{C, deg, c_prime, 0, 1};
            t = lll_feasibility(probe).t;
        }
    }

    if (c_prime <= 0.0 || t <= 1) {
        // t = 1 maximal-path fallback: a single part covering V(D).
        result.fallback = true;
        result.t = 1;
        result.c_prime = c_prime;
        result.c = c_prime / 2.0;
        std::vector<Vertex> all(d.vertex_count());
        for (Vertex v = 0; v < d.vertex_count(); ++v) all[v] = v;
        result.stitch = stitch_long_path(d, {all}, limits);
    } else {
        LllConfig cfg{C, deg, c_prime, seed.value_or(0), 1'000'000};
        result.certificate = partition_lll(d, cfg);
        result.t = result.certificate->t;
        result.c_prime = c_prime;
        result.c = c_prime / 2.0;
        result.stitch = stitch_long_path(d, result.certificate->parts, limits);
    }

    GirthResult g = girth(d);
    result.girth_value = g.girth;
    if (g.finite() && result.c_prime > 0.0 && deg > 1) {
        const double target = result.c * deg * (*g.girth) / std::log(static_cast<double>(deg));
        result.target = target;
        result.stitch.asymptotic_target = target;
    }
    return result;
}

}  // namespace girthpath
