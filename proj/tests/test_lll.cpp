#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "girthpath/construct.hpp"
#include "girthpath/errors.hpp"
#include "girthpath/girth.hpp"
#include "girthpath/lll.hpp"
#include "girthpath/rng.hpp"

using namespace girthpath;

namespace {

Digraph cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs);
}

}  // namespace

TEST_SUITE("lll-partition") {

TEST_CASE("feasibility basics") {
    CHECK_THROWS_AS(lll_feasibility({Rat(2), 1, 0.5, 0, 10}), std::invalid_argument);

    // d = 2 with c' below ln 2 floors t to zero.
    auto f = lll_feasibility({Rat(2), 2, 0.25, 0, 10});
    CHECK(f.t == 0);
    CHECK(!f.feasible);

    // Value recomputed independently for C=2, d=128, t=2.
    auto probe = lll_feasibility({Rat(2), 128, 0.09, 0, 10});
    CHECK(probe.t == 2);
    const long double expected =
        2.0L * std::exp(-128.0L / 24.0L + 1.0L) * (2.0L * 256.0L * 256.0L + 1.0L);
    CHECK(static_cast<double>(probe.inequality_value) ==
          doctest::Approx(static_cast<double>(expected)));
    CHECK(probe.feasible == (expected < 1.0L));
}

TEST_CASE("inequality value is increasing in t") {
    for (int d : {32, 128, 1024})
        for (int t = 1; t + 1 <= 6; ++t)
            CHECK(lll_inequality_lhs(Rat(2), d, t) < lll_inequality_lhs(Rat(2), d, t + 1));
}

TEST_CASE("bad_event boundary semantics") {
    // Vertex 0 with out-degree 4; t = 2.
    Digraph d(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(!bad_event(d, 0, {1, 2}, 2));       // deviation 0
    CHECK(bad_event(d, 0, {}, 2));            // deviation 2 >= 1
    CHECK(bad_event(d, 0, {1}, 2));           // deviation 1 >= 1, inclusive boundary
    CHECK_THROWS_AS(bad_event(d, 0, {1}, 0), std::invalid_argument);
}

TEST_CASE("t = 1 partition is trivial and exact") {
    Digraph d = generate({GenKind::cd_regular, 24, 4, Rat(2), 3});
    // c' large enough that floor(c'*d/ln d) == 1.
    LllConfig cfg{Rat(2), 4, 0.4, 17, 1000};
    auto cert = partition_lll(d, cfg);
    CHECK(cert.t == 1);
    CHECK(cert.resample_rounds_used == 0);
    CHECK(cert.parts.size() == 1);
    CHECK(static_cast<int>(cert.parts[0].size()) == 24);
    CHECK(cert.min_cross_degree == 4);
}

TEST_CASE("partition_lll certificate verifies by direct recount") {
    Digraph d = generate({GenKind::cd_regular, 128, 32, Rat(2), 5});
    LllConfig cfg{Rat(2), 32, 0.25, 7, 100000};
    auto feas = lll_feasibility(cfg);
    CHECK(feas.t == 2);
    auto cert = partition_lll(d, cfg);
    CHECK(cert.t == 2);

    auto [mn, mx] = std::minmax_element(cert.sizes.begin(), cert.sizes.end());
    CHECK(*mx - *mn <= 1);

    std::vector<int> part_of(d.vertex_count(), -1);
    for (int j = 0; j < cert.t; ++j)
        for (Vertex v : cert.parts[j]) {
            CHECK(part_of[v] == -1);
            part_of[v] = j;
        }
    CHECK(std::count(part_of.begin(), part_of.end(), -1) == 0);

    const int floor_needed = static_cast<int>(std::ceil(std::log(32.0) / (2 * 0.25)));
    int min_cross = d.vertex_count();
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        std::vector<int> row(cert.t, 0);
        for (Vertex w : d.out(v)) ++row[part_of[w]];
        for (int j = 0; j < cert.t; ++j) min_cross = std::min(min_cross, row[j]);
    }
    CHECK(min_cross == cert.min_cross_degree);
    CHECK(min_cross >= floor_needed);

    for (int j = 0; j < cert.t; ++j)
        for (Vertex v = 0; v < d.vertex_count(); ++v) CHECK(!bad_event(d, v, cert.parts[j], cert.t));
}

TEST_CASE("partition_lll is deterministic for a fixed config") {
    Digraph d = generate({GenKind::cd_regular, 96, 32, Rat(2), 21});
    LllConfig cfg{Rat(2), 32, 0.25, 99, 100000};
    auto a = partition_lll(d, cfg);
    auto b = partition_lll(d, cfg);
    CHECK(a.parts == b.parts);
    CHECK(a.resample_rounds_used == b.resample_rounds_used);
}

TEST_CASE("partition_lll rejects irregular inputs and hopeless configs") {
    CHECK_THROWS_AS(partition_lll(cycle(6), LllConfig{Rat(1), 2, 0.5, 0, 10}),
                    std::invalid_argument);  // out-degree 1 < d = 2
    Digraph d = generate({GenKind::cd_regular, 24, 4, Rat(2), 3});
    CHECK_THROWS_AS(partition_lll(d, LllConfig{Rat(2), 4, 0.05, 0, 10}),
                    std::invalid_argument);  // t = 0
}

TEST_CASE("partition_lll reports non-convergence with a round cap of zero") {
    // Fake vertices make block padding exercise too: n = 33, t = 3.
    Digraph d = generate({GenKind::cd_regular, 33, 16, Rat(2), 9});
    LllConfig cfg{Rat(2), 16, 0.55, 1, 0};
    auto feas = lll_feasibility(cfg);
    REQUIRE(feas.t == 3);
    try {
        auto cert = partition_lll(d, cfg);
        CHECK(cert.resample_rounds_used == 0);  // lucky initial draw: nothing to resample
    } catch (const convergence_error&) {
        CHECK(true);  // cap of zero fired before the first resample
    }
}

TEST_CASE("permutation uniformity over 10000 draws") {
    SeededRng rng(12345);
    std::map<std::vector<int>, int> counts;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++counts[rng.permutation(4)];
    CHECK(counts.size() == 24);
    const double p = 1.0 / 24.0;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    for (const auto& [perm, count] : counts) {
        const double freq = static_cast<double>(count) / draws;
        CHECK(std::abs(freq - p) <= 5 * sigma);
    }
}

TEST_CASE("stitch on a single part walks a maximal path") {
    Digraph d = cycle(8);
    std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6, 7};
    auto result = stitch_long_path(d, {all});
    CHECK(result.path.length() == 7);
    CHECK(result.connectors_used == 0);
    CHECK(result.guaranteed_floor == 7);  // 1*(8-1) + 0
    CHECK(result.path.valid_in(d));
}

TEST_CASE("stitch across a certified partition") {
    Digraph d = generate({GenKind::cd_regular, 128, 32, Rat(2), 5});
    LllConfig cfg{Rat(2), 32, 0.25, 7, 100000};
    auto cert = partition_lll(d, cfg);
    auto result = stitch_long_path(d, cert.parts);
    auto g = girth(d);
    REQUIRE(g.finite());
    CHECK(result.path.valid_in(d));
    CHECK(result.path.length() >= cert.t * (*g.girth - 1) + cert.t - 1);
    CHECK(result.connectors_used == cert.t - 1);
    long long total = result.connectors_used;
    for (int len : result.segment_lengths) {
        CHECK(len >= *g.girth - 1);
        total += len;
    }
    CHECK(total == result.path.length());
}

TEST_CASE("stitch rejects partitions without crossing arcs") {
    // Two 3-cycles with no arcs between them.
    std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    Digraph d(6, arcs);
    CHECK_THROWS_AS(stitch_long_path(d, {{0, 1, 2}, {3, 4, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(stitch_long_path(d, {{0, 1, 2}, {0, 3, 4, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(stitch_long_path(Digraph(2, {{0, 1}}), {{0, 1}}), std::invalid_argument);
}

TEST_CASE("c_prime grid selection") {
    // At d = 4096 the strict inequality has feasible grid points.
    CHECK(default_c_prime(Rat(2), 4096) > 0.0);
    // At d = 128 it has none, and the practical rule lands in t in [2,3].
    CHECK(default_c_prime(Rat(2), 128) == 0.0);
    const double practical = practical_c_prime(Rat(2), 128);
    CHECK(practical > 0.0);
    const int t = static_cast<int>(std::floor(practical * 128 / std::log(128.0)));
    CHECK(t >= 2);
    CHECK(t <= 3);
}

TEST_CASE("theorem4_driver fallback on the directed cycle") {
    auto result = theorem4_driver(cycle(9), Rat(1));
    CHECK(result.fallback);
    CHECK(result.t == 1);
    CHECK(result.stitch.path.length() == 8);
    CHECK(result.girth_value == 9);
}

TEST_CASE("theorem4_driver rejects when (C,d)-regularity fails") {
    // D_{2,2} has min out-degree 2 but in-degrees up to 4 > 1*2.
    Digraph d = build_counterexample({2, 2, 2});
    CHECK_THROWS_AS(theorem4_driver(d, Rat(1)), std::invalid_argument);
}

TEST_CASE("theorem4_driver with an explicit c_prime runs the full pipeline") {
    Digraph d = generate({GenKind::cd_regular, 128, 32, Rat(2), 5});
    auto result = theorem4_driver(d, Rat(2), 0.25, 7);
    CHECK(!result.fallback);
    CHECK(result.t == 2);
    REQUIRE(result.certificate.has_value());
    CHECK(result.stitch.path.valid_in(d));
    REQUIRE(result.target.has_value());
    CHECK(result.c == doctest::Approx(0.125));
    REQUIRE(result.stitch.asymptotic_target.has_value());
}

}  // TEST_SUITE
