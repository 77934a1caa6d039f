#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "girthpath/digraph.hpp"
#include "girthpath/girth.hpp"
#include "girthpath/oracle.hpp"
#include "girthpath/rng.hpp"
#include "girthpath/scc.hpp"

using namespace girthpath;

namespace {

Digraph triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Digraph cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs);
}

Digraph complete(int n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(p)) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("validate accepts a triangle") {
    CHECK(validate(triangle()).ok());
}

TEST_CASE("validate reports self-loops") {
    Digraph d(1, {{0, 0}});
    auto report = validate(d);
    REQUIRE(!report.ok());
    CHECK(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::SelfLoop);
}

TEST_CASE("validate reports duplicate arcs") {
    Digraph d(2, {{0, 1}, {0, 1}});
    auto report = validate(d);
    REQUIRE(!report.ok());
    CHECK(report.violations[0].kind == Violation::Kind::DuplicateArc);
    CHECK(report.violations[0].arc == Arc{0, 1});
}

TEST_CASE("constructor rejects out-of-range endpoints") {
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::out_of_range);
}

TEST_CASE("is_oriented") {
    CHECK(is_oriented(triangle()));
    CHECK(!is_oriented(Digraph(2, {{0, 1}, {1, 0}})));
    CHECK(!is_oriented(complete(3)));
}

TEST_CASE("degree_profile") {
    auto p = degree_profile(triangle());
    CHECK(p.min_out == 1);
    CHECK(p.max_out == 1);
    CHECK(p.min_in == 1);
    CHECK(p.max_in == 1);

    auto k3 = degree_profile(complete(3));
    CHECK(k3.min_out == 2);
    CHECK(k3.max_out == 2);

    auto star = degree_profile(Digraph(3, {{0, 1}, {0, 2}}));
    CHECK(star.min_out == 0);
    CHECK(star.max_out == 2);

    CHECK_THROWS_AS(degree_profile(Digraph()), std::invalid_argument);
}

TEST_CASE("strong_components basics") {
    CHECK(strong_components(cycle(5)).size() == 1);
    auto two = strong_components(Digraph(2, {{0, 1}}));
    CHECK(two.size() == 2);
}

TEST_CASE("strong_components order and mutual reachability on random digraphs") {
    SeededRng pick(42);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph d = random_digraph(3 + trial % 8, 0.25, 1000 + trial);
        auto comps = strong_components(d);

        std::vector<int> comp_of(d.vertex_count(), -1);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);

        // Union is V(D), no overlaps.
        CHECK(std::all_of(comp_of.begin(), comp_of.end(), [](int c) { return c >= 0; }));

        // No arc runs from a later part to an earlier one.
        for (Vertex v = 0; v < d.vertex_count(); ++v)
            for (Vertex w : d.out(v)) CHECK(comp_of[v] <= comp_of[w]);

        // Mutual reachability inside parts, spot-checked on random pairs.
        auto reaches = [&](Vertex from, Vertex to) {
            std::vector<char> seen(d.vertex_count(), 0);
            std::vector<Vertex> stack{from};
            seen[from] = 1;
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                if (u == to) return true;
                for (Vertex w : d.out(u))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            return false;
        };
        for (int probe = 0; probe < 100; ++probe) {
            const auto& comp = comps[pick.bounded(comps.size())];
            Vertex a = comp[pick.bounded(comp.size())];
            Vertex b = comp[pick.bounded(comp.size())];
            CHECK(reaches(a, b));
        }
    }
}

TEST_CASE("min_outdeg_strong_subgraph") {
    auto tri = min_outdeg_strong_subgraph(triangle(), 1);
    REQUIRE(tri.has_value());
    CHECK(tri->graph.vertex_count() == 3);

    CHECK(!min_outdeg_strong_subgraph(Digraph(2, {{0, 1}}), 1).has_value());

    // Disjoint triangle and 6-cycle both qualify; tie-break picks vertex 0's.
    std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}};
    for (int i = 0; i < 6; ++i) arcs.emplace_back(3 + i, 3 + (i + 1) % 6);
    auto chosen = min_outdeg_strong_subgraph(Digraph(9, arcs), 1);
    REQUIRE(chosen.has_value());
    CHECK(chosen->graph.vertex_count() == 3);
    CHECK(chosen->to_original == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("induced_subgraph") {
    Digraph tri = triangle();
    SUBCASE("identity") {
        auto full = induced_subgraph(tri, {0, 1, 2});
        CHECK(full.graph.arcs() == tri.arcs());
        CHECK(full.to_original == std::vector<Vertex>{0, 1, 2});
    }
    SUBCASE("empty set") {
        CHECK(induced_subgraph(tri, {}).graph.vertex_count() == 0);
    }
    SUBCASE("pair keeps the single arc") {
        auto sub = induced_subgraph(tri, {0, 1});
        CHECK(sub.graph.arcs() == std::vector<Arc>{{0, 1}});
    }
    SUBCASE("out-of-range id") {
        CHECK_THROWS_AS(induced_subgraph(tri, {0, 7}), std::out_of_range);
    }
}

TEST_CASE("induced_subgraph on the full vertex set is arc-identical (random)") {
    for (int trial = 0; trial < 40; ++trial) {
        Digraph d = random_digraph(2 + trial % 7, 0.3, 7000 + trial);
        std::vector<Vertex> all(d.vertex_count());
        for (Vertex v = 0; v < d.vertex_count(); ++v) all[v] = v;
        CHECK(induced_subgraph(d, all).graph.arcs() == d.arcs());
    }
}

TEST_CASE("prune_to_exact_outdegree") {
    SUBCASE("already regular is unchanged") {
        CHECK(prune_to_exact_outdegree(triangle(), 1).arcs() == triangle().arcs());
    }
    SUBCASE("keeps smallest head ids") {
        Digraph pruned = prune_to_exact_outdegree(complete(3), 1);
        CHECK(pruned.arcs() == std::vector<Arc>{{0, 1}, {1, 0}, {2, 0}});
    }
    SUBCASE("insufficient out-degree") {
        CHECK_THROWS_AS(prune_to_exact_outdegree(Digraph(2, {{0, 1}}), 1),
                        std::invalid_argument);
    }
    SUBCASE("output is regular and a sub-digraph (random)") {
        for (int trial = 0; trial < 40; ++trial) {
            Digraph d = random_digraph(4 + trial % 6, 0.6, 900 + trial);
            int min_out = d.out_degree(0);
            for (Vertex v = 1; v < d.vertex_count(); ++v)
                min_out = std::min(min_out, d.out_degree(v));
            if (min_out == 0) continue;
            Digraph pruned = prune_to_exact_outdegree(d, min_out);
            auto profile = degree_profile(pruned);
            CHECK(profile.min_out == min_out);
            CHECK(profile.max_out == min_out);
            for (const auto& [u, v] : pruned.arcs()) CHECK(d.has_arc(u, v));
        }
    }
}

TEST_CASE("girth basics") {
    auto tri = girth(triangle());
    REQUIRE(tri.finite());
    CHECK(*tri.girth == 3);
    CHECK(tri.witness->valid_in(triangle()));

    CHECK(!girth(Digraph(2, {{0, 1}})).finite());
    auto two = girth(Digraph(2, {{0, 1}, {1, 0}}));
    REQUIRE(two.finite());
    CHECK(*two.girth == 2);
}

TEST_CASE("girth matches brute-force enumeration on random digraphs") {
    for (int trial = 0; trial < 500; ++trial) {
        Digraph d = random_digraph(2 + trial % 7, 0.3, 31000 + trial);
        auto fast = girth(d);
        auto naive = oracle::naive_girth(d);
        CHECK(fast.girth == naive);
        if (fast.finite()) {
            REQUIRE(fast.witness.has_value());
            CHECK(fast.witness->valid_in(d));
            CHECK(fast.witness->length() == *fast.girth);
        }
    }
}

TEST_CASE("witness validity checks") {
    Digraph tri = triangle();
    CHECK(PathWitness{{0, 1, 2}}.valid_in(tri));
    CHECK(!PathWitness{{0, 2}}.valid_in(tri));
    CHECK(!PathWitness{{0, 1, 0}}.valid_in(tri));   // repeated vertex
    CHECK(CycleWitness{{0, 1, 2}}.valid_in(tri));
    CHECK(!CycleWitness{{0, 1}}.valid_in(tri));     // 1->0 missing
}

}  // TEST_SUITE
