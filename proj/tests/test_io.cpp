#include <doctest.h>

#include <sstream>

#include "girthpath/errors.hpp"
#include "girthpath/io.hpp"
#include "girthpath/json_io.hpp"
#include "girthpath/rational.hpp"

using namespace girthpath;

TEST_SUITE("io-formats") {

TEST_CASE("edge list round trip with comments and blanks") {
    std::istringstream in(
        "# a triangle\n"
        "3 3\n"
        "\n"
        "0 1  # first arc\n"
        "1 2\n"
        "2 0\n");
    Digraph d = parse_edge_list(in);
    CHECK(d.vertex_count() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(canonical_edge_list(d) == "3 3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("canonical writer sorts arcs") {
    Digraph d(3, {{2, 0}, {0, 2}, {0, 1}});
    CHECK(canonical_edge_list(d) == "3 3\n0 1\n0 2\n2 0\n");
}

TEST_CASE("parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("definitely not numbers\n"), parse_error);
    CHECK_THROWS_AS(parse("2 2\n0 1\n"), parse_error);          // missing arc
    CHECK_THROWS_AS(parse("2 1\n0 5\n"), parse_error);          // head out of range
    CHECK_THROWS_AS(parse("2 1\n0 1\n1 0\n"), parse_error);     // trailing data
    CHECK_THROWS_AS(parse("2 1\n0 1 3\n"), parse_error);        // extra token
    CHECK_THROWS_AS(parse_edge_list_file("/nonexistent.el"), parse_error);
}

TEST_CASE("dot export carries every arc with direction") {
    Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
    std::ostringstream out;
    write_dot(d, out);
    const std::string dot = out.str();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0 -> 1;") != std::string::npos);
    CHECK(dot.find("1 -> 2;") != std::string::npos);
    CHECK(dot.find("2 -> 0;") != std::string::npos);
}

TEST_CASE("digest is stable and content-sensitive") {
    Digraph a(3, {{0, 1}, {1, 2}, {2, 0}});
    Digraph b(3, {{2, 0}, {1, 2}, {0, 1}});  // same set, different input order
    Digraph c(3, {{0, 1}, {1, 0}});
    CHECK(digest(a) == digest(b));
    CHECK(digest(a) != digest(c));
    CHECK(digest(a).size() == 16);
}

TEST_CASE("graph JSON round trip is lossless") {
    Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    Digraph back = graph_from_json(graph_to_json(d));
    CHECK(canonical_edge_list(back) == canonical_edge_list(d));
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}}), parse_error);
}

TEST_CASE("manifest carries the reproducibility fields") {
    auto m = make_manifest("analyze", {{"input", "x.el"}}, 7, "abc");
    auto j = to_json(m);
    CHECK(j.at("command") == "analyze");
    CHECK(j.at("seed") == 7);
    CHECK(j.at("instance_digest") == "abc");
    CHECK(j.at("tool_version") == kToolVersion);
    CHECK(j.at("timestamp").get<std::string>().size() == 20);  // ISO-8601 Z form
}

TEST_CASE("rational parsing and exact comparisons") {
    CHECK(parse_rat("2") == Rat(2));
    CHECK(parse_rat("3/2") == Rat(3, 2));
    CHECK(parse_rat("1.5") == Rat(3, 2));
    CHECK(parse_rat("0.3465") == Rat(693, 2000));
    CHECK_THROWS_AS(parse_rat("abc"), parse_error);
    CHECK(Rat(16535, 10000) * Rat(10000) == Rat(16535));
    CHECK(Rat(5) >= Rat(3));
    CHECK(Rat(2, 3) < Rat(3, 4));
    CHECK(Rat(-1, -2) == Rat(1, 2));
}

}  // TEST_SUITE
