#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "uhs/hypergraph.hpp"

using namespace uhs;

TEST_CASE("validate: single edge is a supertree with no pendant edge") {
    Hypergraph h = from_edges(3, 3, {{0, 1, 2}});
    StructureReport rep = validate(h);
    CHECK(rep.connected);
    CHECK(rep.cyclomatic_r == 0);
    CHECK_FALSE(rep.cycle.has_value());
    CHECK(rep.degree_min == 1);
    CHECK(rep.degree_max == 1);
    CHECK(rep.pendant_edges.empty());
    CHECK(rep.pp_vertices.empty());
}

TEST_CASE("validate: minimal 2-cycle") {
    Hypergraph h = from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}});
    StructureReport rep = validate(h);
    CHECK(rep.connected);
    CHECK(rep.cyclomatic_r == 1);
    REQUIRE(rep.cycle.has_value());
    CHECK(rep.cycle->length() == 2);
    CHECK(rep.cycle->vertices == std::vector<int>{0, 1});
    CHECK(rep.cycle->edges == std::vector<int>{0, 1});
    CHECK(rep.degree_min == 1);
    CHECK(rep.degree_max == 2);
    CHECK(rep.pendant_edges.empty());

    CHECK(oracles::bf_cycles(h).size() == 1);
}

TEST_CASE("validate: 3-cycle found by search") {
    Hypergraph h = from_edges(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    StructureReport rep = validate(h);
    CHECK(rep.connected);
    CHECK(rep.cyclomatic_r == 1);
    REQUIRE(rep.cycle.has_value());
    CHECK(rep.cycle->length() == 3);

    auto cycles = oracles::bf_cycles(h);
    REQUIRE(cycles.size() == 1);
    CHECK(rep.cycle->vertices == cycles[0].first);
    CHECK(rep.cycle->edges == cycles[0].second);
}

TEST_CASE("validate: malformed inputs are rejected with the offending edge named") {
    CHECK_THROWS_WITH(validate(Hypergraph{3, 4, {{0, 1}, {0, 1, 2}}}),
                      Catch::Matchers::ContainsSubstring("edge 0"));
    CHECK_THROWS_WITH(validate(Hypergraph{3, 3, {{0, 1, 7}}}),
                      Catch::Matchers::ContainsSubstring("out-of-range"));
    CHECK_THROWS_WITH(validate(Hypergraph{3, 4, {{0, 1, 2}, {0, 1, 2}}}),
                      Catch::Matchers::ContainsSubstring("lexicographic"));
    CHECK_THROWS_WITH(validate(Hypergraph{3, 3, {{0, 0, 1}}}),
                      Catch::Matchers::ContainsSubstring("strictly ascending"));
    CHECK_THROWS_WITH(validate(Hypergraph{3, 4, {{0, 1, 2}}}),
                      Catch::Matchers::ContainsSubstring("isolated"));
    CHECK_THROWS_AS(from_edges(3, 4, {{0, 1, 2}, {2, 1, 0}}), ValidationError);
}

TEST_CASE("from_edges normalizes storage order") {
    Hypergraph h = from_edges(3, 5, {{4, 3, 2}, {2, 1, 0}});
    CHECK(h.edges == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
    CHECK(find_edge(h, {2, 3, 4}) == 1);
    CHECK_FALSE(find_edge(h, {0, 1, 3}).has_value());
}

TEST_CASE("degree sum equals k*m on random instances") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph h = oracles::random_connected(3, 2 + trial % 6, rng);
        auto deg = degrees(h);
        int sum = 0;
        for (int d : deg) sum += d;
        CHECK(sum == h.k * h.m());
    }
}

TEST_CASE("validate is label-invariant in every scalar field") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph h = oracles::random_connected(3, 2 + trial % 5, rng);
        StructureReport a = validate(h);
        Hypergraph g = relabel(h, oracles::random_permutation(h.n, rng));
        StructureReport b = validate(g);
        CHECK(a.connected == b.connected);
        CHECK(a.cyclomatic_r == b.cyclomatic_r);
        CHECK(a.degree_min == b.degree_min);
        CHECK(a.degree_max == b.degree_max);
        CHECK(a.pendant_edges.size() == b.pendant_edges.size());
        CHECK(a.pp_vertices.size() == b.pp_vertices.size());
        CHECK(a.cycle.has_value() == b.cycle.has_value());
        if (a.cycle && b.cycle) CHECK(a.cycle->length() == b.cycle->length());
    }
}

TEST_CASE("connected unicyclic instances satisfy n = (k-1)m") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph h = oracles::random_unicyclic(3, 2 + trial % 5, rng);
        StructureReport rep = validate(h);
        CHECK(rep.connected);
        CHECK(rep.cyclomatic_r == 1);
        CHECK(h.n == (h.k - 1) * h.m());
    }
}

TEST_CASE("pendant edges and PP vertices") {
    // 2-cycle with one pendant edge at the non-cycle vertex 2.
    Hypergraph h = from_edges(3, 6, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}});
    StructureReport rep = validate(h);
    CHECK(rep.pendant_edges == std::vector<int>{2});
    CHECK(rep.pp_vertices == std::vector<int>{4, 5});
}

TEST_CASE("distance: spec examples") {
    Hypergraph two_cycle = from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(distance(two_cycle, 2, 3) == 2);
    CHECK(distance(two_cycle, 2, 2) == 0);

    Hypergraph single = from_edges(3, 3, {{0, 1, 2}});
    CHECK(distance(single, 0, 2) == 1);

    Hypergraph split = from_edges(3, 6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_THROWS_AS(distance(split, 0, 3), Error);
}

TEST_CASE("distance agrees with exhaustive alternating-path search") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 15; ++trial) {
        Hypergraph h = oracles::random_connected(3, 2 + trial % 4, rng);
        for (int u = 0; u < h.n; ++u)
            for (int v = 0; v < h.n; ++v) {
                auto expected = oracles::bf_distance(h, u, v);
                REQUIRE(expected.has_value());
                CHECK(distance(h, u, v) == *expected);
            }
    }
}
