#include <catch2/catch_amalgamated.hpp>

#include "uhs/json_io.hpp"

using namespace uhs;

TEST_CASE("hypergraph JSON round trip") {
    Hypergraph h = from_edges(3, 6, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}});
    std::string text = write_hypergraph_json(h);
    CHECK(text == R"({"k":3,"n":6,"edges":[[0,1,2],[0,1,3],[2,4,5]]})");
    CHECK(read_hypergraph_json(text) == h);
}

TEST_CASE("hypergraph JSON reader rejects unsorted input instead of normalizing") {
    CHECK_THROWS_AS(read_hypergraph_json(R"({"k":3,"n":4,"edges":[[0,2,1],[0,1,3]]})"),
                    ValidationError);
    CHECK_THROWS_AS(read_hypergraph_json(R"({"k":3,"n":4,"edges":[[0,1,3],[0,1,2]]})"),
                    ValidationError);
    CHECK_THROWS_AS(read_hypergraph_json(R"({"k":3,"n":4,"edges":[[0,1,2],[0,1,2]]})"),
                    ValidationError);
    CHECK_THROWS_AS(read_hypergraph_json(R"({"k":3,"n":4})"), ValidationError);
    CHECK_THROWS_AS(read_hypergraph_json(R"({"k":3,"n":4,"edges":[[0,1,2.5]]})"),
                    ValidationError);
    CHECK_THROWS_AS(read_hypergraph_json("not json"), ValidationError);
}

TEST_CASE("family JSON carries a roles annotation readers may ignore") {
    FamilyInstance inst = build_family(preset(Preset::G3, 3, 4, 2));
    std::string text = write_family_json(inst);
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("\"roles\""));
    CHECK(read_hypergraph_json(text) == inst.graph);
}

TEST_CASE("eigenpair JSON uses 17 significant digits") {
    EigenPair pair;
    pair.rho = 1.0 / 3.0;
    pair.x = {0.5, 0.25};
    pair.residual = 1e-12;
    pair.iterations = 42;
    std::string text = write_eigenpair_json(pair);
    CHECK(text ==
          R"({"rho": 0.33333333333333331, "x": [0.5, 0.25], "residual": 9.9999999999999998e-13, "iterations": 42})");
}

TEST_CASE("matching JSON shape") {
    MatchingResult r{2, {0, 3}};
    CHECK(write_matching_json(r) == R"({"alpha":2,"witness":[0,3]})");
}
