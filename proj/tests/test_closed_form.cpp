#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "uhs/closed_form.hpp"
#include "uhs/families.hpp"
#include "uhs/spectral.hpp"

using namespace uhs;

TEST_CASE("closed form F: t = 0 on a two-edge star") {
    Hypergraph h = from_edges(3, 5, {{0, 1, 2}, {0, 3, 4}});
    EigenPair pair = principal_eigenpair(h);
    ClosedFormReport rep = check_closed_form_F(h, 0, 0, 0, pair);
    REQUIRE(rep.unattached_defect.has_value());
    CHECK(*rep.unattached_defect < 1e-8);
    CHECK_FALSE(rep.attached_defect.has_value());
    // Direct identity at the known spectral radius 2^{1/3}.
    CHECK_THAT(pair.x[1], Catch::Matchers::WithinAbs(pair.x[0] / pair.rho, 1e-8));
}

TEST_CASE("closed form F: t = k-1 with every other vertex attached") {
    Hypergraph h = from_edges(3, 7, {{0, 1, 2}, {1, 3, 4}, {2, 5, 6}});
    EigenPair pair = principal_eigenpair(h);
    ClosedFormReport rep = check_closed_form_F(h, 0, 0, 2, pair);
    REQUIRE(rep.attached_defect.has_value());
    CHECK(*rep.attached_defect < 1e-8);
    double predicted = pair.x[0] / (pair.rho - std::pow(pair.rho, -2.0));
    CHECK_THAT(pair.x[1], Catch::Matchers::WithinAbs(predicted, 1e-8));
}

TEST_CASE("closed form F: intermediate t for k = 3 and k = 4") {
    {
        Hypergraph h = from_edges(3, 7, {{0, 1, 2}, {0, 5, 6}, {1, 3, 4}});
        EigenPair pair = principal_eigenpair(h);
        ClosedFormReport rep = check_closed_form_F(h, 0, 0, 1, pair);
        REQUIRE(rep.attached_defect.has_value());
        REQUIRE(rep.unattached_defect.has_value());
        CHECK(*rep.attached_defect < 1e-8);
        CHECK(*rep.unattached_defect < 1e-8);
    }
    {
        Hypergraph h = from_edges(
            4, 13, {{0, 1, 2, 3}, {0, 10, 11, 12}, {1, 4, 5, 6}, {2, 7, 8, 9}});
        EigenPair pair = principal_eigenpair(h);
        ClosedFormReport rep = check_closed_form_F(h, 0, 0, 2, pair);
        REQUIRE(rep.attached_defect.has_value());
        REQUIRE(rep.unattached_defect.has_value());
        CHECK(*rep.attached_defect < 1e-8);
        CHECK(*rep.unattached_defect < 1e-8);
    }
}

TEST_CASE("closed form W: t = 1 on the bare 2-cycle") {
    Hypergraph h = from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}});
    EigenPair pair = principal_eigenpair(h);
    ClosedFormReport rep = check_closed_form_W(h, 0, 1, 0, 1, pair);
    REQUIRE(rep.unattached_defect.has_value());
    CHECK(*rep.unattached_defect < 1e-8);
    // rho = 4^{1/3} and the orbit symmetry x(v1) = x(v2) make the predicted
    // value explicit.
    CHECK_THAT(pair.rho, Catch::Matchers::WithinAbs(std::cbrt(4.0), 1e-9));
    CHECK_THAT(pair.x[2], Catch::Matchers::WithinAbs(
                              std::sqrt(pair.x[0] * pair.x[1] / pair.rho), 1e-8));
}

TEST_CASE("closed form W: t = k-1 and the intermediate regime") {
    {
        Hypergraph h = from_edges(3, 6, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}});
        EigenPair pair = principal_eigenpair(h);
        ClosedFormReport rep = check_closed_form_W(h, 0, 1, 0, 2, pair);
        REQUIRE(rep.attached_defect.has_value());
        CHECK(*rep.attached_defect < 1e-8);
    }
    {
        Hypergraph h = from_edges(4, 9, {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 6, 7, 8}});
        // One of e1's two free vertices is attached: t = 2 with k = 4.
        EigenPair pair = principal_eigenpair(h);
        ClosedFormReport rep = check_closed_form_W(h, 0, 1, 0, 2, pair);
        REQUIRE(rep.attached_defect.has_value());
        REQUIRE(rep.unattached_defect.has_value());
        CHECK(*rep.attached_defect < 1e-8);
        CHECK(*rep.unattached_defect < 1e-8);
    }
}

TEST_CASE("closed forms located through family roles") {
    FamilyParams P{3, 11, 1, 1, 0, 1, 1};
    FamilyInstance inst = build_family(P);
    EigenPair pair = principal_eigenpair(inst.graph);
    const FamilyRoles& R = inst.roles;

    // Each of the t-edges at v1 carries pendant edges on all other vertices.
    ClosedFormReport t_edge = check_closed_form_F(inst.graph, R.v1, R.t_edges[0], P.k - 1, pair);
    CHECK(t_edge.max_defect() < 1e-8);

    // The w-edge carries w = 1 attachment.
    ClosedFormReport w_edge = check_closed_form_F(inst.graph, R.v1, *R.w_edge, P.w, pair);
    CHECK(w_edge.max_defect() < 1e-8);

    // Cycle edge e1 carries r attachments, e2 carries s = 0.
    ClosedFormReport e1 = check_closed_form_W(inst.graph, R.v1, R.v2, R.e1, P.r + 1, pair);
    CHECK(e1.max_defect() < 1e-8);
    ClosedFormReport e2 = check_closed_form_W(inst.graph, R.v1, R.v2, R.e2, 1, pair);
    CHECK(e2.max_defect() < 1e-8);
}

TEST_CASE("closed form configuration mismatches are rejected") {
    Hypergraph star2 = from_edges(3, 5, {{0, 1, 2}, {0, 3, 4}});
    EigenPair pair = principal_eigenpair(star2);
    // Wrong t.
    CHECK_THROWS_AS(check_closed_form_F(star2, 0, 0, 1, pair), ValidationError);
    // Anchor not in the edge.
    CHECK_THROWS_AS(check_closed_form_F(star2, 3, 0, 0, pair), ValidationError);
    // Single edge: too small.
    Hypergraph single = from_edges(3, 3, {{0, 1, 2}});
    EigenPair psingle{1.0, {0.1, 0.1, 0.1}, 0.0, 1};
    CHECK_THROWS_AS(check_closed_form_F(single, 0, 0, 0, psingle), ValidationError);

    // No second edge through both cycle vertices.
    Hypergraph path = from_edges(3, 5, {{0, 1, 2}, {2, 3, 4}});
    EigenPair ppath = principal_eigenpair(path);
    CHECK_THROWS_AS(check_closed_form_W(path, 0, 1, 0, 1, ppath), ValidationError);

    // Middle vertex of degree 3 breaks the pattern.
    Hypergraph heavy = from_edges(3, 8, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}, {2, 6, 7}});
    EigenPair pheavy = principal_eigenpair(heavy);
    CHECK_THROWS_AS(check_closed_form_W(heavy, 0, 1, 0, 2, pheavy), ValidationError);
}
