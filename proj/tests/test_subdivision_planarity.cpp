#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/planarity.hpp"
#include "trunkit/subdivision.hpp"

using namespace trunkit;

TEST_CASE("find_subdivision basics") {
    auto k4_in_k4 = find_subdivision(complete_graph(4), SubdivisionPattern::K4);
    REQUIRE(k4_in_k4.has_value());
    CHECK(is_valid_subdivision(complete_graph(4), *k4_in_k4));

    CHECK_FALSE(find_subdivision(cycle_graph(6), SubdivisionPattern::K23).has_value());

    // K_{2,3} with one subdivided edge
    Multigraph g = complete_bipartite(2, 3);
    int mid = g.add_vertex();
    g.add_edge(0, mid);
    g.add_edge(mid, 2);
    // remove the original 0-2 edge: rebuild without edge id 0
    Multigraph h(g.order());
    for (int e = 1; e < g.size(); e++) h.add_edge(g.edge(e).u, g.edge(e).v);
    auto w = find_subdivision(h, SubdivisionPattern::K23);
    REQUIRE(w.has_value());
    CHECK(is_valid_subdivision(h, *w));

    CHECK(find_subdivision(complete_graph(5), SubdivisionPattern::K5).has_value());
    CHECK(find_subdivision(complete_bipartite(3, 3), SubdivisionPattern::K33).has_value());
    CHECK_FALSE(find_subdivision(complete_graph(4), SubdivisionPattern::K5).has_value());

    Multigraph multi(2);
    multi.add_edge(0, 1);
    multi.add_edge(0, 1);
    CHECK_THROWS_AS(find_subdivision(multi, SubdivisionPattern::K4), precondition_error);
}

TEST_CASE("planarity of known graphs") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(petersen_graph()));
    CHECK(is_planar(hypercube_q3()));
    CHECK(is_planar(octahedron_graph()));
    CHECK(is_planar(prism_graph(6)));
    CHECK(is_planar(cycle_graph(12)));
    CHECK(is_planar(path_graph(7)));
    CHECK(is_planar(star_graph(5)));
    // K_5 minus an edge is planar
    Multigraph k5m(5);
    for (int u = 0; u < 5; u++)
        for (int v = u + 1; v < 5; v++)
            if (!(u == 0 && v == 1)) k5m.add_edge(u, v);
    CHECK(is_planar(k5m));
    // K_{3,3} minus an edge is planar
    Multigraph k33m(6);
    for (int u = 0; u < 3; u++)
        for (int v = 3; v < 6; v++)
            if (!(u == 0 && v == 3)) k33m.add_edge(u, v);
    CHECK(is_planar(k33m));
}

TEST_CASE("kuratowski witness on small non-planar graphs") {
    auto r5 = is_planar_with_witness(complete_graph(5));
    CHECK_FALSE(r5.planar);
    REQUIRE(r5.witness.has_value());
    CHECK(r5.witness->pattern == SubdivisionPattern::K5);
    CHECK(is_valid_subdivision(complete_graph(5), *r5.witness));

    auto rp = is_planar_with_witness(petersen_graph());
    CHECK_FALSE(rp.planar);
    REQUIRE(rp.witness.has_value());
    CHECK(rp.witness->pattern == SubdivisionPattern::K33);  // cubic, so no K5 subdivision
    CHECK(is_valid_subdivision(petersen_graph(), *rp.witness));
}

TEST_CASE("complete truncation of K_5 is non-planar with a witness") {
    // cohesive truncation of a non-planar source; two independent methods
    Multigraph y = complete_truncation(complete_graph(5)).y;
    CHECK(y.size() <= 3 * y.order() - 6);  // the edge bound alone cannot decide
    auto r = is_planar_with_witness(y);
    CHECK_FALSE(r.planar);
    REQUIRE(r.witness.has_value());
    CHECK(is_valid_subdivision(y, *r.witness));
}

TEST_CASE("outerplanarity") {
    CHECK(is_outerplanar(cycle_graph(7)));
    CHECK(is_outerplanar(path_graph(5)));
    CHECK_FALSE(is_outerplanar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
    // C_4 plus one chord stays outerplanar
    Multigraph fan(4);
    fan.add_edge(0, 1);
    fan.add_edge(1, 2);
    fan.add_edge(2, 3);
    fan.add_edge(3, 0);
    fan.add_edge(0, 2);
    CHECK(is_outerplanar(fan));
}

TEST_CASE("outerplanar implies sparse") {
    for (std::uint64_t seed = 0; seed < 300; seed++) {
        Multigraph g = testsupport::random_simple_graph(7, 0.4, seed);
        if (is_outerplanar(g) && g.order() >= 2) CHECK(g.size() <= 2 * g.order() - 3);
    }
}

TEST_CASE("apex outerplanarity agrees with forbidden subdivisions, 1000 seeds") {
    for (std::uint64_t seed = 0; seed < 1000; seed++) {
        int n = 4 + static_cast<int>(seed % 5);  // order 4..8
        double p = 0.25 + 0.1 * static_cast<double>(seed % 6);
        Multigraph g = testsupport::random_simple_graph(n, p, seed);
        bool outer = is_outerplanar(g);
        bool forbidden = find_subdivision(g, SubdivisionPattern::K4).has_value() ||
                         find_subdivision(g, SubdivisionPattern::K23).has_value();
        CHECK(outer == !forbidden);
    }
}

TEST_CASE("planarity agrees with kuratowski subdivisions on random order <= 8") {
    for (std::uint64_t seed = 0; seed < 400; seed++) {
        int n = 5 + static_cast<int>(seed % 4);
        double p = 0.35 + 0.15 * static_cast<double>(seed % 4);
        Multigraph g = testsupport::random_simple_graph(n, p, seed ^ 0x9e3779b9u);
        bool planar = is_planar(g);
        bool forbidden = find_subdivision(g, SubdivisionPattern::K5).has_value() ||
                         find_subdivision(g, SubdivisionPattern::K33).has_value();
        CHECK(planar == !forbidden);
    }
}
