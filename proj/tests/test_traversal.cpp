#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunkit/canonical.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"
#include "trunkit/traversal.hpp"

using namespace trunkit;

TEST_CASE("euler theorem check") {
    CHECK(check_euler_theorem(matching_constituent_truncation(cycle_graph(5))).pass);
    CHECK(check_euler_theorem(matching_constituent_truncation(cycle_graph(5))).lhs);

    // K_5 complete truncation: constituents K_4 have odd valencies, Y eulerian
    VerificationReport r5 = check_euler_theorem(complete_truncation(complete_graph(5)));
    CHECK(r5.pass);
    CHECK(r5.lhs);

    // K_4: source not eulerian, Y cubic
    VerificationReport r4 = check_euler_theorem(complete_truncation(complete_graph(4)));
    CHECK(r4.pass);
    CHECK_FALSE(r4.lhs);

    Multigraph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(check_euler_theorem(complete_truncation(disconnected)), precondition_error);
}

TEST_CASE("spanning eulerian subgraph") {
    auto k4 = spanning_eulerian_subgraph(complete_graph(4));
    REQUIRE(k4.has_value());
    Multigraph sub = complete_graph(4).edge_subgraph(*k4);
    CHECK(is_connected(sub));
    for (int v = 0; v < 4; v++) {
        CHECK(sub.valency(v) % 2 == 0);
        CHECK(sub.valency(v) > 0);
    }

    // Petersen: the only candidates are Hamilton cycles, and there are none
    CHECK_FALSE(spanning_eulerian_subgraph(petersen_graph()).has_value());

    CHECK_FALSE(spanning_eulerian_subgraph(path_graph(4)).has_value());  // trees never qualify
    CHECK_FALSE(spanning_eulerian_subgraph(star_graph(3)).has_value());

    auto c6 = spanning_eulerian_subgraph(cycle_graph(6));
    REQUIRE(c6.has_value());
    CHECK(c6->size() == 6);

    // parallel edges: a doubled edge is itself spanning eulerian
    CHECK(spanning_eulerian_subgraph(complete_multigraph(2, 2)).has_value());

    // 25 edges exceeds the enumeration cap
    Multigraph big(25);
    for (int i = 0; i < 25; i++) big.add_edge(i, (i + 1) % 25);
    CHECK_THROWS_AS(spanning_eulerian_subgraph(big), cap_exceeded);
}

TEST_CASE("hamilton cycle of the complete truncation") {
    auto k4 = hamilton_cycle_of_complete_truncation(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->length() == 12);
    CHECK(is_hamilton_cycle(complete_truncation(complete_graph(4)).y, *k4));

    for (int n = 3; n <= 6; n++) {
        auto c = hamilton_cycle_of_complete_truncation(cycle_graph(n));
        REQUIRE(c.has_value());
        CHECK(is_hamilton_cycle(complete_truncation(cycle_graph(n)).y, *c));
    }

    CHECK_FALSE(hamilton_cycle_of_complete_truncation(petersen_graph()).has_value());
}

TEST_CASE("thm 5.1 biconditional with the independent oracle") {
    for (const std::string name : {"k4", "k5", "c6", "p4", "k13", "prism", "q3", "k23"}) {
        const Multigraph& x = catalog_graph(name);
        bool s = spanning_eulerian_subgraph(x).has_value();
        Truncation t = complete_truncation(x);
        CHECK(hamilton_cycle(t.y).has_value() == s);
    }
}

TEST_CASE("hamilton connected truncations of K_n") {
    for (int n : {4, 5}) {
        Truncation t = complete_truncation(complete_graph(n));
        for (int a = 0; a < t.y.order(); a++)
            for (int b = a + 1; b < t.y.order(); b++) {
                Walk w = hamilton_connected_path(t, a, b);
                CHECK(is_hamilton_path(t.y, w, a, b));
            }
    }
    // K_3 is rejected
    CHECK_THROWS_AS(hamilton_connected_path(complete_truncation(complete_graph(3)), 0, 3),
                    precondition_error);
    // non-hamilton-connected constituents are rejected
    Truncation sparse = spanning_path_truncation(complete_graph(5));
    CHECK_THROWS_AS(hamilton_connected_path(sparse, 0, 5), precondition_error);
}

TEST_CASE("walecki cycle decompositions") {
    HamiltonDecomposition k3 = walecki_cycle_decomposition(3);
    CHECK(k3.cycles.size() == 1);
    CHECK(is_valid_hamilton_decomposition(complete_graph(3), k3));

    HamiltonDecomposition k5 = walecki_cycle_decomposition(5);
    CHECK(k5.cycles.size() == 2);
    CHECK(is_valid_hamilton_decomposition(complete_graph(5), k5));

    HamiltonDecomposition k7 = walecki_cycle_decomposition(7);
    CHECK(k7.cycles.size() == 3);
    CHECK(is_valid_hamilton_decomposition(complete_graph(7), k7));

    CHECK_THROWS_AS(walecki_cycle_decomposition(4), precondition_error);
}

TEST_CASE("walecki path decompositions honor requested endpoints") {
    // n = 2: a single edge
    PathDecomposition p2 = walecki_path_decomposition(2, {{0, 1}});
    CHECK(p2.paths.size() == 1);
    CHECK(p2.paths[0].vertices == std::vector<int>{0, 1});

    // n = 4 with the pairing {{0,1},{2,3}}: two paths covering all 6 edges
    PathDecomposition p4 = walecki_path_decomposition(4, {{0, 1}, {2, 3}});
    REQUIRE(p4.paths.size() == 2);
    CHECK(p4.paths[0].vertices.front() == 0);
    CHECK(p4.paths[0].vertices.back() == 1);
    CHECK(p4.paths[1].vertices.front() == 2);
    CHECK(p4.paths[1].vertices.back() == 3);
    std::vector<int> use(6, 0);
    for (const Walk& p : p4.paths)
        for (int e : p.edges) use[static_cast<size_t>(e)]++;
    for (int c : use) CHECK(c == 1);

    // n = 5: two paths and a 2-edge matching missing the distinguished vertex
    PathDecomposition p5 = walecki_path_decomposition(5, {{0, 1}, {2, 3}}, 4);
    CHECK(p5.paths.size() == 2);
    CHECK(p5.matching.size() == 2);
    for (auto [a, b] : p5.matching) {
        CHECK(a != 4);
        CHECK(b != 4);
    }

    CHECK_THROWS_AS(walecki_path_decomposition(4, {{0, 1}}), precondition_error);
    CHECK_THROWS_AS(walecki_path_decomposition(5, {{0, 1}, {2, 3}}), precondition_error);
    CHECK_THROWS_AS(walecki_path_decomposition(4, {{0, 1}, {1, 3}}), precondition_error);
}

TEST_CASE("lifting hamilton decompositions") {
    // K_5: two cycles lift to two cycles of the 4-regular order-20 truncation
    HamiltonDecomposition k5 = walecki_cycle_decomposition(5);
    HamiltonDecomposition lifted = hamilton_decompose_truncation(complete_graph(5), k5);
    Truncation t5 = complete_truncation(complete_graph(5));
    CHECK(lifted.cycles.size() == 2);
    CHECK_FALSE(lifted.matching.has_value());
    CHECK(is_valid_hamilton_decomposition(t5.y, lifted));
    CHECK(t5.y.size() == 40);

    // K_4: one cycle plus a perfect matching lifts to the truncated tetrahedron
    auto hd4 = find_hamilton_decomposition(complete_graph(4));
    REQUIRE(hd4.has_value());
    REQUIRE(hd4->matching.has_value());
    HamiltonDecomposition l4 = hamilton_decompose_truncation(complete_graph(4), *hd4);
    CHECK(is_valid_hamilton_decomposition(complete_truncation(complete_graph(4)).y, l4));
    REQUIRE(l4.matching.has_value());

    // C_n lifts to the doubled cycle itself
    auto hdc = find_hamilton_decomposition(cycle_graph(6));
    REQUIRE(hdc.has_value());
    HamiltonDecomposition lc = hamilton_decompose_truncation(cycle_graph(6), *hdc);
    CHECK(lc.cycles.size() == 1);
    CHECK(is_hamilton_cycle(complete_truncation(cycle_graph(6)).y, lc.cycles[0]));

    // invalid input decompositions are rejected
    HamiltonDecomposition junk;
    CHECK_THROWS_AS(hamilton_decompose_truncation(complete_graph(5), junk), precondition_error);
}

TEST_CASE("find_hamilton_decomposition") {
    auto q3 = find_hamilton_decomposition(hypercube_q3());
    REQUIRE(q3.has_value());
    CHECK(q3->cycles.size() == 1);
    REQUIRE(q3->matching.has_value());
    CHECK(is_valid_hamilton_decomposition(hypercube_q3(), *q3));

    CHECK_FALSE(find_hamilton_decomposition(petersen_graph()).has_value());
}
