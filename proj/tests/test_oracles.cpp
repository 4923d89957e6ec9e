#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"

using namespace trunkit;

TEST_CASE("edge connectivity") {
    CHECK(edge_connectivity(complete_graph(4)) == 3);
    CHECK(edge_connectivity(cycle_graph(6)) == 2);
    // brute-force over all edge subsets of size <= 3 confirms the Petersen value
    CHECK(testsupport::brute_edge_connectivity(petersen_graph(), 3) == 3);
    CHECK(edge_connectivity(petersen_graph()) == 3);
    // parallel edges count with multiplicity
    CHECK(edge_connectivity(complete_multigraph(2, 3)) == 3);
    Multigraph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK(edge_connectivity(disconnected) == 0);
    CHECK_THROWS_AS(edge_connectivity(Multigraph(1)), precondition_error);
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete_graph(4)) == 3);  // complete-graph convention
    CHECK(vertex_connectivity(path_graph(4)) == 1);
    // brute-force over vertex subsets of size <= 2 finds no prism cut
    CHECK(testsupport::brute_vertex_connectivity(prism_graph(3), 2) == 3);
    CHECK(vertex_connectivity(prism_graph(3)) == 3);
    CHECK(vertex_connectivity(petersen_graph()) == 3);
}

TEST_CASE("whitney chain over the catalog") {
    for (const auto& entry : catalog()) {
        if (entry.graph.order() < 2) continue;
        int ec = edge_connectivity(entry.graph);
        int vc = vertex_connectivity(entry.graph);
        CHECK(vc <= ec);
        CHECK(ec <= entry.graph.min_valency());
    }
}

TEST_CASE("perfect matching enumeration") {
    CHECK(enumerate_perfect_matchings(cycle_graph(4)).size() == 2);
    CHECK(enumerate_perfect_matchings(complete_graph(4)).size() == 3);
    CHECK(enumerate_perfect_matchings(cycle_graph(6)).size() == 2);
    CHECK(enumerate_perfect_matchings(cycle_graph(5)).empty());  // odd order
    // parallel edges give distinct matchings by edge id
    CHECK(enumerate_perfect_matchings(complete_multigraph(2, 3)).size() == 3);

    // counts agree with the permanent-style recursion on order <= 10
    for (const auto& entry : catalog()) {
        if (entry.graph.order() > 10) continue;
        auto ms = enumerate_perfect_matchings(entry.graph);
        CHECK(static_cast<long long>(ms.size()) == testsupport::pm_count(entry.graph));
        for (const auto& m : ms) {
            std::vector<char> covered(static_cast<size_t>(entry.graph.order()), 0);
            for (int e : m) {
                const Edge& ed = entry.graph.edge(e);
                CHECK_FALSE(ed.is_loop());
                CHECK_FALSE(covered[static_cast<size_t>(ed.u)]);
                CHECK_FALSE(covered[static_cast<size_t>(ed.v)]);
                covered[static_cast<size_t>(ed.u)] = covered[static_cast<size_t>(ed.v)] = 1;
            }
            for (char c : covered) CHECK(c == 1);
        }
        // lexicographic, duplicate-free
        for (size_t i = 0; i + 1 < ms.size(); i++) CHECK(ms[i] < ms[i + 1]);
    }
}

TEST_CASE("euler tours") {
    auto t5 = euler_tour(cycle_graph(5));
    REQUIRE(t5.has_value());
    CHECK(is_euler_tour(cycle_graph(5), *t5));

    CHECK_FALSE(euler_tour(complete_graph(4)).has_value());  // odd valencies

    auto tk5 = euler_tour(complete_graph(5));
    REQUIRE(tk5.has_value());
    CHECK(tk5->length() == 10);
    CHECK(is_euler_tour(complete_graph(5), *tk5));

    // loops are covered once and keep parity even
    Multigraph loopy(2);
    loopy.add_edge(0, 1);
    loopy.add_edge(0, 0);
    loopy.add_edge(1, 0);
    auto tl = euler_tour(loopy);
    REQUIRE(tl.has_value());
    CHECK(is_euler_tour(loopy, *tl));

    // disconnected edge sets have no tour
    Multigraph two_triangles(6);
    for (int i = 0; i < 3; i++) two_triangles.add_edge(i, (i + 1) % 3);
    for (int i = 0; i < 3; i++) two_triangles.add_edge(3 + i, 3 + (i + 1) % 3);
    CHECK_FALSE(euler_tour(two_triangles).has_value());

    // theorem: tour exists iff connected (ignoring isolated) with even valencies
    for (const auto& entry : catalog()) {
        bool even = true;
        for (int v = 0; v < entry.graph.order(); v++)
            if (entry.graph.valency(v) % 2 != 0) even = false;
        CHECK(euler_tour(entry.graph).has_value() == (even && is_connected(entry.graph)));
    }
}

TEST_CASE("euler tour through prescribed first and last edges") {
    // C_4 at vertex 0: forced tour
    Multigraph c4 = cycle_graph(4);
    auto t = euler_tour_through(c4, 0, 3, 0);
    REQUIRE(t.has_value());
    CHECK(is_euler_tour(c4, *t));
    CHECK(t->edges.front() == 0);
    CHECK(t->edges.back() == 3);

    // two triangles sharing vertex 0: first and last inside one triangle fails
    Multigraph bowtie(5);
    bowtie.add_edge(0, 1);  // e0
    bowtie.add_edge(1, 2);  // e1
    bowtie.add_edge(2, 0);  // e2
    bowtie.add_edge(0, 3);  // e3
    bowtie.add_edge(3, 4);  // e4
    bowtie.add_edge(4, 0);  // e5
    CHECK_FALSE(euler_tour_through(bowtie, 0, 2, 0).has_value());
    auto tb = euler_tour_through(bowtie, 0, 5, 0);
    REQUIRE(tb.has_value());
    CHECK(is_euler_tour(bowtie, *tb));

    // K_5: any incident first != last admits a tour
    Multigraph k5 = complete_graph(5);
    auto inc0 = k5.incidence()[0];
    for (int first : inc0)
        for (int last : inc0) {
            if (first == last) continue;
            auto tour = euler_tour_through(k5, first, last, 0);
            REQUIRE(tour.has_value());
            CHECK(is_euler_tour(k5, *tour));
            CHECK(tour->edges.front() == first);
            CHECK(tour->edges.back() == last);
            CHECK(tour->vertices.front() == 0);
            CHECK(tour->vertices.back() == 0);
        }

    CHECK_THROWS_AS(euler_tour_through(c4, 1, 3, 0), precondition_error);
}

TEST_CASE("hamilton cycle oracle") {
    auto c6 = hamilton_cycle(cycle_graph(6));
    REQUIRE(c6.has_value());
    CHECK(is_hamilton_cycle(cycle_graph(6), *c6));

    CHECK_FALSE(hamilton_cycle(petersen_graph()).has_value());  // exhaustive

    auto k4 = hamilton_cycle(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(is_hamilton_cycle(complete_graph(4), *k4));

    // multigraph: a doubled edge is a hamilton cycle on two vertices
    auto dk2 = hamilton_cycle(complete_multigraph(2, 2));
    REQUIRE(dk2.has_value());
    CHECK(is_hamilton_cycle(complete_multigraph(2, 2), *dk2));

    CHECK_FALSE(hamilton_cycle(path_graph(4)).has_value());
}

TEST_CASE("hamilton oracle caps and cancellation") {
    // order 42 exceeds the 40-vertex cap
    Multigraph big(42);
    for (int i = 0; i < 42; i++) big.add_edge(i, (i + 1) % 42);
    CHECK_THROWS_AS(hamilton_cycle(big), cap_exceeded);

    // cooperative abort surfaces as cap_exceeded
    SearchControl ctl;
    ctl.should_abort = [&] { return ctl.nodes_visited.load() > 5; };
    CHECK_THROWS_AS(hamilton_cycle(petersen_graph(), &ctl), cap_exceeded);
}

TEST_CASE("hamilton path oracle") {
    auto p = hamilton_path(complete_graph(4), 0, 3);
    REQUIRE(p.has_value());
    CHECK(is_hamilton_path(complete_graph(4), *p, 0, 3));

    CHECK_THROWS_AS(hamilton_path(complete_graph(4), 1, 1), precondition_error);

    // petersen is hamilton-connected nowhere adjacent? it is hypohamiltonian:
    // it has hamilton paths between adjacent vertices? adjacent 0-1: no
    // (classical: petersen has a hamilton path between u,v iff u,v non-adjacent)
    CHECK_FALSE(hamilton_path(petersen_graph(), 0, 1).has_value());
    CHECK(hamilton_path(petersen_graph(), 0, 7).has_value());
}
