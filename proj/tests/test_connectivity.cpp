#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunkit/canonical.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/connectivity.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"

using namespace trunkit;

TEST_CASE("hat graph is the line graph for loopless sources") {
    CHECK(isomorphic(hat_graph(excise(complete_graph(3))).graph, complete_graph(3)));
    CHECK(isomorphic(hat_graph(excise(star_graph(3))).graph, complete_graph(3)));
    CHECK(isomorphic(hat_graph(excise(path_graph(4))).graph, path_graph(3)));
    // parallel edges share both labels and are adjacent
    CHECK(isomorphic(hat_graph(excise(complete_multigraph(2, 3))).graph, complete_graph(3)));
}

TEST_CASE("projection") {
    // complete truncation projects onto the full hat graph
    Truncation t = complete_truncation(complete_graph(4));
    Multigraph hat = hat_graph(t.matching).graph;
    Multigraph proj = project(t);
    CHECK(proj.order() == hat.order());
    CHECK(proj.size() == hat.size());

    // edgeless constituents project to nothing
    Truncation empty = random_truncation(complete_graph(4), 0.0, 0);
    CHECK(project(empty).size() == 0);

    // spanning-path constituents of K_4: four triangle-spanning paths
    Truncation paths = spanning_path_truncation(complete_graph(4));
    Multigraph pp = project(paths);
    CHECK(pp.order() == 6);
    CHECK(pp.size() == 8);  // 4 clusters contribute a 2-edge path each
    for (const Edge& e : pp.edges()) CHECK(hat.adjacent(e.u, e.v));
}

TEST_CASE("connectedness theorem") {
    CHECK(check_connectedness_theorem(complete_truncation(complete_graph(4))).pass);
    CHECK(check_connectedness_theorem(complete_truncation(complete_graph(4))).lhs);

    Truncation empty = random_truncation(complete_graph(4), 0.0, 0);
    VerificationReport r = check_connectedness_theorem(empty);
    CHECK(r.pass);
    CHECK_FALSE(r.lhs);  // both sides disconnected
    CHECK_FALSE(r.rhs);

    for (const auto& entry : catalog()) {
        if (entry.graph.has_loops()) continue;
        for (std::uint64_t seed = 0; seed < 8; seed++) {
            double density = 0.15 * static_cast<double>(seed % 7);
            CHECK(check_connectedness_theorem(
                      random_truncation(entry.graph, density, seed))
                      .pass);
        }
    }
}

TEST_CASE("edge connectivity never rises") {
    for (const auto& entry : catalog()) {
        if (entry.graph.has_loops() || entry.graph.order() < 2) continue;
        int kx = edge_connectivity(entry.graph);
        for (std::uint64_t seed = 0; seed < 4; seed++) {
            Truncation t = random_truncation(entry.graph, 0.3 * static_cast<double>(seed % 4), seed);
            CHECK(edge_connectivity(t.y) <= kx);
        }
    }
}

TEST_CASE("complete truncations attain the source connectivity") {
    for (const std::string name : {"k4", "q3", "prism"}) {
        const Multigraph& x = catalog_graph(name);
        Truncation t = complete_truncation(x);
        CHECK(edge_connectivity(t.y) == edge_connectivity(x));
        CHECK(vertex_connectivity(t.y) == vertex_connectivity(x));
    }
}

TEST_CASE("one missing constituent edge breaks k-edge-connectivity") {
    const Multigraph& x = catalog_graph("k4");
    int k = x.valency(0);
    Truncation t = complete_truncation(x);
    for (int e = static_cast<int>(t.matching_edges.size()); e < t.y.size(); e++)
        CHECK(edge_connectivity(t.y.without_edge(e)) < k);
}

TEST_CASE("spanning tree truncation") {
    Truncation t3 = spanning_tree_truncation(complete_graph(3));
    CHECK(t3.y.order() == 6);
    CHECK(t3.y.size() == 5);
    CHECK(is_connected(t3.y));

    // P_3 forces the path P_4
    Truncation tp = spanning_tree_truncation(path_graph(3));
    CHECK(isomorphic(tp.y, path_graph(4)));

    Truncation t4 = spanning_tree_truncation(complete_graph(4));
    CHECK(t4.y.order() == 12);
    CHECK(t4.y.size() == 11);
    CHECK(is_connected(t4.y));

    Multigraph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(spanning_tree_truncation(disconnected), precondition_error);
}
