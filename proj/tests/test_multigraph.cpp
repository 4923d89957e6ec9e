#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "trunkit/caps.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/multigraph.hpp"

using namespace trunkit;

TEST_CASE("valency counts loops twice") {
    Multigraph g(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    CHECK(g.valency(0) == 3);
    CHECK(g.valency(1) == 1);
    CHECK(g.size() == 2);
}

TEST_CASE("components") {
    Multigraph edgeless(3);
    CHECK(components(edgeless).size() == 3);

    CHECK(components(cycle_graph(6)).size() == 1);

    // two disjoint simple edges on 4 vertices
    Multigraph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    auto blocks = components(two_edges);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0, 1});
    CHECK(blocks[1] == std::vector<int>{2, 3});
}

TEST_CASE("multiplicity and simplicity") {
    const Multigraph& g = catalog_graph("3k2");
    CHECK(g.order() == 2);
    CHECK(g.size() == 3);
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.has_parallel_edges());
    CHECK_FALSE(g.is_simple());
    CHECK(g.simplified().size() == 1);
}

TEST_CASE("walk validation") {
    Multigraph g = cycle_graph(4);
    Walk w{{0, 1, 2, 3, 0}, {0, 1, 2, 3}, true};
    CHECK(is_valid_walk(g, w));
    CHECK(is_trail(g, w));
    CHECK(is_euler_tour(g, w));
    CHECK(is_hamilton_cycle(g, w));

    Walk bad{{0, 2}, {0}, false};
    CHECK_FALSE(is_valid_walk(g, bad));

    Walk repeat{{0, 1, 0}, {0, 0}, true};
    CHECK(is_valid_walk(g, repeat));
    CHECK_FALSE(is_trail(g, repeat));
}

TEST_CASE("cap override parsing") {
    setenv("TRUNKIT_CAP_OVERRIDE", "48", 1);
    trunkit::SearchCaps c = trunkit::caps_from_env();
    CHECK(c.hamilton_order == 48);
    CHECK(c.chromatic_edges == 50);  // never lowered
    CHECK(c.canonical_order == 48);

    setenv("TRUNKIT_CAP_OVERRIDE", "hamilton=64,eulersub=30", 1);
    c = trunkit::caps_from_env();
    CHECK(c.hamilton_order == 64);
    CHECK(c.euler_subgraph_edges == 30);
    CHECK(c.canonical_order == 16);
    unsetenv("TRUNKIT_CAP_OVERRIDE");
}

TEST_CASE("catalog shapes") {
    CHECK(catalog_graph("petersen").order() == 10);
    CHECK(catalog_graph("petersen").size() == 15);
    CHECK(catalog_graph("petersen").is_regular());
    CHECK(catalog_graph("q3").size() == 12);
    CHECK(catalog_graph("octahedron").valency(0) == 4);
    CHECK(catalog_graph("prism").size() == 9);
    CHECK(catalog_graph("p4k2").order() == 8);
    CHECK(catalog_graph("p4k2").size() == 10);
    CHECK(catalog_names().size() == 19);
}
