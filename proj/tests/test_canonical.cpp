#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "trunkit/canonical.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/errors.hpp"

using namespace trunkit;

TEST_CASE("relabeled graphs share the form") {
    Multigraph k3 = complete_graph(3);
    Multigraph k3r(3);
    k3r.add_edge(2, 1);
    k3r.add_edge(0, 2);
    k3r.add_edge(1, 0);
    CHECK(canonical_form(k3) == canonical_form(k3r));
    CHECK(isomorphic(k3, k3r));
}

TEST_CASE("different structures differ") {
    Multigraph two_triangles(6);
    for (int i = 0; i < 3; i++) two_triangles.add_edge(i, (i + 1) % 3);
    for (int i = 0; i < 3; i++) two_triangles.add_edge(3 + i, 3 + (i + 1) % 3);
    CHECK(canonical_form(cycle_graph(6)) != canonical_form(two_triangles));
    CHECK_FALSE(isomorphic(complete_multigraph(2, 3), path_graph(4)));
    // multiplicities matter
    CHECK(canonical_form(complete_multigraph(2, 2)) != canonical_form(complete_multigraph(2, 3)));
    // loops matter
    Multigraph with_loop(2);
    with_loop.add_edge(0, 1);
    with_loop.add_edge(0, 0);
    Multigraph with_parallel(2);
    with_parallel.add_edge(0, 1);
    with_parallel.add_edge(0, 1);
    CHECK(canonical_form(with_loop) != canonical_form(with_parallel));
}

TEST_CASE("invariant under 100 seeded relabelings per catalog graph") {
    for (const auto& entry : catalog()) {
        CanonicalForm base = canonical_form(entry.graph);
        for (std::uint64_t seed = 0; seed < 100; seed++) {
            Multigraph r = testsupport::random_relabel(entry.graph, seed);
            CHECK(canonical_form(r) == base);
        }
    }
}

TEST_CASE("non-isomorphic pairs with equal degree sequences split") {
    // C_6 vs 2 C_3: both 2-regular on 6 vertices
    Multigraph two_triangles(6);
    for (int i = 0; i < 3; i++) two_triangles.add_edge(i, (i + 1) % 3);
    for (int i = 0; i < 3; i++) two_triangles.add_edge(3 + i, 3 + (i + 1) % 3);
    CHECK_FALSE(isomorphic(cycle_graph(6), two_triangles));
    // K_{3,3} vs prism: both cubic on 6 vertices
    CHECK_FALSE(isomorphic(complete_bipartite(3, 3), prism_graph(3)));
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(canonical_form(Multigraph(17)), cap_exceeded);
    CHECK(canonical_form(cycle_graph(16)) == canonical_form(testsupport::random_relabel(cycle_graph(16), 7)));
}

TEST_CASE("highly symmetric graphs at the cap") {
    // these explode a naive tie search; the sibling-symmetry prune keeps them flat
    for (std::uint64_t seed = 1; seed <= 5; seed++) {
        CHECK(canonical_form(complete_graph(16)) ==
              canonical_form(testsupport::random_relabel(complete_graph(16), seed)));
        CHECK(canonical_form(complete_bipartite(8, 8)) ==
              canonical_form(testsupport::random_relabel(complete_bipartite(8, 8), seed)));
        CHECK(canonical_form(complete_multigraph(12, 2)) ==
              canonical_form(testsupport::random_relabel(complete_multigraph(12, 2), seed)));
    }
    CHECK(canonical_form(complete_graph(16)) != canonical_form(complete_bipartite(8, 8)));
    // cocktail party graph K_{2,2,2,2}: uniform-looking but not complete
    Multigraph cp(8);
    for (int u = 0; u < 8; u++)
        for (int v = u + 1; v < 8; v++)
            if (u / 2 != v / 2) cp.add_edge(u, v);
    for (std::uint64_t seed = 1; seed <= 5; seed++)
        CHECK(canonical_form(cp) == canonical_form(testsupport::random_relabel(cp, seed)));
    CHECK(canonical_form(cp) != canonical_form(complete_graph(8)));
}
