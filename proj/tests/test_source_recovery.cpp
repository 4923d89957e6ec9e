#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunkit/canonical.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"
#include "trunkit/source_recovery.hpp"
#include "trunkit/truncation.hpp"
#include "trunkit/verify.hpp"

using namespace trunkit;

TEST_CASE("is_truncation_of_reflexive") {
    CHECK(is_truncation_of_reflexive(cycle_graph(4)).has_value());
    CHECK_FALSE(is_truncation_of_reflexive(complete_graph(3)).has_value());  // odd order
    CHECK_FALSE(is_truncation_of_reflexive(complete_multigraph(2, 3)).has_value());
    // doubled edge: removing either copy leaves a single edge, a graph
    CHECK(is_truncation_of_reflexive(complete_multigraph(2, 2)).has_value());
}

TEST_CASE("isolating perfect matchings") {
    CHECK(isolating_perfect_matchings(cycle_graph(4)).size() == 2);
    // C_6: both perfect matchings leave three disjoint edges, so both isolate
    CHECK(isolating_perfect_matchings(cycle_graph(6)).size() == 2);
    // K_4: Y minus any perfect matching is a connected 4-cycle
    CHECK(isolating_perfect_matchings(complete_graph(4)).empty());
    // prism: only the rung matching isolates
    auto pm = isolating_perfect_matchings(prism_graph(3));
    REQUIRE(pm.size() == 1);
}

TEST_CASE("contract_to_source worked examples") {
    // prism with the rung matching gives 3K_2
    auto pm = isolating_perfect_matchings(prism_graph(3));
    SourceCertificate cert = contract_to_source(prism_graph(3), pm[0]);
    CHECK(isomorphic(cert.recovered, complete_multigraph(2, 3)));
    CHECK(cert.component_partition.size() == 2);

    // C_4 with either matching gives 2K_2
    for (const auto& m : isolating_perfect_matchings(cycle_graph(4)))
        CHECK(isomorphic(contract_to_source(cycle_graph(4), m).recovered,
                         complete_multigraph(2, 2)));

    // P_4 x K_2: one matching gives 4K_2 (a quadrupled edge), another the
    // multipath 2P_3 (P_3 with doubled edges)
    Multigraph pp = path_prism(4);
    Multigraph four_k2 = complete_multigraph(2, 4);
    Multigraph two_p3(3);
    two_p3.add_edge(0, 1);
    two_p3.add_edge(0, 1);
    two_p3.add_edge(1, 2);
    two_p3.add_edge(1, 2);
    bool saw_4k2 = false, saw_2p3 = false;
    for (const auto& m : isolating_perfect_matchings(pp)) {
        const Multigraph& rec = contract_to_source(pp, m).recovered;
        if (isomorphic(rec, four_k2)) saw_4k2 = true;
        if (isomorphic(rec, two_p3)) saw_2p3 = true;
    }
    CHECK(saw_4k2);
    CHECK(saw_2p3);

    // a non-isolating matching is rejected
    auto all = enumerate_perfect_matchings(complete_graph(4));
    CHECK_THROWS_AS(contract_to_source(complete_graph(4), all[0]), precondition_error);
}

TEST_CASE("minimal_sources") {
    SourceSet prism_sources = minimal_sources(prism_graph(3));
    CHECK(prism_sources.matching_count == 1);
    REQUIRE(prism_sources.representatives.size() == 1);
    CHECK(isomorphic(prism_sources.representatives[0].recovered, complete_multigraph(2, 3)));

    SourceSet pp = minimal_sources(path_prism(4));
    CHECK(pp.representatives.size() == 2);

    SourceSet k4 = minimal_sources(complete_graph(4));
    CHECK(k4.representatives.empty());
    CHECK(k4.matching_count == 0);

    // regression: the Petersen graph's six perfect matchings all isolate and
    // all contract to the doubled... quintupled edge 5K_2
    SourceSet pet = minimal_sources(petersen_graph());
    CHECK(pet.matching_count == 6);
    REQUIRE(pet.representatives.size() == 1);
    CHECK(isomorphic(pet.representatives[0].recovered, complete_multigraph(2, 5)));

    // every recovered source is loopless without isolated vertices
    for (const auto& y_name : {"prism", "p4k2", "c4", "c6", "petersen"}) {
        for (const auto& cert : minimal_sources(catalog_graph(y_name)).representatives) {
            CHECK_FALSE(cert.recovered.has_loops());
            CHECK_FALSE(cert.recovered.has_isolated_vertex());
        }
    }
}

TEST_CASE("coarsened_sources") {
    // two disjoint 4-cycles: amalgamations shrink the source
    Multigraph two_c4(8);
    for (int i = 0; i < 4; i++) two_c4.add_edge(i, (i + 1) % 4);
    for (int i = 0; i < 4; i++) two_c4.add_edge(4 + i, 4 + (i + 1) % 4);
    SourceSet ms = minimal_sources(two_c4);
    REQUIRE_FALSE(ms.representatives.empty());
    SourceSet co = coarsened_sources(two_c4, ms.representatives[0]);
    CHECK(co.representatives.size() > 1);
    bool has_minimal = false, has_smaller = false;
    int minimal_order = ms.representatives[0].recovered.order();
    for (const auto& cert : co.representatives) {
        if (cert.recovered.order() == minimal_order) has_minimal = true;
        if (cert.recovered.order() < minimal_order) has_smaller = true;
        CHECK_FALSE(cert.recovered.has_loops());
    }
    CHECK(has_minimal);
    CHECK(has_smaller);

    // prism: every pair of components is matched, so no legal coarsening
    SourceSet prism_min = minimal_sources(prism_graph(3));
    SourceSet prism_co = coarsened_sources(prism_graph(3), prism_min.representatives[0]);
    CHECK(prism_co.representatives.size() == 1);

    // perfect matching graphs coarsen down to fewer vertices (m <= 4)
    for (int m = 1; m <= 4; m++) {
        Multigraph pm_graph(2 * m);
        for (int i = 0; i < m; i++) pm_graph.add_edge(2 * i, 2 * i + 1);
        SourceSet base = minimal_sources(pm_graph);
        REQUIRE(base.representatives.size() == 1);
        SourceSet co2 = coarsened_sources(pm_graph, base.representatives[0]);
        bool smaller = false;
        for (const auto& cert : co2.representatives)
            if (cert.recovered.order() < 2 * m) smaller = true;
        CHECK((m == 1 || smaller));
    }
}

TEST_CASE("graph_sources") {
    CHECK(graph_sources(cycle_graph(4)).representatives.empty());   // 2K_2 is not simple
    CHECK(graph_sources(prism_graph(3)).representatives.empty());   // 3K_2 is not simple
    SourceSet k4 = graph_sources(complete_truncation(complete_graph(4)).y);
    REQUIRE(k4.representatives.size() == 1);
    CHECK(isomorphic(k4.representatives[0].recovered, complete_graph(4)));
}

TEST_CASE("unique_source_certificate") {
    CHECK(unique_source_certificate(prism_graph(3)));
    CHECK_FALSE(unique_source_certificate(cycle_graph(4)));  // sufficient, not necessary
    CHECK(minimal_sources(cycle_graph(4)).representatives.size() == 1);
    CHECK_FALSE(unique_source_certificate(path_prism(4)));
}

TEST_CASE("round trip across builders") {
    for (const auto& entry : catalog()) {
        if (entry.graph.has_loops()) continue;
        CHECK(roundtrip_recovers_source(complete_truncation(entry.graph)));
        CHECK(roundtrip_recovers_source(spanning_path_truncation(entry.graph)));
        for (std::uint64_t seed = 0; seed < 3; seed++)
            CHECK(roundtrip_recovers_source(random_truncation(entry.graph, 0.5, seed)));
    }
}
