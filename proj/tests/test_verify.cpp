#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunkit/catalog.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"
#include "trunkit/planarity.hpp"
#include "trunkit/verify.hpp"

using namespace trunkit;

TEST_CASE("suite names and wiring") {
    CHECK(suite_names().size() == 7);
    CHECK_THROWS_AS(run_suite("nope", 1), precondition_error);
    CHECK(run_suites("all", 1).size() == 7);
}

TEST_CASE("source suite passes") {
    SuiteReport r = run_suite("source", 4);
    CHECK(r.all_pass());
    CHECK(r.checks.size() >= 20);
}

TEST_CASE("euler suite passes") {
    CHECK(run_suite("euler", 3).all_pass());
}

TEST_CASE("conn suite passes") {
    CHECK(run_suite("conn", 3).all_pass());
}

TEST_CASE("cohesive planarity check examples") {
    // K_3 constituents are outerplanar and the truncated tetrahedron is planar
    VerificationReport r = check_cohesive_planarity_theorem(complete_truncation(catalog_graph("k4")));
    CHECK(r.pass);
    CHECK(r.lhs);
    CHECK(r.rhs);

    // octahedron with one K_4 constituent: not outerplanar forces Y non-planar
    const Multigraph& oct = catalog_graph("octahedron");
    LabeledMatching lm = excise(oct);
    auto clusters = lm.clusters();
    ConstituentAssignment ca;
    for (int v = 0; v < oct.order(); v++) {
        int k = static_cast<int>(clusters[static_cast<size_t>(v)].size());
        Multigraph con(k);
        if (v == 0) {
            for (int i = 0; i < k; i++)
                for (int j = i + 1; j < k; j++) con.add_edge(i, j);
        } else {
            for (int i = 0; i + 1 < k; i++) con.add_edge(i, i + 1);
        }
        ca.constituents.push_back(con);
    }
    VerificationReport r2 = check_cohesive_planarity_theorem(assemble(lm, ca));
    CHECK(r2.pass);        // both sides false
    CHECK_FALSE(r2.lhs);   // Y non-planar
    CHECK_FALSE(r2.rhs);   // K_4 constituent not outerplanar

    // precondition reporting, not assertion
    VerificationReport r3 = check_cohesive_planarity_theorem(
        random_truncation(catalog_graph("k4"), 0.0, 0));
    CHECK_FALSE(r3.pass);
    CHECK(r3.details.find("precondition") != std::string::npos);
}

TEST_CASE("nonplanar lemma") {
    VerificationReport r = check_nonplanar_lemma(spanning_path_truncation(catalog_graph("k5")));
    CHECK(r.pass);
    CHECK(r.lhs);  // X non-planar
    CHECK(r.rhs);  // Y non-planar
}

TEST_CASE("figure 1 regression construction") {
    Truncation t = figure1_truncation();
    CHECK(vertex_connectivity(t.source) == 1);
    CHECK(t.is_cohesive());
    CHECK_FALSE(is_outerplanar(t.constituent(0)));
    CHECK(is_planar(t.y));
}

TEST_CASE("roundtrip helper") {
    CHECK(roundtrip_recovers_source(complete_truncation(prism_graph(3))));
}
