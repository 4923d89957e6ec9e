// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Everything is exact and deterministic; the budgets are wall-clock caps the
// criteria must comfortably beat on commodity hardware.

#include <chrono>
#include <cstdio>
#include <string>

#include "trunkit/canonical.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/coloring.hpp"
#include "trunkit/connectivity.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"
#include "trunkit/planarity.hpp"
#include "trunkit/source_recovery.hpp"
#include "trunkit/traversal.hpp"
#include "trunkit/verify.hpp"

using namespace trunkit;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds) {
    std::printf("%s  criterion %2d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds);
    if (!pass) failures++;
}

template <typename F>
void run(int criterion, const std::string& what, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note = what;
    try {
        pass = f();
    } catch (const std::exception& e) {
        note += std::string(" [exception: ") + e.what() + "]";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(criterion, note, pass, dt);
}

bool criterion1() {
    if (!isomorphic(complete_truncation(complete_graph(3)).y, cycle_graph(6))) return false;
    if (!isomorphic(complete_truncation(complete_multigraph(2, 2)).y, cycle_graph(4))) return false;
    for (int n = 3; n <= 8; n++)
        if (!isomorphic(complete_truncation(cycle_graph(n)).y, cycle_graph(2 * n))) return false;
    if (!isomorphic(complete_truncation(path_graph(3)).y, path_graph(4))) return false;
    return true;
}

bool criterion2() {
    const Multigraph& prism = catalog_graph("prism");
    SourceSet s = minimal_sources(prism);
    if (s.representatives.size() != 1) return false;
    if (!isomorphic(s.representatives[0].recovered, complete_multigraph(2, 3))) return false;
    if (!unique_source_certificate(prism)) return false;

    const Multigraph& c4 = catalog_graph("c4");
    if (isolating_perfect_matchings(c4).size() != 2) return false;
    SourceSet sc4 = minimal_sources(c4);
    if (sc4.representatives.size() != 1) return false;
    if (!isomorphic(sc4.representatives[0].recovered, complete_multigraph(2, 2))) return false;

    const Multigraph& pp = catalog_graph("p4k2");
    SourceSet spp = minimal_sources(pp);
    if (spp.representatives.size() != 2) return false;
    Multigraph four_k2 = complete_multigraph(2, 4);  // quadrupled edge
    Multigraph two_p3(3);                            // multipath: doubled P_3
    two_p3.add_edge(0, 1);
    two_p3.add_edge(0, 1);
    two_p3.add_edge(1, 2);
    two_p3.add_edge(1, 2);
    bool f1 = false, f2 = false;
    for (const auto& cert : spp.representatives) {
        if (isomorphic(cert.recovered, four_k2)) f1 = true;
        if (isomorphic(cert.recovered, two_p3)) f2 = true;
    }
    return f1 && f2;
}

bool criterion3() {
    int cases = 0;
    for (const auto& entry : catalog())
        for (std::uint64_t seed = 0; seed < 27; seed++) {
            double density = 0.25 * static_cast<double>(seed % 5);
            if (density > 1.0) density = 1.0;
            Truncation t = random_truncation(entry.graph, density, seed);
            if (!roundtrip_recovers_source(t)) return false;
            cases++;
        }
    std::printf("      round trips checked: %d\n", cases);
    return cases >= 500;
}

bool criterion4() {
    SuiteReport r = run_suite("conn", 12);
    for (const auto& c : r.checks)
        if (!c.pass) std::printf("      failing: %s %s: %s\n", c.check.c_str(), c.instance.c_str(), c.details.c_str());
    return r.all_pass();
}

bool criterion5() {
    SuiteReport r = run_suite("euler", 12);
    return r.all_pass();
}

bool criterion6() {
    SuiteReport r = run_suite("ham", 1);
    bool petersen_seen = false;
    for (const auto& c : r.checks) {
        if (!c.pass)
            std::printf("      failing: %s %s\n", c.check.c_str(), c.instance.c_str());
        if (c.instance == "petersen") petersen_seen = true;
    }
    return r.all_pass() && petersen_seen;
}

bool criterion7() {
    SuiteReport r = run_suite("hamdecomp", 1);
    for (const auto& c : r.checks)
        if (!c.pass)
            std::printf("      failing: %s %s: %s\n", c.check.c_str(), c.instance.c_str(), c.details.c_str());
    return r.all_pass();
}

bool criterion8() {
    SuiteReport r = run_suite("color", 1);
    for (const auto& c : r.checks)
        if (!c.pass)
            std::printf("      failing: %s %s: %s\n", c.check.c_str(), c.instance.c_str(), c.details.c_str());
    return r.all_pass();
}

bool criterion9() {
    const Multigraph& k5 = catalog_graph("k5");
    for (int k : {3, 4}) {
        Truncation t = chromatic_index_spectrum(k5, k);
        if (!t.is_cohesive() || chromatic_index_exact(t.y) != k) return false;
    }
    for (int k : {3, 4}) {
        Truncation t = chromatic_number_spectrum(k5, k);
        if (!t.is_cohesive() || chromatic_number_exact(t.y) != k) return false;
    }
    return true;
}

bool criterion10() {
    SuiteReport r = run_suite("planar", 34);  // 6 sources x 34 seeds >= 200 trials
    bool only_verified_counterexamples = true;
    for (const auto& c : r.checks)
        if (!c.pass) {
            std::printf("      failing: %s %s: %s\n", c.check.c_str(), c.instance.c_str(),
                        c.details.c_str());
            if (c.check != "thm-cohesive-planarity" ||
                c.details.find("verified counterexamples") == std::string::npos ||
                c.details.find("unverified") != std::string::npos)
                only_verified_counterexamples = false;
        }
    if (!r.all_pass() && only_verified_counterexamples)
        std::printf(
            "      note: every failure above is a machine-verified counterexample to the\n"
            "      stated biconditional (a Kuratowski subdivision validated inside Y while\n"
            "      every constituent is outerplanar by independent forbidden-subdivision\n"
            "      search). The sound direction (planar Y => outerplanar constituents) holds\n"
            "      in all trials; the converse fails for sources with valencies above 3,\n"
            "      where a constituent's outerplanar boundary order can clash with the\n"
            "      rotation the matching forces. This check is red by mathematical necessity,\n"
            "      not by implementation defect.\n");
    return r.all_pass();
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    run(1, "named identities: TR(K_3)=C_6, TR(2K_2)=C_4, TR(C_n)=C_2n, TR(P_3)=P_4", criterion1);
    run(2, "source recovery: prism {3K_2} unique, C_4 two matchings one class, P_4xK_2 two classes",
        criterion2);
    run(3, "round-trip property over catalog x 27 seeds (>= 500 cases)", criterion3);
    run(4, "connectivity: kappa' bound, attained equality, Cor 3.7 deletions, matching cuts",
        criterion4);
    run(5, "eulerian biconditional over catalog x {matching, complete, random}", criterion5);
    run(6, "hamiltonicity biconditional incl. exhaustive non-hamiltonicity of TR(Petersen)",
        criterion6);
    run(7, "hamilton decompositions: Walecki cycles/paths, lifted decompositions, pairings",
        criterion7);
    run(8, "colorings: class-I construction, 1-factorizations, chi'(TR(Petersen))=4, chi=d",
        criterion8);
    run(9, "spectrum constructors: K_5 chi' and chi exact for k in {3,4}", criterion9);
    run(10, "planarity: 200-seed biconditional sweep, Figure-1 regression, Lemma 6.1", criterion10);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %d/10 criteria passed in %.1fs\n", failures == 0 ? "ALL PASS" : "FAILURES",
                10 - failures, dt);
    return failures == 0 ? 0 : 1;
}
