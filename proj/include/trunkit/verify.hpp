#ifndef TRUNKIT_VERIFY_HPP
#define TRUNKIT_VERIFY_HPP

#include <string>
#include <vector>

#include "trunkit/multigraph.hpp"
#include "trunkit/report.hpp"
#include "trunkit/truncation.hpp"

namespace trunkit {

// Theorem-check suites over the named catalog. `seeds` scales the random
// sweeps (seeded, deterministic).
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, int seeds);
std::vector<SuiteReport> run_suites(const std::string& suite_or_all, int seeds);

// The Figure-1-style construction: a planar cohesive truncation of a 1-cut
// planar source carrying a K_4 constituent (why 2-connectivity is needed in
// the planarity biconditional). Source is the bowtie: two triangles sharing
// vertex 0.
Truncation figure1_truncation();

// Rebuild-and-contract round trip: group the components of Y minus F(M) by
// cluster label, contract, compare with the source up to isomorphism.
bool roundtrip_recovers_source(const Truncation& t);

}  // namespace trunkit

#endif
