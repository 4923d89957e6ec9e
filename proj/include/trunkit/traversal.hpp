#ifndef TRUNKIT_TRAVERSAL_HPP
#define TRUNKIT_TRAVERSAL_HPP

#include <optional>
#include <vector>

#include "trunkit/multigraph.hpp"
#include "trunkit/report.hpp"
#include "trunkit/truncation.hpp"

namespace trunkit {

// Edge-disjoint Hamilton cycles, optionally plus one perfect matching,
// together partitioning the host's edge set.
struct HamiltonDecomposition {
    std::vector<Walk> cycles;
    std::optional<std::vector<int>> matching;  // host edge ids
};

bool is_valid_hamilton_decomposition(const Multigraph& host, const HamiltonDecomposition& hd);

// Every component of Y eulerian iff X eulerian and every constituent vertex
// has odd constituent valency. Both sides computed independently (tours by
// Hierholzer). Requires connected source.
VerificationReport check_euler_theorem(const Truncation& t);

// Connected spanning even-valency sub-multigraph found by exhaustive cycle
// space enumeration, or certified absence. Edge-count cap applies.
std::optional<std::vector<int>> spanning_eulerian_subgraph(const Multigraph& x);

// Hamilton cycle of complete_truncation(x), built by expanding an Euler tour
// of a spanning eulerian subgraph; absent iff no such subgraph exists.
std::optional<Walk> hamilton_cycle_of_complete_truncation(const Multigraph& x);

// Hamilton path of a truncation of K_n (n > 3) between any two vertices,
// provided every constituent is Hamilton-connected (verified by the exact
// oracle). Follows the two-case constructive proof.
Walk hamilton_connected_path(const Truncation& t, int x, int y);

// Walecki decomposition of odd-order K_n into (n-1)/2 Hamilton cycles.
HamiltonDecomposition walecki_cycle_decomposition(int n);

// Hamilton path decomposition of K_n with prescribed endpoint pairs.
// Even n: paths.size() == n/2 and path i joins endpoint_pairs[i].
// Odd n: (n-1)/2 paths plus a matching missing exactly `distinguished`;
// the pairs must partition the other n-1 vertices.
struct PathDecomposition {
    std::vector<Walk> paths;                      // walks in complete_graph(n)
    std::vector<std::pair<int, int>> matching;    // vertex pairs (odd n only)
};
PathDecomposition walecki_path_decomposition(int n,
                                             const std::vector<std::pair<int, int>>& endpoint_pairs,
                                             int distinguished = -1);

// Lifts a Hamilton decomposition of X to one of complete_truncation(x):
// constituent clusters split by cycle passages, decomposed by Walecki paths,
// expanded cycle by cycle. Odd valency adds the perfect matching built from
// F(M)-images of X's matching plus the constituent matchings.
HamiltonDecomposition hamilton_decompose_truncation(const Multigraph& x,
                                                    const HamiltonDecomposition& hd);

// Search for a Hamilton decomposition by repeatedly extracting Hamilton
// cycles (sufficient for the regular sources used in the verification
// suites; absent when the greedy extraction gets stuck).
std::optional<HamiltonDecomposition> find_hamilton_decomposition(const Multigraph& x);

}  // namespace trunkit

#endif
