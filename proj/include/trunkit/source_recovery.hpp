#ifndef TRUNKIT_SOURCE_RECOVERY_HPP
#define TRUNKIT_SOURCE_RECOVERY_HPP

#include <optional>
#include <vector>

#include "trunkit/multigraph.hpp"

namespace trunkit {

// Witness that Y is a generalized truncation: the matching used, the
// component partition of Y minus the matching, the grouping of components
// into source vertices, and the recovered multigraph. Contraction of the
// blocks reproduces `recovered` exactly.
struct SourceCertificate {
    std::vector<int> matching;                 // y edge ids, sorted
    std::vector<std::vector<int>> component_partition;
    std::vector<std::vector<int>> blocks;      // component indices per source vertex
    Multigraph recovered;
};

// Is Y a generalized truncation of some reflexive multigraph: a perfect
// matching M with Y minus M simple. Returns the first witness matching.
std::optional<std::vector<int>> is_truncation_of_reflexive(const Multigraph& y);

// All perfect matchings M of the graph Y such that no M-edge has both ends
// in one component of Y minus M, lexicographic by sorted edge-id lists.
std::vector<std::vector<int>> isolating_perfect_matchings(const Multigraph& y);

// Steps 2-3: contract each component of Y minus M and drop the loops.
SourceCertificate contract_to_source(const Multigraph& y, const std::vector<int>& matching);

// Contract with a prescribed grouping of components into blocks (no M-edge
// may be internal to a block).
SourceCertificate contract_with_blocks(const Multigraph& y, const std::vector<int>& matching,
                                       const std::vector<std::vector<int>>& blocks);

// Sources deduplicated up to isomorphism. `all_compared` is false when some
// recovered source exceeded the canonical-form cap and was returned
// uncompared.
struct SourceSet {
    std::vector<SourceCertificate> representatives;
    int matching_count = 0;   // isolating matchings found (raw count)
    int certificate_count = 0;  // certificates before isomorphism dedup
    bool all_compared = true;
};

// Finest sources: one per isolating perfect matching, isomorphism-deduped.
SourceSet minimal_sources(const Multigraph& y);

// All sources obtainable from the certificate's matching by grouping
// components into blocks with no internal matching edge (Lemma-style
// amalgamations); includes the minimal one.
SourceSet coarsened_sources(const Multigraph& y, const SourceCertificate& cert);

// minimal_sources filtered to simple recovered graphs (at most one matching
// edge between each pair of components).
SourceSet graph_sources(const Multigraph& y);

// True iff Y has exactly one isolating perfect matching and every pair of
// components of Y minus M is joined by at least one M-edge; then the source
// is unique.
bool unique_source_certificate(const Multigraph& y);

}  // namespace trunkit

#endif
