#ifndef TRUNKIT_PLANARITY_HPP
#define TRUNKIT_PLANARITY_HPP

#include <optional>

#include "trunkit/multigraph.hpp"
#include "trunkit/report.hpp"
#include "trunkit/subdivision.hpp"
#include "trunkit/truncation.hpp"

namespace trunkit {

// Exact planarity decision (face-by-face embedding over the biconnected
// components). Requires a simple graph.
bool is_planar(const Multigraph& g);

struct PlanarityResult {
    bool planar = false;
    // On a non-planar graph of order <= 20: a K5 or K33 subdivision witness,
    // obtained by shrinking to an edge-minimal non-planar subgraph and
    // running find_subdivision on it.
    std::optional<Subdivision> witness;
};

PlanarityResult is_planar_with_witness(const Multigraph& g);

// Kuratowski witness for a non-planar graph of any desk-scale order:
// deletes edges while non-planarity persists, leaving exactly a K5 or K33
// subdivision, then labels it with find_subdivision. nullopt on planar input.
std::optional<Subdivision> kuratowski_witness(const Multigraph& g);

// Outerplanar iff planar after joining an apex vertex to every vertex.
bool is_outerplanar(const Multigraph& g);

// Planar cohesive truncation of a 2-connected planar X iff every constituent
// is outerplanar.
VerificationReport check_cohesive_planarity_theorem(const Truncation& t);

// Non-planar X forces every cohesive truncation non-planar.
VerificationReport check_nonplanar_lemma(const Truncation& t);

}  // namespace trunkit

#endif
