#ifndef TRUNKIT_SUBDIVISION_HPP
#define TRUNKIT_SUBDIVISION_HPP

#include <optional>
#include <vector>

#include "trunkit/multigraph.hpp"

namespace trunkit {

enum class SubdivisionPattern { K4, K23, K5, K33 };

// Branch vertices plus one internally disjoint path per pattern edge; paths
// include both branch endpoints and avoid every other branch vertex.
struct Subdivision {
    SubdivisionPattern pattern;
    std::vector<int> branch_vertices;            // in pattern vertex order
    std::vector<std::pair<int, int>> pattern_edges;  // indices into branch_vertices
    std::vector<std::vector<int>> paths;         // one per pattern edge
};

// Exhaustive branch-vertex search; absence is search-certified. Requires a
// simple graph.
std::optional<Subdivision> find_subdivision(const Multigraph& g, SubdivisionPattern p);

// Checks the witness against the host graph.
bool is_valid_subdivision(const Multigraph& g, const Subdivision& s);

}  // namespace trunkit

#endif
