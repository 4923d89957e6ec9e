#ifndef TRUNKIT_COLORING_EXACT_HPP
#define TRUNKIT_COLORING_EXACT_HPP

#include <vector>

#include "trunkit/caps.hpp"
#include "trunkit/multigraph.hpp"

namespace trunkit {

// Proper edge coloring: edge id -> color index, no two incident edges alike.
struct EdgeColoring {
    std::vector<int> color;  // indexed by edge id
    int color_count = 0;
};

// Proper vertex coloring.
struct VertexColoring {
    std::vector<int> color;  // indexed by vertex
    int color_count = 0;
};

bool is_proper_edge_coloring(const Multigraph& g, const EdgeColoring& c);
bool is_proper_vertex_coloring(const Multigraph& g, const VertexColoring& c);

// Exact chromatic number by clique lower bound plus k-colorability decision
// search. Parallel edges are irrelevant; loops are rejected.
int chromatic_number_exact(const Multigraph& g, SearchControl* ctl = nullptr);
// The same search, returning a witness coloring.
VertexColoring vertex_coloring_exact(const Multigraph& g, SearchControl* ctl = nullptr);

// Exact chromatic index (branch and bound over edges with forced-move
// propagation) with a witness. Loops are rejected; parallel edges count as
// mutually incident. Edge-count cap applies.
EdgeColoring chromatic_index_exact_coloring(const Multigraph& g, SearchControl* ctl = nullptr);
int chromatic_index_exact(const Multigraph& g, SearchControl* ctl = nullptr);

// Decision form: is there a proper edge coloring with at most k colors?
bool edge_colorable_with(const Multigraph& g, int k, EdgeColoring* witness = nullptr,
                         SearchControl* ctl = nullptr);

// A maximum clique of the simplification, exact.
std::vector<int> max_clique(const Multigraph& g);

}  // namespace trunkit

#endif
