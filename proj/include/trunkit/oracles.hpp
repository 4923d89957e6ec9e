#ifndef TRUNKIT_ORACLES_HPP
#define TRUNKIT_ORACLES_HPP

#include <optional>
#include <vector>

#include "trunkit/caps.hpp"
#include "trunkit/multigraph.hpp"

namespace trunkit {

// Minimum edge cut size, Menger via max-flow with parallel edges as
// capacity = multiplicity. 0 iff disconnected. Requires order >= 2.
int edge_connectivity(const Multigraph& g);

// Minimum vertex cut size via vertex-split max-flow over non-adjacent pairs;
// order-1 by convention when the simplification is complete. Requires order >= 2.
int vertex_connectivity(const Multigraph& g);

// All perfect matchings as sorted edge-id sets, in lexicographic order.
// Odd order (or any uncoverable graph) yields an empty list. Loops never
// participate.
std::vector<std::vector<int>> enumerate_perfect_matchings(const Multigraph& g);

// Closed trail covering each edge exactly once (Hierholzer), present iff the
// graph is connected apart from isolated vertices and every valency is even.
// An edgeless graph gets the trivial closed walk at vertex 0 (absent if order 0).
std::optional<Walk> euler_tour(const Multigraph& g);

// Euler tour that starts at v along edge `first` and re-enters v along edge
// `last`, found by exhaustive trail search. Both edges must be incident with v.
std::optional<Walk> euler_tour_through(const Multigraph& g, int first, int last, int v);

// Exact Hamilton oracles (exhaustive backtracking with connectivity and
// valency pruning; an absent answer is search-certified). Order cap applies.
std::optional<Walk> hamilton_cycle(const Multigraph& g, SearchControl* ctl = nullptr);
std::optional<Walk> hamilton_path(const Multigraph& g, int s, int t, SearchControl* ctl = nullptr);

}  // namespace trunkit

#endif
