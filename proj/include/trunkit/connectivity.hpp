#ifndef TRUNKIT_CONNECTIVITY_HPP
#define TRUNKIT_CONNECTIVITY_HPP

#include <vector>

#include "trunkit/multigraph.hpp"
#include "trunkit/report.hpp"
#include "trunkit/truncation.hpp"

namespace trunkit {

// One vertex per matching edge, labeled with its 2-set of endpoint labels;
// adjacency iff the label sets intersect (the line graph of X when X is
// loopless).
struct HatGraph {
    Multigraph graph;                          // vertex i = matching edge i
    std::vector<std::pair<int, int>> labels;   // label 2-set per hat vertex (lo, hi)
};

HatGraph hat_graph(const LabeledMatching& lm);

// Spanning subgraph of the hat graph: {a,b} present iff some edge of Y joins
// a vertex of matching edge a to a vertex of matching edge b. Computed from
// Y's edge list and cluster map only.
Multigraph project(const Truncation& t);

// Thm: Y is connected iff the projection is connected.
VerificationReport check_connectedness_theorem(const Truncation& t);

// A truncation realizing a spanning tree of the hat graph; the result is a
// tree of order 2|E(X)|. Requires connected X.
Truncation spanning_tree_truncation(const Multigraph& x);

}  // namespace trunkit

#endif
