#ifndef TRUNKIT_TRUNCATION_HPP
#define TRUNKIT_TRUNCATION_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "trunkit/multigraph.hpp"

namespace trunkit {

// The excised matching: one matching edge per source edge. The matching
// vertex (e, slot) becomes vertex 2e + slot of the truncation; slot 0 carries
// the lower endpoint label (loops carry the same label twice).
struct LabeledMatching {
    int source_order = 0;
    std::vector<Edge> source_edges;   // copy of the source edge list
    std::vector<int> label;           // matching vertex id (2e+slot) -> source vertex

    int matching_vertex(int edge_id, int slot) const { return 2 * edge_id + slot; }
    int vertex_count() const { return static_cast<int>(label.size()); }

    // Matching vertices labeled v, ascending. cluster(v).size() == val(v).
    std::vector<int> cluster(int v) const;
    std::vector<std::vector<int>> clusters() const;  // indexed by source vertex
};

// Per source vertex, a simple graph on its cluster. Constituents are stored
// in cluster-local indices: vertex i of the graph is cluster(v)[i].
struct ConstituentAssignment {
    std::vector<Multigraph> constituents;  // indexed by source vertex
};

// The assembled truncation with full provenance.
struct Truncation {
    Multigraph y;
    Multigraph source;
    LabeledMatching matching;
    ConstituentAssignment assignment;
    std::vector<int> cluster_of;     // y vertex -> source vertex
    std::vector<int> matching_edges; // y edge ids of F(M), in source edge order

    bool is_matching_edge(int y_edge) const {
        return std::find(matching_edges.begin(), matching_edges.end(), y_edge) !=
               matching_edges.end();
    }
    // Constituent subgraph of y at source vertex v (on cluster-local indices).
    Multigraph constituent(int v) const;
    std::vector<int> cluster(int v) const { return matching.cluster(v); }
    bool is_cohesive() const;
    bool is_complete() const;
};

// Excision step. Fails on isolated vertices.
LabeledMatching excise(const Multigraph& x);

// Assemblage step. Every cluster needs a constituent on exactly its vertex
// set (given in cluster-local indices) and constituents must be simple.
Truncation assemble(const LabeledMatching& lm, const ConstituentAssignment& ca);

// Standard builders.
Truncation complete_truncation(const Multigraph& x);
Truncation spanning_path_truncation(const Multigraph& x);
Truncation matching_constituent_truncation(const Multigraph& x);
Truncation random_truncation(const Multigraph& x, double density, std::uint64_t seed);
// Random connected constituents: a random spanning tree per cluster plus
// density-weighted extra edges. Used by the verification sweeps.
Truncation random_cohesive_truncation(const Multigraph& x, double density, std::uint64_t seed);

// How expand_walk routes through a constituent.
enum class ExpansionStrategy {
    AnyPath,            // breadth-first connecting path per visit
    SpanningFirstVisit  // spanning path; leftover cluster vertices attach to the first visit
};

// Lifts a walk of the source to a walk of the truncation: matching edges in
// order, joined by vertex-disjoint constituent paths per visit. For closed
// walks the final arrival and initial departure form a single visit. Throws
// precondition_error("no connecting path ...") naming the blocking vertex.
Walk expand_walk(const Truncation& t, const Walk& w, ExpansionStrategy strategy);

}  // namespace trunkit

#endif
