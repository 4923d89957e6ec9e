#ifndef TRUNKIT_MULTIGRAPH_HPP
#define TRUNKIT_MULTIGRAPH_HPP

#include <initializer_list>
#include <utility>
#include <vector>

namespace trunkit {

// One edge of a multigraph. u == v is a loop. Edges are identified by their
// index in Multigraph::edges(); parallel edges are distinct by edge id.
struct Edge {
    int u = -1;
    int v = -1;
    bool is_loop() const { return u == v; }
    int other(int w) const { return w == u ? v : u; }
    bool incident(int w) const { return u == w || v == w; }
};

// Multigraph with dense vertex ids 0..order-1 and an indexed edge list.
// Loops and parallel edges are permitted. Immutable in spirit: all library
// operations take it by const reference and return new values.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int order) : order_(order) {}
    Multigraph(int order, std::initializer_list<std::pair<int, int>> es) : order_(order) {
        for (auto [u, v] : es) add_edge(u, v);
    }

    int order() const { return order_; }
    int size() const { return static_cast<int>(edges_.size()); }

    int add_vertex() { return order_++; }
    // Returns the new edge id. Endpoints must already exist.
    int add_edge(int u, int v);

    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Number of edge ends at v; a loop contributes 2.
    int valency(int v) const;
    int max_valency() const;
    int min_valency() const;

    bool has_loops() const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loops() && !has_parallel_edges(); }
    bool has_isolated_vertex() const;
    bool is_regular() const;

    int multiplicity(int u, int v) const;
    bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

    // Per-vertex incident edge ids, ascending; a loop appears once at its vertex.
    std::vector<std::vector<int>> incidence() const;
    // Underlying simple graph: loops dropped, parallels collapsed.
    Multigraph simplified() const;
    // Subgraph on the same vertex set keeping only the given edge ids
    // (edge ids are renumbered in ascending order of the old ids).
    Multigraph edge_subgraph(const std::vector<int>& edge_ids) const;
    // Copy with one edge removed (later edge ids shift down by one).
    Multigraph without_edge(int e) const;
    // Image under a vertex relabeling (perm[old] = new); same edge order.
    Multigraph relabeled(const std::vector<int>& perm) const;

private:
    int order_ = 0;
    std::vector<Edge> edges_;
};

// Maximal connected blocks of vertices; loops and parallel edges are
// irrelevant. Blocks are sorted by smallest member, members ascending.
std::vector<std::vector<int>> components(const Multigraph& g);
// Component label per vertex (labels are block indices as above).
std::vector<int> component_labels(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Alternating vertex/edge sequence: vertices.size() == edges.size() + 1.
// A closed walk has vertices.front() == vertices.back().
struct Walk {
    std::vector<int> vertices;
    std::vector<int> edges;
    bool closed = false;

    int length() const { return static_cast<int>(edges.size()); }
};

bool is_valid_walk(const Multigraph& g, const Walk& w);
bool is_trail(const Multigraph& g, const Walk& w);      // valid, no repeated edge id
bool is_euler_tour(const Multigraph& g, const Walk& w); // closed trail covering every edge
bool is_hamilton_cycle(const Multigraph& g, const Walk& w);
bool is_hamilton_path(const Multigraph& g, const Walk& w, int s, int t);

}  // namespace trunkit

#endif
