#include "trunkit/multigraph.hpp"

#include <algorithm>
#include <numeric>

#include "trunkit/errors.hpp"

namespace trunkit {

int Multigraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw precondition_error("edge endpoint out of range");
    edges_.push_back(Edge{u, v});
    return static_cast<int>(edges_.size()) - 1;
}

int Multigraph::valency(int v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) d++;
        if (e.v == v) d++;
    }
    return d;
}

int Multigraph::max_valency() const {
    std::vector<int> d(static_cast<size_t>(order_), 0);
    for (const Edge& e : edges_) {
        d[static_cast<size_t>(e.u)]++;
        d[static_cast<size_t>(e.v)]++;
    }
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int Multigraph::min_valency() const {
    std::vector<int> d(static_cast<size_t>(order_), 0);
    for (const Edge& e : edges_) {
        d[static_cast<size_t>(e.u)]++;
        d[static_cast<size_t>(e.v)]++;
    }
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

bool Multigraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::has_parallel_edges() const {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(edges_.size());
    for (const Edge& e : edges_) ps.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(ps.begin(), ps.end());
    return std::adjacent_find(ps.begin(), ps.end()) != ps.end();
}

bool Multigraph::has_isolated_vertex() const {
    std::vector<char> seen(static_cast<size_t>(order_), 0);
    for (const Edge& e : edges_) {
        seen[static_cast<size_t>(e.u)] = 1;
        seen[static_cast<size_t>(e.v)] = 1;
    }
    return std::find(seen.begin(), seen.end(), 0) != seen.end();
}

bool Multigraph::is_regular() const {
    if (order_ == 0) return true;
    int d = valency(0);
    for (int v = 1; v < order_; v++)
        if (valency(v) != d) return false;
    return true;
}

int Multigraph::multiplicity(int u, int v) const {
    int m = 0;
    for (const Edge& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) m++;
    return m;
}

std::vector<std::vector<int>> Multigraph::incidence() const {
    std::vector<std::vector<int>> inc(static_cast<size_t>(order_));
    for (int e = 0; e < size(); e++) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        inc[static_cast<size_t>(ed.u)].push_back(e);
        if (!ed.is_loop()) inc[static_cast<size_t>(ed.v)].push_back(e);
    }
    return inc;
}

Multigraph Multigraph::simplified() const {
    Multigraph s(order_);
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.is_loop()) continue;
        auto p = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (std::find(seen.begin(), seen.end(), p) == seen.end()) {
            seen.push_back(p);
            s.add_edge(p.first, p.second);
        }
    }
    return s;
}

Multigraph Multigraph::edge_subgraph(const std::vector<int>& edge_ids) const {
    std::vector<int> ids = edge_ids;
    std::sort(ids.begin(), ids.end());
    Multigraph s(order_);
    for (int e : ids) s.add_edge(edges_[static_cast<size_t>(e)].u, edges_[static_cast<size_t>(e)].v);
    return s;
}

Multigraph Multigraph::without_edge(int e) const {
    Multigraph s(order_);
    for (int i = 0; i < size(); i++)
        if (i != e) s.add_edge(edges_[static_cast<size_t>(i)].u, edges_[static_cast<size_t>(i)].v);
    return s;
}

Multigraph Multigraph::relabeled(const std::vector<int>& perm) const {
    Multigraph s(order_);
    for (const Edge& e : edges_)
        s.add_edge(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
    return s;
}

std::vector<int> component_labels(const Multigraph& g) {
    int n = g.order();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> label(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; v++) {
        int r = find(v);
        if (label[static_cast<size_t>(r)] < 0) label[static_cast<size_t>(r)] = next++;
        label[static_cast<size_t>(v)] = label[static_cast<size_t>(r)];
    }
    return label;
}

std::vector<std::vector<int>> components(const Multigraph& g) {
    std::vector<int> label = component_labels(g);
    int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
    for (int v = 0; v < g.order(); v++) blocks[static_cast<size_t>(label[static_cast<size_t>(v)])].push_back(v);
    return blocks;
}

bool is_connected(const Multigraph& g) {
    return components(g).size() <= 1;
}

bool is_valid_walk(const Multigraph& g, const Walk& w) {
    if (w.vertices.size() != w.edges.size() + 1) return false;
    if (w.vertices.empty()) return false;
    for (int v : w.vertices)
        if (v < 0 || v >= g.order()) return false;
    for (size_t i = 0; i < w.edges.size(); i++) {
        int e = w.edges[i];
        if (e < 0 || e >= g.size()) return false;
        const Edge& ed = g.edge(e);
        int a = w.vertices[i], b = w.vertices[i + 1];
        bool ok = (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
        if (!ok) return false;
    }
    if (w.closed && w.vertices.front() != w.vertices.back()) return false;
    return true;
}

bool is_trail(const Multigraph& g, const Walk& w) {
    if (!is_valid_walk(g, w)) return false;
    std::vector<int> es = w.edges;
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) == es.end();
}

bool is_euler_tour(const Multigraph& g, const Walk& w) {
    return is_trail(g, w) && w.closed && static_cast<int>(w.edges.size()) == g.size();
}

bool is_hamilton_cycle(const Multigraph& g, const Walk& w) {
    if (!is_trail(g, w) || !w.closed) return false;
    if (static_cast<int>(w.edges.size()) != g.order()) return false;
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    for (size_t i = 0; i + 1 < w.vertices.size(); i++) {
        int v = w.vertices[i];
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

bool is_hamilton_path(const Multigraph& g, const Walk& w, int s, int t) {
    if (!is_trail(g, w) || w.closed) return false;
    if (w.vertices.front() != s || w.vertices.back() != t) return false;
    if (static_cast<int>(w.vertices.size()) != g.order()) return false;
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    for (int v : w.vertices) {
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

}  // namespace trunkit
