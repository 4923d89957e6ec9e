#include "trunkit/truncation.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>

#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"

namespace trunkit {

std::vector<int> LabeledMatching::cluster(int v) const {
    std::vector<int> c;
    for (int i = 0; i < vertex_count(); i++)
        if (label[static_cast<size_t>(i)] == v) c.push_back(i);
    return c;
}

std::vector<std::vector<int>> LabeledMatching::clusters() const {
    std::vector<std::vector<int>> cs(static_cast<size_t>(source_order));
    for (int i = 0; i < vertex_count(); i++)
        cs[static_cast<size_t>(label[static_cast<size_t>(i)])].push_back(i);
    return cs;
}

LabeledMatching excise(const Multigraph& x) {
    if (x.has_isolated_vertex())
        throw precondition_error("excise: source has an isolated vertex");
    LabeledMatching lm;
    lm.source_order = x.order();
    lm.source_edges = x.edges();
    lm.label.resize(static_cast<size_t>(2 * x.size()));
    for (int e = 0; e < x.size(); e++) {
        const Edge& ed = x.edge(e);
        int lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
        lm.label[static_cast<size_t>(2 * e)] = lo;      // slot 0 = lower endpoint
        lm.label[static_cast<size_t>(2 * e + 1)] = hi;  // loops: both labels equal
    }
    return lm;
}

Multigraph Truncation::constituent(int v) const {
    return assignment.constituents[static_cast<size_t>(v)];
}

bool Truncation::is_cohesive() const {
    for (const Multigraph& c : assignment.constituents)
        if (!is_connected(c)) return false;
    return true;
}

bool Truncation::is_complete() const {
    for (const Multigraph& c : assignment.constituents)
        for (int i = 0; i < c.order(); i++)
            for (int j = i + 1; j < c.order(); j++)
                if (!c.adjacent(i, j)) return false;
    return true;
}

Truncation assemble(const LabeledMatching& lm, const ConstituentAssignment& ca) {
    if (static_cast<int>(ca.constituents.size()) != lm.source_order)
        throw precondition_error("assemble: constituent assignment must cover every source vertex");
    auto clusters = lm.clusters();
    for (int v = 0; v < lm.source_order; v++) {
        const Multigraph& con = ca.constituents[static_cast<size_t>(v)];
        if (con.order() != static_cast<int>(clusters[static_cast<size_t>(v)].size()))
            throw precondition_error("assemble: constituent on wrong vertex set");
        if (!con.is_simple())
            throw precondition_error("assemble: constituent must be a simple graph");
    }
    Truncation t;
    t.matching = lm;
    t.assignment = ca;
    t.source = Multigraph(lm.source_order);
    for (const Edge& e : lm.source_edges) t.source.add_edge(e.u, e.v);

    const int m = static_cast<int>(lm.source_edges.size());
    t.y = Multigraph(2 * m);
    t.cluster_of = lm.label;
    for (int e = 0; e < m; e++)
        t.matching_edges.push_back(t.y.add_edge(2 * e, 2 * e + 1));
    for (int v = 0; v < lm.source_order; v++) {
        const Multigraph& con = ca.constituents[static_cast<size_t>(v)];
        const std::vector<int>& cl = clusters[static_cast<size_t>(v)];
        for (const Edge& e : con.edges())
            t.y.add_edge(cl[static_cast<size_t>(e.u)], cl[static_cast<size_t>(e.v)]);
    }
    return t;
}

namespace {

Truncation build_with(const Multigraph& x,
                      const std::function<Multigraph(int, int)>& make_constituent) {
    LabeledMatching lm = excise(x);
    auto clusters = lm.clusters();
    ConstituentAssignment ca;
    for (int v = 0; v < x.order(); v++)
        ca.constituents.push_back(
            make_constituent(v, static_cast<int>(clusters[static_cast<size_t>(v)].size())));
    return assemble(lm, ca);
}

}  // namespace

Truncation complete_truncation(const Multigraph& x) {
    if (x.has_loops()) throw precondition_error("complete_truncation: source has a loop");
    return build_with(x, [](int, int k) {
        Multigraph c(k);
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++) c.add_edge(i, j);
        return c;
    });
}

Truncation spanning_path_truncation(const Multigraph& x) {
    if (x.has_loops()) throw precondition_error("spanning_path_truncation: source has a loop");
    return build_with(x, [](int, int k) {
        Multigraph c(k);
        for (int i = 0; i + 1 < k; i++) c.add_edge(i, i + 1);
        return c;
    });
}

Truncation matching_constituent_truncation(const Multigraph& x) {
    for (int v = 0; v < x.order(); v++)
        if (x.valency(v) % 2 != 0)
            throw precondition_error("matching_constituent_truncation: odd valency in source");
    return build_with(x, [](int, int k) {
        Multigraph c(k);
        for (int i = 0; i + 1 < k; i += 2) c.add_edge(i, i + 1);
        return c;
    });
}

namespace {

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

Truncation random_truncation(const Multigraph& x, double density, std::uint64_t seed) {
    if (x.has_loops()) throw precondition_error("random_truncation: source has a loop");
    if (density < 0.0 || density > 1.0)
        throw precondition_error("random_truncation: density must lie in [0,1]");
    std::mt19937_64 rng(seed);
    return build_with(x, [&](int, int k) {
        Multigraph c(k);
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++)
                if (next_unit(rng) < density) c.add_edge(i, j);
        return c;
    });
}

Truncation random_cohesive_truncation(const Multigraph& x, double density, std::uint64_t seed) {
    if (x.has_loops()) throw precondition_error("random_cohesive_truncation: source has a loop");
    if (density < 0.0 || density > 1.0)
        throw precondition_error("random_cohesive_truncation: density must lie in [0,1]");
    std::mt19937_64 rng(seed);
    return build_with(x, [&](int, int k) {
        Multigraph c(k);
        for (int i = 1; i < k; i++)
            c.add_edge(i, static_cast<int>(rng() % static_cast<std::uint64_t>(i)));
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++)
                if (!c.adjacent(i, j) && next_unit(rng) < density) c.add_edge(i, j);
        return c;
    });
}

namespace {

// One passage of the expanded walk through a cluster.
struct Visit {
    int arrival = -1;    // y vertex entering (-1 for the open-walk start)
    int departure = -1;  // y vertex leaving (-1 for the open-walk end)
    int order_key = 0;   // position of the arrival edge in the walk
};

}  // namespace

Walk expand_walk(const Truncation& t, const Walk& w, ExpansionStrategy strategy) {
    if (!is_valid_walk(t.source, w))
        throw precondition_error("expand_walk: not a walk of the source");
    if (w.edges.empty()) throw precondition_error("expand_walk: empty walk");
    {
        std::vector<int> es = w.edges;
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end())
            throw precondition_error("expand_walk: walk repeats an edge");
    }
    const int k = w.length();
    const bool closed = w.closed;

    // y end of source edge e at label v
    auto end_at = [&](int e, int v, bool departure_of_loop) {
        const Edge& ed = t.matching.source_edges[static_cast<size_t>(e)];
        if (ed.is_loop()) return 2 * e + (departure_of_loop ? 0 : 1);
        int lo = std::min(ed.u, ed.v);
        return 2 * e + (v == lo ? 0 : 1);
    };

    // Collect visits per cluster.
    std::vector<std::vector<Visit>> visits(static_cast<size_t>(t.source.order()));
    for (int i = 1; i < k; i++) {
        int v = w.vertices[static_cast<size_t>(i)];
        Visit vis;
        vis.arrival = end_at(w.edges[static_cast<size_t>(i - 1)], v, false);
        vis.departure = end_at(w.edges[static_cast<size_t>(i)], v, true);
        vis.order_key = i;
        visits[static_cast<size_t>(v)].push_back(vis);
    }
    int walk_start, walk_end;
    if (closed) {
        int v0 = w.vertices.front();
        Visit wrap;
        wrap.arrival = end_at(w.edges.back(), v0, false);
        wrap.departure = end_at(w.edges.front(), v0, true);
        wrap.order_key = k;  // chronologically last in the expansion
        visits[static_cast<size_t>(v0)].push_back(wrap);
        walk_start = wrap.departure;
        walk_end = wrap.arrival;
    } else {
        walk_start = end_at(w.edges.front(), w.vertices.front(), true);
        walk_end = end_at(w.edges.back(), w.vertices.back(), false);
    }

    // Cluster-local bookkeeping: local index per y vertex, edge id lookup.
    auto clusters = t.matching.clusters();
    std::vector<int> local_of(static_cast<size_t>(t.y.order()), -1);
    for (int v = 0; v < t.source.order(); v++)
        for (size_t i = 0; i < clusters[static_cast<size_t>(v)].size(); i++)
            local_of[static_cast<size_t>(clusters[static_cast<size_t>(v)][i])] = static_cast<int>(i);
    // constituent y-edge between two y vertices of one cluster (lowest id)
    std::vector<std::vector<std::pair<std::pair<int, int>, int>>> con_edges(
        static_cast<size_t>(t.source.order()));
    for (int e = static_cast<int>(t.matching_edges.size()); e < t.y.size(); e++) {
        const Edge& ed = t.y.edge(e);
        int v = t.cluster_of[static_cast<size_t>(ed.u)];
        con_edges[static_cast<size_t>(v)].push_back(
            {{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}, e});
    }
    auto y_edge_between = [&](int v, int a, int b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        for (const auto& [p, e] : con_edges[static_cast<size_t>(v)])
            if (p == key) return e;
        return -1;
    };

    // Plan the connecting path for each visit (as y vertex sequences).
    std::vector<std::vector<std::vector<int>>> paths(static_cast<size_t>(t.source.order()));
    for (int v = 0; v < t.source.order(); v++) {
        auto& vs = visits[static_cast<size_t>(v)];
        if (vs.empty()) continue;
        std::sort(vs.begin(), vs.end(),
                  [](const Visit& a, const Visit& b) { return a.order_key < b.order_key; });
        const Multigraph& con = t.assignment.constituents[static_cast<size_t>(v)];
        const std::vector<int>& cl = clusters[static_cast<size_t>(v)];
        std::vector<char> reserved(cl.size(), 0);  // local indices spoken for
        for (const Visit& vis : vs) {
            for (int yv : {vis.arrival, vis.departure})
                if (yv >= 0) {
                    int li = local_of[static_cast<size_t>(yv)];
                    if (reserved[static_cast<size_t>(li)])
                        throw precondition_error("expand_walk: visits collide at vertex " +
                                                 std::to_string(v));
                    reserved[static_cast<size_t>(li)] = 1;
                }
        }
        // walk terminals in this cluster also consume their vertices
        for (int yv : {walk_start, walk_end})
            if (!closed && t.cluster_of[static_cast<size_t>(yv)] == v) {
                int li = local_of[static_cast<size_t>(yv)];
                reserved[static_cast<size_t>(li)] = 1;
            }

        std::vector<int> leftovers;
        if (strategy == ExpansionStrategy::SpanningFirstVisit)
            for (size_t li = 0; li < cl.size(); li++)
                if (!reserved[li]) leftovers.push_back(static_cast<int>(li));

        std::vector<char> consumed = reserved;  // grows as paths are laid down
        bool first = true;
        for (const Visit& vis : vs) {
            int a = local_of[static_cast<size_t>(vis.arrival)];
            int b = local_of[static_cast<size_t>(vis.departure)];
            std::vector<int> path_local;
            if (strategy == ExpansionStrategy::SpanningFirstVisit) {
                std::vector<int> allowed{a, b};
                if (first) allowed.insert(allowed.end(), leftovers.begin(), leftovers.end());
                std::sort(allowed.begin(), allowed.end());
                Multigraph sub(static_cast<int>(allowed.size()));
                auto lidx = [&](int x) {
                    return static_cast<int>(std::lower_bound(allowed.begin(), allowed.end(), x) -
                                            allowed.begin());
                };
                for (const Edge& e : con.edges())
                    if (std::binary_search(allowed.begin(), allowed.end(), e.u) &&
                        std::binary_search(allowed.begin(), allowed.end(), e.v))
                        sub.add_edge(lidx(e.u), lidx(e.v));
                auto hp = hamilton_path(sub, lidx(a), lidx(b));
                if (!hp)
                    throw precondition_error("no connecting path at vertex " + std::to_string(v));
                for (int x : hp->vertices) path_local.push_back(allowed[static_cast<size_t>(x)]);
            } else {
                // BFS from a to b through free vertices
                std::vector<int> pred(cl.size(), -2);
                std::queue<int> q;
                q.push(a);
                pred[static_cast<size_t>(a)] = -1;
                while (!q.empty() && pred[static_cast<size_t>(b)] == -2) {
                    int cur = q.front();
                    q.pop();
                    for (const Edge& e : con.edges()) {
                        if (!e.incident(cur) || e.is_loop()) continue;
                        int nx = e.other(cur);
                        if (pred[static_cast<size_t>(nx)] != -2) continue;
                        if (nx != b && consumed[static_cast<size_t>(nx)]) continue;
                        pred[static_cast<size_t>(nx)] = cur;
                        q.push(nx);
                    }
                }
                if (pred[static_cast<size_t>(b)] == -2)
                    throw precondition_error("no connecting path at vertex " + std::to_string(v));
                for (int cur = b; cur != -1; cur = pred[static_cast<size_t>(cur)])
                    path_local.push_back(cur);
                std::reverse(path_local.begin(), path_local.end());
            }
            for (int li : path_local) consumed[static_cast<size_t>(li)] = 1;
            std::vector<int> path_y;
            for (int li : path_local) path_y.push_back(cl[static_cast<size_t>(li)]);
            paths[static_cast<size_t>(v)].push_back(path_y);
            first = false;
        }
    }

    // Stitch: matching edges of w in order, joined by the planned paths.
    Walk out;
    out.closed = closed;
    out.vertices.push_back(walk_start);
    std::vector<size_t> next_path(static_cast<size_t>(t.source.order()), 0);
    auto append_path = [&](int v, int expect_from) {
        auto& idx = next_path[static_cast<size_t>(v)];
        const std::vector<int>& p = paths[static_cast<size_t>(v)][idx++];
        if (p.front() != expect_from)
            throw precondition_error("expand_walk: internal stitch mismatch");
        for (size_t i = 0; i + 1 < p.size(); i++) {
            int e = y_edge_between(v, p[i], p[i + 1]);
            out.edges.push_back(e);
            out.vertices.push_back(p[i + 1]);
        }
    };
    for (int i = 0; i < k; i++) {
        int e = w.edges[static_cast<size_t>(i)];
        int from = w.vertices[static_cast<size_t>(i)];
        int to = w.vertices[static_cast<size_t>(i + 1)];
        int dep = end_at(e, from, true);
        int arr = end_at(e, to, false);
        if (out.vertices.back() != dep)
            throw precondition_error("expand_walk: internal stitch mismatch");
        out.edges.push_back(t.matching_edges[static_cast<size_t>(e)]);
        out.vertices.push_back(arr);
        bool is_last = (i == k - 1);
        if (!is_last || closed) {
            int v = is_last ? w.vertices.front() : to;
            append_path(v, arr);
        }
    }
    return out;
}

}  // namespace trunkit
