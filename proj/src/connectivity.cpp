#include "trunkit/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "trunkit/errors.hpp"

namespace trunkit {

HatGraph hat_graph(const LabeledMatching& lm) {
    const int m = static_cast<int>(lm.source_edges.size());
    HatGraph hat;
    hat.graph = Multigraph(m);
    for (int e = 0; e < m; e++) {
        const Edge& ed = lm.source_edges[static_cast<size_t>(e)];
        hat.labels.emplace_back(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
    }
    for (int a = 0; a < m; a++)
        for (int b = a + 1; b < m; b++) {
            auto [au, av] = hat.labels[static_cast<size_t>(a)];
            auto [bu, bv] = hat.labels[static_cast<size_t>(b)];
            if (au == bu || au == bv || av == bu || av == bv) hat.graph.add_edge(a, b);
        }
    return hat;
}

Multigraph project(const Truncation& t) {
    const int m = static_cast<int>(t.matching_edges.size());
    // Which matching edge owns each y vertex; no layout assumption, so this
    // also works on imported truncations.
    std::vector<int> hat_of(static_cast<size_t>(t.y.order()), -1);
    std::vector<char> is_matching(static_cast<size_t>(t.y.size()), 0);
    for (int i = 0; i < m; i++) {
        int e = t.matching_edges[static_cast<size_t>(i)];
        is_matching[static_cast<size_t>(e)] = 1;
        const Edge& me = t.y.edge(e);
        hat_of[static_cast<size_t>(me.u)] = i;
        hat_of[static_cast<size_t>(me.v)] = i;
    }
    Multigraph proj(m);
    std::vector<std::vector<char>> seen(static_cast<size_t>(m),
                                        std::vector<char>(static_cast<size_t>(m), 0));
    for (int e = 0; e < t.y.size(); e++) {
        if (is_matching[static_cast<size_t>(e)]) continue;
        const Edge& ed = t.y.edge(e);
        int a = hat_of[static_cast<size_t>(ed.u)], b = hat_of[static_cast<size_t>(ed.v)];
        if (a == b) continue;  // parallel to a matching edge (loop-derived)
        int lo = std::min(a, b), hi = std::max(a, b);
        if (!seen[static_cast<size_t>(lo)][static_cast<size_t>(hi)]) {
            seen[static_cast<size_t>(lo)][static_cast<size_t>(hi)] = 1;
            proj.add_edge(lo, hi);
        }
    }
    return proj;
}

VerificationReport check_connectedness_theorem(const Truncation& t) {
    VerificationReport r;
    r.check = "thm-connectedness";
    bool y_conn = is_connected(t.y);
    bool proj_conn = is_connected(project(t));
    r.lhs = y_conn;
    r.rhs = proj_conn;
    r.pass = (y_conn == proj_conn);
    std::ostringstream os;
    os << "Y " << (y_conn ? "connected" : "disconnected") << ", projection "
       << (proj_conn ? "connected" : "disconnected");
    r.details = os.str();
    if (!r.pass) r.certificate = "biconditional violated";
    return r;
}

Truncation spanning_tree_truncation(const Multigraph& x) {
    if (!is_connected(x)) throw precondition_error("spanning_tree_truncation: source disconnected");
    LabeledMatching lm = excise(x);
    HatGraph hat = hat_graph(lm);
    const int m = hat.graph.order();

    // BFS spanning tree of the hat graph, lowest ids first.
    std::vector<int> parent(static_cast<size_t>(m), -1);
    std::vector<char> seen(static_cast<size_t>(m), 0);
    std::vector<std::pair<int, int>> tree_edges;
    if (m > 0) {
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < m; b++)
                if (!seen[static_cast<size_t>(b)] && hat.graph.adjacent(a, b)) {
                    seen[static_cast<size_t>(b)] = 1;
                    parent[static_cast<size_t>(b)] = a;
                    tree_edges.emplace_back(a, b);
                    q.push(b);
                }
        }
    }

    // One constituent edge per tree edge, joining the two ends with the
    // lowest shared label.
    auto clusters = lm.clusters();
    std::vector<int> local_of(static_cast<size_t>(2 * m), -1);
    for (size_t v = 0; v < clusters.size(); v++)
        for (size_t i = 0; i < clusters[v].size(); i++)
            local_of[static_cast<size_t>(clusters[v][i])] = static_cast<int>(i);

    ConstituentAssignment ca;
    for (size_t v = 0; v < clusters.size(); v++)
        ca.constituents.emplace_back(static_cast<int>(clusters[v].size()));
    for (auto [a, b] : tree_edges) {
        auto [au, av] = hat.labels[static_cast<size_t>(a)];
        auto [bu, bv] = hat.labels[static_cast<size_t>(b)];
        int shared = -1;
        for (int s : {au, av})
            for (int s2 : {bu, bv})
                if (s == s2 && (shared < 0 || s < shared)) shared = s;
        int ya = lm.matching_vertex(a, lm.label[static_cast<size_t>(2 * a)] == shared ? 0 : 1);
        int yb = lm.matching_vertex(b, lm.label[static_cast<size_t>(2 * b)] == shared ? 0 : 1);
        ca.constituents[static_cast<size_t>(shared)].add_edge(local_of[static_cast<size_t>(ya)],
                                                              local_of[static_cast<size_t>(yb)]);
    }
    return assemble(lm, ca);
}

}  // namespace trunkit
