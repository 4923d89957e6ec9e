#include "trunkit/coloring_exact.hpp"

#include <algorithm>
#include <numeric>

#include "trunkit/errors.hpp"

namespace trunkit {

bool is_proper_edge_coloring(const Multigraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.size()) return false;
    for (int col : c.color)
        if (col < 0 || col >= c.color_count) return false;
    for (int e = 0; e < g.size(); e++)
        for (int f = e + 1; f < g.size(); f++) {
            const Edge& a = g.edge(e);
            const Edge& b = g.edge(f);
            bool incident = a.incident(b.u) || a.incident(b.v);
            if (incident && c.color[static_cast<size_t>(e)] == c.color[static_cast<size_t>(f)])
                return false;
        }
    return true;
}

bool is_proper_vertex_coloring(const Multigraph& g, const VertexColoring& c) {
    if (static_cast<int>(c.color.size()) != g.order()) return false;
    for (int col : c.color)
        if (col < 0 || col >= c.color_count) return false;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) return false;
        if (c.color[static_cast<size_t>(e.u)] == c.color[static_cast<size_t>(e.v)]) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<char>> adjacency_matrix(const Multigraph& g) {
    std::vector<std::vector<char>> adj(static_cast<size_t>(g.order()),
                                       std::vector<char>(static_cast<size_t>(g.order()), 0));
    for (const Edge& e : g.edges())
        if (!e.is_loop()) {
            adj[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] = 1;
            adj[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] = 1;
        }
    return adj;
}

void clique_rec(const std::vector<std::vector<char>>& adj, std::vector<int>& cand,
                std::vector<int>& cur, std::vector<int>& best) {
    if (cur.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    while (!cand.empty()) {
        if (cur.size() + cand.size() <= best.size()) return;
        int v = cand.back();
        cand.pop_back();
        std::vector<int> next;
        for (int u : cand)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) next.push_back(u);
        cur.push_back(v);
        clique_rec(adj, next, cur, best);
        cur.pop_back();
    }
}

}  // namespace

std::vector<int> max_clique(const Multigraph& g) {
    auto adj = adjacency_matrix(g);
    std::vector<int> order(static_cast<size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.valency(a) < g.valency(b);  // high-degree popped first
    });
    std::vector<int> cur, best;
    clique_rec(adj, order, cur, best);
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

// k-colorability decision with a clique pre-colored and DSATUR-style dynamic
// vertex selection. New colors are introduced in order (symmetry break).
struct VColSearch {
    const std::vector<std::vector<char>>& adj;
    int n, k;
    std::vector<int> color;        // -1 = unassigned
    std::vector<int> degree;
    SearchControl* ctl;

    bool run(int colored, int max_used) {
        if (ctl && ctl->poll()) throw cap_exceeded("vertex coloring search aborted");
        if (colored == n) return true;
        // most saturated uncolored vertex, ties by degree then id
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; v++) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            int sat = saturation(v);
            if (sat > pick_sat ||
                (sat == pick_sat && degree[static_cast<size_t>(v)] > degree[static_cast<size_t>(pick)]))
                pick = v, pick_sat = sat;
        }
        int limit = std::min(k, max_used + 2);  // allow one fresh color
        for (int c = 0; c < limit; c++) {
            bool ok = true;
            for (int u = 0; u < n && ok; u++)
                if (adj[static_cast<size_t>(pick)][static_cast<size_t>(u)] &&
                    color[static_cast<size_t>(u)] == c)
                    ok = false;
            if (!ok) continue;
            color[static_cast<size_t>(pick)] = c;
            if (run(colored + 1, std::max(max_used, c))) return true;
            color[static_cast<size_t>(pick)] = -1;
        }
        return false;
    }

    int saturation(int v) const {
        std::vector<char> used(static_cast<size_t>(k), 0);
        int s = 0;
        for (int u = 0; u < n; u++)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) {
                int c = color[static_cast<size_t>(u)];
                if (c >= 0 && !used[static_cast<size_t>(c)]) {
                    used[static_cast<size_t>(c)] = 1;
                    s++;
                }
            }
        return s;
    }
};

bool vertex_colorable_with(const Multigraph& g, int k, const std::vector<int>& clique,
                           VertexColoring* witness, SearchControl* ctl) {
    const int n = g.order();
    if (static_cast<int>(clique.size()) > k) return false;
    auto adj = adjacency_matrix(g);
    VColSearch s{adj, n, k, std::vector<int>(static_cast<size_t>(n), -1),
                 std::vector<int>(static_cast<size_t>(n), 0), ctl};
    for (int v = 0; v < n; v++)
        for (int u = 0; u < n; u++)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) s.degree[static_cast<size_t>(v)]++;
    int max_used = -1;
    for (size_t i = 0; i < clique.size(); i++) {
        s.color[static_cast<size_t>(clique[i])] = static_cast<int>(i);
        max_used = static_cast<int>(i);
    }
    if (!s.run(static_cast<int>(clique.size()), max_used)) return false;
    if (witness) {
        witness->color = s.color;
        witness->color_count = k;
    }
    return true;
}

}  // namespace

VertexColoring vertex_coloring_exact(const Multigraph& g, SearchControl* ctl) {
    if (g.has_loops()) throw precondition_error("chromatic number undefined with loops");
    VertexColoring best;
    if (g.order() == 0) return best;
    if (g.size() == 0) {
        best.color.assign(static_cast<size_t>(g.order()), 0);
        best.color_count = 1;
        return best;
    }
    std::vector<int> clique = max_clique(g);
    for (int k = static_cast<int>(clique.size());; k++) {
        if (vertex_colorable_with(g, k, clique, &best, ctl)) {
            // normalize color_count to colors actually used
            best.color_count = *std::max_element(best.color.begin(), best.color.end()) + 1;
            return best;
        }
    }
}

int chromatic_number_exact(const Multigraph& g, SearchControl* ctl) {
    return vertex_coloring_exact(g, ctl).color_count;
}

namespace {

// Edge coloring decision: most-constrained-edge-first branch and bound with
// per-vertex color bitmasks. Colors beyond (max used + 1) are never tried.
struct EColSearch {
    const Multigraph& g;
    int m, k;
    std::vector<std::uint64_t> vused;  // per vertex bitmask
    std::vector<int> color;
    SearchControl* ctl;

    bool run(int assigned, int max_used) {
        if (ctl && ctl->poll()) throw cap_exceeded("edge coloring search aborted");
        if (assigned == m) return true;
        // pick unassigned edge with fewest admissible colors
        int pick = -1, pick_avail = k + 1;
        std::uint64_t pick_mask = 0;
        int limit_all = std::min(k, max_used + 2);
        for (int e = 0; e < m; e++) {
            if (color[static_cast<size_t>(e)] >= 0) continue;
            std::uint64_t forbidden = vused[static_cast<size_t>(g.edge(e).u)] |
                                      vused[static_cast<size_t>(g.edge(e).v)];
            std::uint64_t mask = ~forbidden & ((limit_all >= 64) ? ~0ull : ((1ull << limit_all) - 1));
            int avail = __builtin_popcountll(mask);
            if (avail == 0) return false;
            if (avail < pick_avail) {
                pick = e;
                pick_avail = avail;
                pick_mask = mask;
                if (avail == 1) break;
            }
        }
        const Edge& ed = g.edge(pick);
        std::uint64_t mask = pick_mask;
        while (mask) {
            int c = __builtin_ctzll(mask);
            mask &= mask - 1;
            if (c > max_used + 1) break;  // fresh colors in order only
            color[static_cast<size_t>(pick)] = c;
            vused[static_cast<size_t>(ed.u)] |= 1ull << c;
            vused[static_cast<size_t>(ed.v)] |= 1ull << c;
            if (run(assigned + 1, std::max(max_used, c))) return true;
            vused[static_cast<size_t>(ed.u)] &= ~(1ull << c);
            vused[static_cast<size_t>(ed.v)] &= ~(1ull << c);
            color[static_cast<size_t>(pick)] = -1;
        }
        return false;
    }
};

}  // namespace

bool edge_colorable_with(const Multigraph& g, int k, EdgeColoring* witness, SearchControl* ctl) {
    if (g.has_loops()) throw precondition_error("chromatic index undefined with loops");
    if (k > 63) throw precondition_error("edge color count above bitmask width");
    const int m = g.size();
    if (m == 0) {
        if (witness) *witness = EdgeColoring{{}, 0};
        return true;
    }
    if (k <= 0) return false;
    if (g.max_valency() > k) return false;
    EColSearch s{g, m, k, std::vector<std::uint64_t>(static_cast<size_t>(g.order()), 0),
                 std::vector<int>(static_cast<size_t>(m), -1), ctl};
    if (!s.run(0, -1)) return false;
    if (witness) {
        witness->color = s.color;
        witness->color_count = *std::max_element(s.color.begin(), s.color.end()) + 1;
    }
    return true;
}

EdgeColoring chromatic_index_exact_coloring(const Multigraph& g, SearchControl* ctl) {
    if (g.has_loops()) throw precondition_error("chromatic index undefined with loops");
    if (g.size() > caps().chromatic_edges) throw cap_exceeded("chromatic index cap exceeded");
    EdgeColoring witness;
    for (int k = g.max_valency();; k++)
        if (edge_colorable_with(g, k, &witness, ctl)) return witness;
}

int chromatic_index_exact(const Multigraph& g, SearchControl* ctl) {
    return chromatic_index_exact_coloring(g, ctl).color_count;
}

}  // namespace trunkit
