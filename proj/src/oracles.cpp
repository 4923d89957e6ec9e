#include "trunkit/oracles.hpp"

#include <algorithm>
#include <climits>
#include <queue>

#include "trunkit/errors.hpp"

namespace trunkit {

namespace {

// Edmonds-Karp on a dense capacity matrix. Small graphs only.
int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
    const int n = static_cast<int>(cap.size());
    int flow = 0;
    for (;;) {
        std::vector<int> pred(static_cast<size_t>(n), -1);
        pred[static_cast<size_t>(s)] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && pred[static_cast<size_t>(t)] < 0) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; v++)
                if (pred[static_cast<size_t>(v)] < 0 && cap[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0) {
                    pred[static_cast<size_t>(v)] = u;
                    q.push(v);
                }
        }
        if (pred[static_cast<size_t>(t)] < 0) return flow;
        int aug = INT_MAX;
        for (int v = t; v != s; v = pred[static_cast<size_t>(v)])
            aug = std::min(aug, cap[static_cast<size_t>(pred[static_cast<size_t>(v)])][static_cast<size_t>(v)]);
        for (int v = t; v != s; v = pred[static_cast<size_t>(v)]) {
            cap[static_cast<size_t>(pred[static_cast<size_t>(v)])][static_cast<size_t>(v)] -= aug;
            cap[static_cast<size_t>(v)][static_cast<size_t>(pred[static_cast<size_t>(v)])] += aug;
        }
        flow += aug;
    }
}

}  // namespace

int edge_connectivity(const Multigraph& g) {
    const int n = g.order();
    if (n < 2) throw precondition_error("edge_connectivity requires order >= 2");
    std::vector<std::vector<int>> cap(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        cap[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)]++;
        cap[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)]++;
    }
    // A minimum edge cut separates vertex 0 from some other vertex.
    int best = INT_MAX;
    for (int t = 1; t < n; t++) best = std::min(best, max_flow(cap, 0, t));
    return best;
}

int vertex_connectivity(const Multigraph& g) {
    const int n = g.order();
    if (n < 2) throw precondition_error("vertex_connectivity requires order >= 2");
    Multigraph s = g.simplified();
    const int INF = 1 << 28;
    // Split nodes: v_in = v, v_out = v + n; unit capacity through each vertex.
    auto vertex_flow = [&](int a, int b) {
        std::vector<std::vector<int>> cap(static_cast<size_t>(2 * n),
                                          std::vector<int>(static_cast<size_t>(2 * n), 0));
        for (int v = 0; v < n; v++) cap[static_cast<size_t>(v)][static_cast<size_t>(v + n)] = 1;
        for (const Edge& e : s.edges()) {
            cap[static_cast<size_t>(e.u + n)][static_cast<size_t>(e.v)] = INF;
            cap[static_cast<size_t>(e.v + n)][static_cast<size_t>(e.u)] = INF;
        }
        return max_flow(cap, a + n, b);
    };
    int best = INT_MAX;
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (!s.adjacent(a, b)) best = std::min(best, vertex_flow(a, b));
    return best == INT_MAX ? n - 1 : best;  // complete graph convention
}

namespace {

void match_rec(const Multigraph& g, const std::vector<std::vector<int>>& inc,
               std::vector<char>& covered, std::vector<int>& chosen,
               std::vector<std::vector<int>>& out) {
    int v = -1;
    for (int u = 0; u < g.order(); u++)
        if (!covered[static_cast<size_t>(u)]) {
            v = u;
            break;
        }
    if (v < 0) {
        std::vector<int> m = chosen;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
        return;
    }
    for (int e : inc[static_cast<size_t>(v)]) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        int w = ed.other(v);
        if (covered[static_cast<size_t>(w)]) continue;
        covered[static_cast<size_t>(v)] = covered[static_cast<size_t>(w)] = 1;
        chosen.push_back(e);
        match_rec(g, inc, covered, chosen, out);
        chosen.pop_back();
        covered[static_cast<size_t>(v)] = covered[static_cast<size_t>(w)] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_perfect_matchings(const Multigraph& g) {
    std::vector<std::vector<int>> out;
    if (g.order() % 2 != 0) return out;
    auto inc = g.incidence();
    std::vector<char> covered(static_cast<size_t>(g.order()), 0);
    std::vector<int> chosen;
    match_rec(g, inc, covered, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Walk> euler_tour(const Multigraph& g) {
    if (g.order() == 0) return std::nullopt;
    for (int v = 0; v < g.order(); v++)
        if (g.valency(v) % 2 != 0) return std::nullopt;
    if (g.size() == 0) return Walk{{0}, {}, true};
    // Connected apart from isolated vertices: every edge in one block.
    auto labels = component_labels(g);
    int root = -1;
    for (const Edge& e : g.edges()) {
        if (root < 0) root = labels[static_cast<size_t>(e.u)];
        if (labels[static_cast<size_t>(e.u)] != root) return std::nullopt;
    }
    int start = 0;
    while (g.valency(start) == 0) start++;

    auto inc = g.incidence();  // ascending edge ids, so ties break low
    std::vector<size_t> next(static_cast<size_t>(g.order()), 0);
    std::vector<char> used(static_cast<size_t>(g.size()), 0);
    std::vector<int> vstack{start}, estack;
    Walk tour;
    tour.closed = true;
    while (!vstack.empty()) {
        int v = vstack.back();
        auto& ptr = next[static_cast<size_t>(v)];
        const auto& iv = inc[static_cast<size_t>(v)];
        while (ptr < iv.size() && used[static_cast<size_t>(iv[ptr])]) ptr++;
        if (ptr == iv.size()) {
            tour.vertices.push_back(v);
            vstack.pop_back();
            if (!estack.empty()) {
                tour.edges.push_back(estack.back());
                estack.pop_back();
            }
        } else {
            int e = iv[ptr];
            used[static_cast<size_t>(e)] = 1;
            int w = g.edge(e).is_loop() ? v : g.edge(e).other(v);
            vstack.push_back(w);
            estack.push_back(e);
        }
    }
    std::reverse(tour.vertices.begin(), tour.vertices.end());
    std::reverse(tour.edges.begin(), tour.edges.end());
    return tour;
}

namespace {

bool trail_rec(const Multigraph& g, const std::vector<std::vector<int>>& inc, int cur, int home,
               int last, int used_count, std::vector<char>& used, std::vector<int>& vseq,
               std::vector<int>& eseq) {
    const int m = g.size();
    if (used_count == m - 1) {
        // Only the designated closing edge remains.
        const Edge& ed = g.edge(last);
        if (!ed.incident(cur)) return false;
        int nxt = ed.is_loop() ? cur : ed.other(cur);
        if (nxt != home) return false;
        eseq.push_back(last);
        vseq.push_back(home);
        return true;
    }
    for (int e : inc[static_cast<size_t>(cur)]) {
        if (used[static_cast<size_t>(e)] || e == last) continue;
        used[static_cast<size_t>(e)] = 1;
        int nxt = g.edge(e).is_loop() ? cur : g.edge(e).other(cur);
        eseq.push_back(e);
        vseq.push_back(nxt);
        if (trail_rec(g, inc, nxt, home, last, used_count + 1, used, vseq, eseq)) return true;
        eseq.pop_back();
        vseq.pop_back();
        used[static_cast<size_t>(e)] = 0;
    }
    return false;
}

}  // namespace

std::optional<Walk> euler_tour_through(const Multigraph& g, int first, int last, int v) {
    if (first < 0 || first >= g.size() || last < 0 || last >= g.size())
        throw precondition_error("edge id out of range");
    if (!g.edge(first).incident(v) || !g.edge(last).incident(v))
        throw precondition_error("first/last edge not incident with v");
    const int m = g.size();
    if (m == 1) {
        if (first == last && g.edge(first).is_loop()) return Walk{{v, v}, {first}, true};
        return std::nullopt;
    }
    if (first == last) return std::nullopt;
    auto inc = g.incidence();
    std::vector<char> used(static_cast<size_t>(m), 0);
    used[static_cast<size_t>(first)] = 1;
    int cur = g.edge(first).is_loop() ? v : g.edge(first).other(v);
    std::vector<int> vseq{v, cur}, eseq{first};
    if (trail_rec(g, inc, cur, v, last, 1, used, vseq, eseq)) return Walk{vseq, eseq, true};
    return std::nullopt;
}

namespace {

// Backtracking Hamilton search. `target` is the closing vertex (cycle mode:
// the start; path mode: the final vertex, kept unvisited until last).
struct HamSearcher {
    const Multigraph& g;
    int n;
    std::vector<std::vector<std::pair<int, int>>> adj;  // v -> (neighbor, lowest edge id)
    std::vector<char> visited;
    std::vector<int> vseq, eseq;
    bool cycle_mode = false;
    int target = -1;
    SearchControl* ctl;
    std::vector<char> seen;
    std::vector<int> stack;

    HamSearcher(const Multigraph& graph, SearchControl* control)
        : g(graph), n(graph.order()), ctl(control) {
        adj.assign(static_cast<size_t>(n), {});
        std::vector<std::vector<int>> low(static_cast<size_t>(n),
                                          std::vector<int>(static_cast<size_t>(n), -1));
        for (int e = 0; e < g.size(); e++) {
            const Edge& ed = g.edge(e);
            if (ed.is_loop()) continue;
            if (low[static_cast<size_t>(ed.u)][static_cast<size_t>(ed.v)] < 0) {
                low[static_cast<size_t>(ed.u)][static_cast<size_t>(ed.v)] = e;
                low[static_cast<size_t>(ed.v)][static_cast<size_t>(ed.u)] = e;
            }
        }
        for (int u = 0; u < n; u++)
            for (int v = 0; v < n; v++)
                if (low[static_cast<size_t>(u)][static_cast<size_t>(v)] >= 0)
                    adj[static_cast<size_t>(u)].push_back(
                        {v, low[static_cast<size_t>(u)][static_cast<size_t>(v)]});
        visited.assign(static_cast<size_t>(n), 0);
        seen.assign(static_cast<size_t>(n), 0);
    }

    // Sound pruning: every vertex still to be visited needs two usable
    // neighbors (predecessor from unvisited/current, successor from
    // unvisited/target) and must be reachable from the current vertex
    // through unvisited vertices; target may be touched but not crossed.
    bool feasible(int cur) {
        for (int v = 0; v < n; v++) {
            if (visited[static_cast<size_t>(v)] || v == target) continue;
            int avail = 0;
            for (auto [w, e] : adj[static_cast<size_t>(v)]) {
                (void)e;
                if (!visited[static_cast<size_t>(w)] || w == cur || w == target) avail++;
            }
            if (avail < 2) return false;
        }
        if (!cycle_mode) {
            int avail_t = 0;
            for (auto [w, e] : adj[static_cast<size_t>(target)]) {
                (void)e;
                if (!visited[static_cast<size_t>(w)] || w == cur) avail_t++;
            }
            if (avail_t < 1) return false;
        }
        std::fill(seen.begin(), seen.end(), 0);
        stack.clear();
        stack.push_back(cur);
        seen[static_cast<size_t>(cur)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[static_cast<size_t>(v)]) {
                (void)e;
                if (seen[static_cast<size_t>(w)]) continue;
                if (w == target) {
                    seen[static_cast<size_t>(w)] = 1;  // endpoint only, do not cross
                    continue;
                }
                if (visited[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
        for (int v = 0; v < n; v++)
            if (!visited[static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)]) return false;
        return seen[static_cast<size_t>(target)] != 0;
    }

    bool dfs(int cur, int remaining) {
        if (ctl && ctl->poll()) throw cap_exceeded("hamilton search aborted");
        if (remaining == 0) {
            if (!cycle_mode) return true;
            for (auto [w, e] : adj[static_cast<size_t>(cur)])
                if (w == target) {
                    eseq.push_back(e);
                    vseq.push_back(target);
                    return true;
                }
            return false;
        }
        if (!feasible(cur)) return false;
        for (auto [w, e] : adj[static_cast<size_t>(cur)]) {
            if (visited[static_cast<size_t>(w)]) continue;
            if (!cycle_mode && w == target && remaining > 1) continue;
            visited[static_cast<size_t>(w)] = 1;
            vseq.push_back(w);
            eseq.push_back(e);
            if (dfs(w, remaining - 1)) return true;
            eseq.pop_back();
            vseq.pop_back();
            visited[static_cast<size_t>(w)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Walk> hamilton_cycle(const Multigraph& g, SearchControl* ctl) {
    const int n = g.order();
    if (n > caps().hamilton_order) throw cap_exceeded("hamilton oracle cap exceeded");
    if (n <= 1) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    if (n == 2) {
        // Two vertices need a pair of parallel edges.
        std::vector<int> ids;
        for (int e = 0; e < g.size() && ids.size() < 2; e++)
            if (!g.edge(e).is_loop()) ids.push_back(e);
        if (ids.size() == 2) return Walk{{0, 1, 0}, {ids[0], ids[1]}, true};
        return std::nullopt;
    }
    HamSearcher hs(g, ctl);
    for (const auto& av : hs.adj)
        if (av.size() < 2) return std::nullopt;
    hs.cycle_mode = true;
    hs.target = 0;
    hs.visited[0] = 1;
    hs.vseq.push_back(0);
    if (hs.dfs(0, n - 1)) return Walk{hs.vseq, hs.eseq, true};
    return std::nullopt;
}

std::optional<Walk> hamilton_path(const Multigraph& g, int s, int t, SearchControl* ctl) {
    const int n = g.order();
    if (n > caps().hamilton_order) throw cap_exceeded("hamilton oracle cap exceeded");
    if (s == t) throw precondition_error("hamilton_path requires s != t");
    if (s < 0 || t < 0 || s >= n || t >= n) throw precondition_error("vertex out of range");
    if (!is_connected(g)) return std::nullopt;
    if (n == 2) {
        for (int e = 0; e < g.size(); e++)
            if (!g.edge(e).is_loop()) return Walk{{s, t}, {e}, false};
        return std::nullopt;
    }
    HamSearcher hs(g, ctl);
    hs.cycle_mode = false;
    hs.target = t;
    hs.visited[static_cast<size_t>(s)] = 1;
    hs.vseq.push_back(s);
    if (hs.dfs(s, n - 1)) return Walk{hs.vseq, hs.eseq, false};
    return std::nullopt;
}

}  // namespace trunkit
