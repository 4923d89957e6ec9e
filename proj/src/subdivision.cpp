#include "trunkit/subdivision.hpp"

#include <algorithm>
#include <functional>

#include "trunkit/errors.hpp"

namespace trunkit {

namespace {

struct PatternSpec {
    int vertices;
    std::vector<int> degree;
    std::vector<std::pair<int, int>> edges;
};

PatternSpec spec_for(SubdivisionPattern p) {
    switch (p) {
        case SubdivisionPattern::K4: {
            PatternSpec s{4, {3, 3, 3, 3}, {}};
            for (int a = 0; a < 4; a++)
                for (int b = a + 1; b < 4; b++) s.edges.emplace_back(a, b);
            return s;
        }
        case SubdivisionPattern::K5: {
            PatternSpec s{5, {4, 4, 4, 4, 4}, {}};
            for (int a = 0; a < 5; a++)
                for (int b = a + 1; b < 5; b++) s.edges.emplace_back(a, b);
            return s;
        }
        case SubdivisionPattern::K23: {
            // vertices 0,1 on the small side (degree 3), 2,3,4 on the big side
            PatternSpec s{5, {3, 3, 2, 2, 2}, {}};
            for (int a = 0; a < 2; a++)
                for (int b = 2; b < 5; b++) s.edges.emplace_back(a, b);
            return s;
        }
        case SubdivisionPattern::K33: {
            PatternSpec s{6, {3, 3, 3, 3, 3, 3}, {}};
            for (int a = 0; a < 3; a++)
                for (int b = 3; b < 6; b++) s.edges.emplace_back(a, b);
            return s;
        }
    }
    throw precondition_error("unknown pattern");
}

struct SubdivSearch {
    const Multigraph& g;
    const PatternSpec& spec;
    std::vector<std::vector<int>> adj;
    std::vector<int> branch;       // pattern vertex -> g vertex
    std::vector<char> taken;       // g vertex used as branch or path interior
    std::vector<std::vector<int>> paths;

    bool paths_dfs(size_t edge_idx) {
        if (edge_idx == spec.edges.size()) return true;
        auto [pa, pb] = spec.edges[edge_idx];
        int a = branch[static_cast<size_t>(pa)], b = branch[static_cast<size_t>(pb)];
        std::vector<int> path{a};
        return walk_dfs(edge_idx, a, b, path);
    }

    bool walk_dfs(size_t edge_idx, int cur, int goal, std::vector<int>& path) {
        for (int w : adj[static_cast<size_t>(cur)]) {
            if (w == goal) {
                path.push_back(goal);
                paths.push_back(path);
                if (paths_dfs(edge_idx + 1)) return true;
                paths.pop_back();
                path.pop_back();
                continue;
            }
            if (taken[static_cast<size_t>(w)]) continue;
            taken[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            if (walk_dfs(edge_idx, w, goal, path)) return true;
            path.pop_back();
            taken[static_cast<size_t>(w)] = 0;
        }
        return false;
    }
};

// Enumerates ascending branch assignments compatible with the pattern's
// part structure (combinations within a part; K33's two parts dedup by
// smallest member).
void assignments(const Multigraph& g, SubdivisionPattern p, const PatternSpec& spec,
                 const std::vector<int>& deg, std::vector<std::vector<int>>& out) {
    const int n = g.order();
    std::vector<int> ok;
    for (int v = 0; v < n; v++) ok.push_back(v);
    auto fits = [&](int v, int pv) { return deg[static_cast<size_t>(v)] >= spec.degree[static_cast<size_t>(pv)]; };

    if (p == SubdivisionPattern::K4 || p == SubdivisionPattern::K5) {
        int k = spec.vertices;
        std::vector<int> comb;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(comb.size()) == k) {
                out.push_back(comb);
                return;
            }
            for (int v = start; v < n; v++)
                if (fits(v, 0)) {
                    comb.push_back(v);
                    rec(v + 1);
                    comb.pop_back();
                }
        };
        rec(0);
        return;
    }
    // bipartite patterns: sides (0..s1-1) and (s1..)
    int s1 = (p == SubdivisionPattern::K23) ? 2 : 3;
    int s2 = spec.vertices - s1;
    std::vector<std::vector<int>> sideA, sideB;
    std::vector<int> comb;
    std::function<void(int, int, std::vector<std::vector<int>>&, int)> rec =
        [&](int start, int k, std::vector<std::vector<int>>& dst, int pv) {
            if (static_cast<int>(comb.size()) == k) {
                dst.push_back(comb);
                return;
            }
            for (int v = start; v < n; v++)
                if (fits(v, pv)) {
                    comb.push_back(v);
                    rec(v + 1, k, dst, pv);
                    comb.pop_back();
                }
        };
    rec(0, s1, sideA, 0);
    rec(0, s2, sideB, s1);
    for (const auto& a : sideA)
        for (const auto& b : sideB) {
            bool disjoint = true;
            for (int v : a)
                if (std::find(b.begin(), b.end(), v) != b.end()) disjoint = false;
            if (!disjoint) continue;
            if (p == SubdivisionPattern::K33 && a[0] > b[0]) continue;  // sides interchangeable
            std::vector<int> asg = a;
            asg.insert(asg.end(), b.begin(), b.end());
            out.push_back(asg);
        }
}

}  // namespace

std::optional<Subdivision> find_subdivision(const Multigraph& g, SubdivisionPattern p) {
    if (!g.is_simple()) throw precondition_error("find_subdivision requires a simple graph");
    PatternSpec spec = spec_for(p);
    if (g.order() < spec.vertices) return std::nullopt;
    std::vector<int> deg(static_cast<size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        deg[static_cast<size_t>(e.u)]++;
        deg[static_cast<size_t>(e.v)]++;
    }
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.order()));
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<std::vector<int>> asgs;
    assignments(g, p, spec, deg, asgs);
    for (const auto& asg : asgs) {
        SubdivSearch s{g, spec, adj, asg,
                       std::vector<char>(static_cast<size_t>(g.order()), 0), {}};
        for (int v : asg) s.taken[static_cast<size_t>(v)] = 1;
        if (s.paths_dfs(0))
            return Subdivision{p, asg, spec.edges, s.paths};
    }
    return std::nullopt;
}

bool is_valid_subdivision(const Multigraph& g, const Subdivision& s) {
    PatternSpec spec = spec_for(s.pattern);
    if (static_cast<int>(s.branch_vertices.size()) != spec.vertices) return false;
    if (s.paths.size() != spec.edges.size()) return false;
    std::vector<char> interior_used(static_cast<size_t>(g.order()), 0);
    for (int v : s.branch_vertices) {
        if (v < 0 || v >= g.order()) return false;
        interior_used[static_cast<size_t>(v)] = 1;
    }
    for (size_t i = 0; i < s.paths.size(); i++) {
        const auto& path = s.paths[i];
        auto [pa, pb] = spec.edges[i];
        if (path.size() < 2) return false;
        if (path.front() != s.branch_vertices[static_cast<size_t>(pa)]) return false;
        if (path.back() != s.branch_vertices[static_cast<size_t>(pb)]) return false;
        for (size_t j = 0; j + 1 < path.size(); j++)
            if (!g.adjacent(path[j], path[j + 1])) return false;
        for (size_t j = 1; j + 1 < path.size(); j++) {
            int v = path[j];
            if (interior_used[static_cast<size_t>(v)]) return false;
            interior_used[static_cast<size_t>(v)] = 1;
        }
    }
    return true;
}

}  // namespace trunkit
