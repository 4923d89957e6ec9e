#include "trunkit/traversal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "trunkit/caps.hpp"
#include "trunkit/catalog.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"

namespace trunkit {

bool is_valid_hamilton_decomposition(const Multigraph& host, const HamiltonDecomposition& hd) {
    std::vector<int> use_count(static_cast<size_t>(host.size()), 0);
    for (const Walk& c : hd.cycles) {
        if (!is_hamilton_cycle(host, c)) return false;
        for (int e : c.edges) use_count[static_cast<size_t>(e)]++;
    }
    if (hd.matching) {
        std::vector<char> covered(static_cast<size_t>(host.order()), 0);
        for (int e : *hd.matching) {
            if (e < 0 || e >= host.size()) return false;
            const Edge& ed = host.edge(e);
            if (ed.is_loop()) return false;
            if (covered[static_cast<size_t>(ed.u)] || covered[static_cast<size_t>(ed.v)]) return false;
            covered[static_cast<size_t>(ed.u)] = covered[static_cast<size_t>(ed.v)] = 1;
            use_count[static_cast<size_t>(e)]++;
        }
        for (char c : covered)
            if (!c) return false;
    }
    for (int c : use_count)
        if (c != 1) return false;
    return true;
}

VerificationReport check_euler_theorem(const Truncation& t) {
    if (!is_connected(t.source))
        throw precondition_error("check_euler_theorem: source disconnected");
    VerificationReport r;
    r.check = "thm-eulerian";
    // LHS: every component of Y is eulerian, each certified by Hierholzer.
    bool lhs = true;
    for (const auto& block : components(t.y)) {
        std::vector<int> keep;
        std::vector<char> in_block(static_cast<size_t>(t.y.order()), 0);
        for (int v : block) in_block[static_cast<size_t>(v)] = 1;
        for (int e = 0; e < t.y.size(); e++)
            if (in_block[static_cast<size_t>(t.y.edge(e).u)]) keep.push_back(e);
        Multigraph sub = t.y.edge_subgraph(keep);
        auto tour = euler_tour(sub);
        if (!tour || !is_euler_tour(sub, *tour)) {
            lhs = false;
            break;
        }
    }
    // RHS: X eulerian and every constituent valency odd.
    auto x_tour = euler_tour(t.source);
    bool x_eulerian = x_tour.has_value();
    bool all_odd = true;
    for (const Multigraph& con : t.assignment.constituents)
        for (int v = 0; v < con.order(); v++)
            if (con.valency(v) % 2 == 0) all_odd = false;
    bool rhs = x_eulerian && all_odd;
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = (lhs == rhs);
    std::ostringstream os;
    os << "Y components " << (lhs ? "all eulerian" : "not all eulerian") << "; X "
       << (x_eulerian ? "eulerian" : "not eulerian") << ", constituent valencies "
       << (all_odd ? "all odd" : "not all odd");
    r.details = os.str();
    if (!r.pass) r.certificate = "biconditional violated";
    return r;
}

std::optional<std::vector<int>> spanning_eulerian_subgraph(const Multigraph& x) {
    if (x.size() > caps().euler_subgraph_edges)
        throw cap_exceeded("spanning eulerian subgraph cap exceeded");
    const int n = x.order(), m = x.size();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<int>{};  // the lone vertex is trivially eulerian
    if (!is_connected(x)) return std::nullopt;

    // Spanning tree; fundamental cycle masks for the non-tree edges.
    std::vector<int> parent_edge(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> order;
    auto inc = x.incidence();
    std::vector<int> stack{0};
    seen[0] = 1;
    std::vector<char> tree_edge(static_cast<size_t>(m), 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int e : inc[static_cast<size_t>(v)]) {
            const Edge& ed = x.edge(e);
            if (ed.is_loop()) continue;
            int w = ed.other(v);
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                parent[static_cast<size_t>(w)] = v;
                parent_edge[static_cast<size_t>(w)] = e;
                tree_edge[static_cast<size_t>(e)] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::uint32_t> fundamental;  // one mask per non-tree edge
    std::vector<int> nontree;
    auto tree_path_mask = [&](int u, int v) {
        // XOR of root paths
        std::uint32_t mask = 0;
        std::vector<char> on(static_cast<size_t>(m), 0);
        for (int c = u; parent[static_cast<size_t>(c)] >= 0; c = parent[static_cast<size_t>(c)])
            on[static_cast<size_t>(parent_edge[static_cast<size_t>(c)])] ^= 1;
        for (int c = v; parent[static_cast<size_t>(c)] >= 0; c = parent[static_cast<size_t>(c)])
            on[static_cast<size_t>(parent_edge[static_cast<size_t>(c)])] ^= 1;
        for (int e = 0; e < m; e++)
            if (on[static_cast<size_t>(e)]) mask |= (1u << e);
        return mask;
    };
    for (int e = 0; e < m; e++) {
        if (tree_edge[static_cast<size_t>(e)]) continue;
        nontree.push_back(e);
        const Edge& ed = x.edge(e);
        std::uint32_t mask = (1u << e);
        if (!ed.is_loop()) mask |= tree_path_mask(ed.u, ed.v);
        fundamental.push_back(mask);
    }

    const int c = static_cast<int>(nontree.size());
    for (std::uint64_t sub = 1; sub < (1ull << c); sub++) {
        std::uint32_t mask = 0;
        for (int i = 0; i < c; i++)
            if (sub & (1ull << i)) mask ^= fundamental[static_cast<size_t>(i)];
        // spanning and connected?
        std::vector<int> ids;
        for (int e = 0; e < m; e++)
            if (mask & (1u << e)) ids.push_back(e);
        Multigraph sub_g = x.edge_subgraph(ids);
        std::vector<char> covered(static_cast<size_t>(n), 0);
        int edges_comp = -1;
        auto labels = component_labels(sub_g);
        bool ok = true;
        for (int e = 0; e < sub_g.size() && ok; e++) {
            const Edge& ed = sub_g.edge(e);
            covered[static_cast<size_t>(ed.u)] = covered[static_cast<size_t>(ed.v)] = 1;
            if (edges_comp < 0) edges_comp = labels[static_cast<size_t>(ed.u)];
            if (labels[static_cast<size_t>(ed.u)] != edges_comp) ok = false;
        }
        if (!ok) continue;
        for (int v = 0; v < n && ok; v++)
            if (!covered[static_cast<size_t>(v)]) ok = false;
        if (ok) return ids;
    }
    return std::nullopt;
}

std::optional<Walk> hamilton_cycle_of_complete_truncation(const Multigraph& x) {
    if (!is_connected(x))
        throw precondition_error("hamilton_cycle_of_complete_truncation: source disconnected");
    auto s = spanning_eulerian_subgraph(x);
    if (!s) return std::nullopt;
    Truncation t = complete_truncation(x);
    if (s->empty()) throw precondition_error("degenerate source");
    // Euler tour of the subgraph, then map edge ids back to x.
    std::vector<int> ids = *s;
    std::sort(ids.begin(), ids.end());
    Multigraph sub = x.edge_subgraph(ids);
    auto tour = euler_tour(sub);
    if (!tour) throw precondition_error("internal: eulerian subgraph without a tour");
    Walk w = *tour;
    for (int& e : w.edges) e = ids[static_cast<size_t>(e)];
    return expand_walk(t, w, ExpansionStrategy::SpanningFirstVisit);
}

namespace {

// y end of source edge x_edge carrying label v (u end for loops)
int end_at_label(const Truncation& t, int x_edge, int v) {
    const Edge& me = t.y.edge(t.matching_edges[static_cast<size_t>(x_edge)]);
    if (t.cluster_of[static_cast<size_t>(me.u)] == v) return me.u;
    return me.v;
}

// x-edge joining u and w with the lowest id
int x_edge_between(const Multigraph& x, int u, int w) {
    for (int e = 0; e < x.size(); e++)
        if ((x.edge(e).u == u && x.edge(e).v == w) || (x.edge(e).u == w && x.edge(e).v == u))
            return e;
    return -1;
}

// Spanning path of con(v) from y vertex a to y vertex b (cluster-local
// search, result in y ids).
std::vector<int> spanning_con_path(const Truncation& t, int v, int a, int b) {
    const Multigraph& con = t.assignment.constituents[static_cast<size_t>(v)];
    auto cl = t.cluster(v);
    auto local = [&](int yv) {
        return static_cast<int>(std::lower_bound(cl.begin(), cl.end(), yv) - cl.begin());
    };
    if (con.order() == 1) return {a};
    auto hp = hamilton_path(con, local(a), local(b));
    if (!hp)
        throw precondition_error("constituent lacks a spanning path at vertex " +
                                 std::to_string(v));
    std::vector<int> out;
    for (int li : hp->vertices) out.push_back(cl[static_cast<size_t>(li)]);
    return out;
}

void append_con_path(Walk& walk, const Truncation& t, int v, const std::vector<int>& path_y) {
    // locate constituent y-edges between consecutive path vertices
    for (size_t i = 0; i + 1 < path_y.size(); i++) {
        int found = -1;
        for (int e = 0; e < t.y.size(); e++) {
            if (t.is_matching_edge(e)) continue;
            const Edge& ed = t.y.edge(e);
            if ((ed.u == path_y[i] && ed.v == path_y[i + 1]) ||
                (ed.v == path_y[i] && ed.u == path_y[i + 1])) {
                found = e;
                break;
            }
        }
        if (found < 0) throw precondition_error("internal: missing constituent edge");
        walk.edges.push_back(found);
        walk.vertices.push_back(path_y[i + 1]);
    }
    (void)v;
}

bool constituent_hamilton_connected(const Multigraph& con) {
    if (con.order() <= 1) return true;
    for (int a = 0; a < con.order(); a++)
        for (int b = a + 1; b < con.order(); b++)
            if (!hamilton_path(con, a, b)) return false;
    return true;
}

}  // namespace

Walk hamilton_connected_path(const Truncation& t, int x, int y) {
    const Multigraph& src = t.source;
    const int n = src.order();
    if (n <= 3) throw precondition_error("hamilton_connected_path requires source K_n with n > 3");
    if (!src.is_simple()) throw precondition_error("source must be the complete graph K_n");
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (!src.adjacent(a, b))
                throw precondition_error("source must be the complete graph K_n");
    if (x == y) throw precondition_error("hamilton_connected_path requires x != y");
    for (int v = 0; v < n; v++)
        if (!constituent_hamilton_connected(t.assignment.constituents[static_cast<size_t>(v)]))
            throw precondition_error("constituent at vertex " + std::to_string(v) +
                                     " is not Hamilton-connected");

    int u = t.cluster_of[static_cast<size_t>(x)];
    int v = t.cluster_of[static_cast<size_t>(y)];

    auto other_label = [&](int y_vertex) {
        for (int me : t.matching_edges) {
            const Edge& ed = t.y.edge(me);
            if (ed.u == y_vertex) return t.cluster_of[static_cast<size_t>(ed.v)];
            if (ed.v == y_vertex) return t.cluster_of[static_cast<size_t>(ed.u)];
        }
        throw precondition_error("vertex not on any matching edge");
    };

    if (u != v) {
        int w = other_label(x);  // x corresponds to the edge [u, w]
        int z = other_label(y);  // y corresponds to the edge [z, v]
        // Hamilton path of K_n from u to v, second vertex != w, second-last != z.
        std::vector<int> middle;
        for (int p = 0; p < n; p++)
            if (p != u && p != v) middle.push_back(p);
        std::vector<int> ordered;
        bool found = false;
        for (int first : middle) {
            if (first == w) continue;
            for (int last : middle) {
                if (last == z || last == first) continue;
                ordered = {first};
                for (int p : middle)
                    if (p != first && p != last) ordered.push_back(p);
                ordered.push_back(last);
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) {
            // Only reachable when n == 4 and w == z sits in the middle: the
            // proof's path does not exist, but the graph still has one.
            auto hp = hamilton_path(t.y, x, y);
            if (!hp) throw precondition_error("no hamilton path found (exhaustive)");
            return *hp;
        }
        std::vector<int> p_seq{u};
        p_seq.insert(p_seq.end(), ordered.begin(), ordered.end());
        p_seq.push_back(v);

        Walk out;
        out.closed = false;
        out.vertices.push_back(x);
        // con(u): from x to the end of [u, first]
        int xprime = end_at_label(t, x_edge_between(src, u, p_seq[1]), u);
        append_con_path(out, t, u, spanning_con_path(t, u, x, xprime));
        for (size_t i = 1; i + 1 < p_seq.size(); i++) {
            int prev = p_seq[i - 1], cur = p_seq[i], nxt = p_seq[i + 1];
            int e_in = x_edge_between(src, prev, cur);
            int e_out = x_edge_between(src, cur, nxt);
            out.edges.push_back(t.matching_edges[static_cast<size_t>(e_in)]);
            out.vertices.push_back(end_at_label(t, e_in, cur));
            append_con_path(out, t, cur,
                            spanning_con_path(t, cur, end_at_label(t, e_in, cur),
                                              end_at_label(t, e_out, cur)));
        }
        int e_last = x_edge_between(src, p_seq[p_seq.size() - 2], v);
        out.edges.push_back(t.matching_edges[static_cast<size_t>(e_last)]);
        out.vertices.push_back(end_at_label(t, e_last, v));
        append_con_path(out, t, v, spanning_con_path(t, v, end_at_label(t, e_last, v), y));
        return out;
    }

    // Same constituent con(u): route through every other cluster and re-enter.
    const Multigraph& con = t.assignment.constituents[static_cast<size_t>(u)];
    auto cl = t.cluster(u);
    auto local = [&](int yv) {
        return static_cast<int>(std::lower_bound(cl.begin(), cl.end(), yv) - cl.begin());
    };
    auto q = hamilton_path(con, local(x), local(y));
    if (!q) throw precondition_error("constituent lost its spanning path");
    std::vector<int> q_y;
    for (int li : q->vertices) q_y.push_back(cl[static_cast<size_t>(li)]);
    int w = other_label(y);                       // y corresponds to [u, w]
    int zv = q_y[q_y.size() - 2];                 // vertex preceding y on Q
    int z_label = other_label(zv);                // z corresponds to [u, z_label]

    // Hamilton path of K_n from u to w starting with the edge [u, z_label].
    std::vector<int> p_seq{u, z_label};
    for (int p = 0; p < n; p++)
        if (p != u && p != z_label && p != w) p_seq.push_back(p);
    p_seq.push_back(w);

    Walk out;
    out.closed = false;
    out.vertices.push_back(x);
    // Q minus its last vertex: x -> z covering con(u) except y.
    for (size_t i = 0; i + 2 < q_y.size(); i++) {
        int found = -1;
        for (int e = 0; e < t.y.size(); e++) {
            if (t.is_matching_edge(e)) continue;
            const Edge& ed = t.y.edge(e);
            if ((ed.u == q_y[i] && ed.v == q_y[i + 1]) || (ed.v == q_y[i] && ed.u == q_y[i + 1])) {
                found = e;
                break;
            }
        }
        if (found < 0) throw precondition_error("internal: missing constituent edge");
        out.edges.push_back(found);
        out.vertices.push_back(q_y[i + 1]);
    }
    for (size_t i = 1; i + 1 < p_seq.size(); i++) {
        int prev = p_seq[i - 1], cur = p_seq[i], nxt = p_seq[i + 1];
        int e_in = x_edge_between(src, prev, cur);
        int e_out = x_edge_between(src, cur, nxt);
        out.edges.push_back(t.matching_edges[static_cast<size_t>(e_in)]);
        out.vertices.push_back(end_at_label(t, e_in, cur));
        append_con_path(out, t, cur,
                        spanning_con_path(t, cur, end_at_label(t, e_in, cur),
                                          end_at_label(t, e_out, cur)));
    }
    // into con(w), spanning path ending at the end of [u, w], then the edge to y
    int e_in_w = x_edge_between(src, p_seq[p_seq.size() - 2], w);
    int e_uw = x_edge_between(src, u, w);
    out.edges.push_back(t.matching_edges[static_cast<size_t>(e_in_w)]);
    out.vertices.push_back(end_at_label(t, e_in_w, w));
    append_con_path(out, t, w,
                    spanning_con_path(t, w, end_at_label(t, e_in_w, w), end_at_label(t, e_uw, w)));
    out.edges.push_back(t.matching_edges[static_cast<size_t>(e_uw)]);
    out.vertices.push_back(y);
    return out;
}

namespace {

int kn_edge_id(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

// Walecki zigzag on the circle Z_{2k}: 0, 1, -1, 2, -2, ...
std::vector<int> zigzag(int k) {
    const int c = 2 * k;
    std::vector<int> s{0};
    for (int j = 1; j < c; j++) {
        int prev = s.back();
        int step = (j % 2 == 1) ? j : -j;
        s.push_back(((prev + step) % c + c) % c);
    }
    return s;
}

Walk cycle_walk(int n, const std::vector<int>& verts) {
    Walk w;
    w.closed = true;
    w.vertices = verts;
    w.vertices.push_back(verts.front());
    for (size_t i = 0; i + 1 < w.vertices.size(); i++)
        w.edges.push_back(kn_edge_id(n, w.vertices[i], w.vertices[i + 1]));
    return w;
}

}  // namespace

HamiltonDecomposition walecki_cycle_decomposition(int n) {
    if (n % 2 == 0 || n < 3)
        throw precondition_error("walecki_cycle_decomposition requires odd n >= 3");
    const int k = (n - 1) / 2;
    const int hub = n - 1;
    std::vector<int> s = zigzag(k);
    HamiltonDecomposition hd;
    for (int i = 0; i < k; i++) {
        std::vector<int> verts{hub};
        for (int t : s) verts.push_back((t + i) % (2 * k));
        hd.cycles.push_back(cycle_walk(n, verts));
    }
    return hd;
}

PathDecomposition walecki_path_decomposition(int n,
                                             const std::vector<std::pair<int, int>>& endpoint_pairs,
                                             int distinguished) {
    if (n < 2) throw precondition_error("walecki_path_decomposition requires n >= 2");
    const bool odd = (n % 2 != 0);
    const int pair_count = odd ? (n - 1) / 2 : n / 2;
    if (static_cast<int>(endpoint_pairs.size()) != pair_count)
        throw precondition_error("malformed pairing: wrong pair count");
    {
        std::vector<char> used(static_cast<size_t>(n), 0);
        if (odd) {
            if (distinguished < 0 || distinguished >= n)
                throw precondition_error("malformed pairing: distinguished vertex out of range");
            used[static_cast<size_t>(distinguished)] = 1;
        } else if (distinguished != -1) {
            throw precondition_error("distinguished vertex applies to odd n only");
        }
        for (auto [a, b] : endpoint_pairs) {
            if (a < 0 || b < 0 || a >= n || b >= n || a == b)
                throw precondition_error("malformed pairing: bad pair");
            if (used[static_cast<size_t>(a)] || used[static_cast<size_t>(b)])
                throw precondition_error("malformed pairing: vertex reused");
            used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = 1;
        }
        for (char c : used)
            if (!c) throw precondition_error("malformed pairing: vertex missing");
    }

    PathDecomposition out;
    if (n == 2) {
        // single edge path
        Walk w;
        w.closed = false;
        w.vertices = {endpoint_pairs[0].first, endpoint_pairs[0].second};
        w.edges = {0};
        out.paths.push_back(w);
        return out;
    }

    if (!odd) {
        // Walecki cycles of K_{n+1} with the hub removed: path i runs from
        // i to k+i on the circle Z_n.
        const int k = n / 2;
        std::vector<int> s = zigzag(k);
        // construction endpoints: (s.front()+i, s.back()+i) = (i, k+i)
        std::vector<int> relabel(static_cast<size_t>(n), -1);
        for (int i = 0; i < k; i++) {
            relabel[static_cast<size_t>((s.front() + i) % n)] = endpoint_pairs[static_cast<size_t>(i)].first;
            relabel[static_cast<size_t>((s.back() + i) % n)] = endpoint_pairs[static_cast<size_t>(i)].second;
        }
        for (int i = 0; i < k; i++) {
            Walk w;
            w.closed = false;
            for (int t : s) w.vertices.push_back(relabel[static_cast<size_t>((t + i) % n)]);
            for (size_t j = 0; j + 1 < w.vertices.size(); j++)
                w.edges.push_back(kn_edge_id(n, w.vertices[j], w.vertices[j + 1]));
            out.paths.push_back(w);
        }
        return out;
    }

    // Odd n: cycles of K_n minus their diameter edges; the removed edges form
    // the matching, missing the hub.
    const int k = (n - 1) / 2;
    const int hub = n - 1;
    std::vector<int> s = zigzag(k);
    // cycle i's diameter edge joins s[k-1]+i and s[k]+i
    std::vector<int> relabel(static_cast<size_t>(n), -1);
    relabel[static_cast<size_t>(hub)] = distinguished;
    for (int i = 0; i < k; i++) {
        relabel[static_cast<size_t>((s[static_cast<size_t>(k - 1)] + i) % (2 * k))] =
            endpoint_pairs[static_cast<size_t>(i)].first;
        relabel[static_cast<size_t>((s[static_cast<size_t>(k)] + i) % (2 * k))] =
            endpoint_pairs[static_cast<size_t>(i)].second;
    }
    for (int i = 0; i < k; i++) {
        // path: s[k]+i ... s[2k-1]+i, hub, s[0]+i ... s[k-1]+i
        std::vector<int> verts;
        for (int j = k; j < 2 * k; j++) verts.push_back((s[static_cast<size_t>(j)] + i) % (2 * k));
        verts.push_back(hub);
        for (int j = 0; j < k; j++) verts.push_back((s[static_cast<size_t>(j)] + i) % (2 * k));
        Walk w;
        w.closed = false;
        for (int t : verts) w.vertices.push_back(relabel[static_cast<size_t>(t)]);
        std::reverse(w.vertices.begin(), w.vertices.end());  // endpoints (first, second)
        for (size_t j = 0; j + 1 < w.vertices.size(); j++)
            w.edges.push_back(kn_edge_id(n, w.vertices[j], w.vertices[j + 1]));
        out.paths.push_back(w);
        out.matching.push_back({endpoint_pairs[static_cast<size_t>(i)].first,
                                endpoint_pairs[static_cast<size_t>(i)].second});
    }
    return out;
}

HamiltonDecomposition hamilton_decompose_truncation(const Multigraph& x,
                                                    const HamiltonDecomposition& hd) {
    if (x.has_loops()) throw precondition_error("source must be loopless");
    if (!is_valid_hamilton_decomposition(x, hd))
        throw precondition_error("invalid hamilton decomposition of the source");
    Truncation t = complete_truncation(x);
    const int nc = static_cast<int>(hd.cycles.size());
    const bool with_matching = hd.matching.has_value();

    // Per source vertex: cycle passage 2-sets (y vertices) and the
    // distinguished vertex from the X-matching, in cluster-local indices.
    auto clusters = t.matching.clusters();
    std::vector<std::vector<std::pair<int, int>>> local_pairs(
        static_cast<size_t>(x.order()));  // per vertex, per cycle
    for (size_t vi = 0; vi < local_pairs.size(); vi++)
        local_pairs[vi].resize(static_cast<size_t>(nc), {-1, -1});
    auto local_of = [&](int v, int yv) {
        const auto& cl = clusters[static_cast<size_t>(v)];
        return static_cast<int>(std::lower_bound(cl.begin(), cl.end(), yv) - cl.begin());
    };
    for (int i = 0; i < nc; i++) {
        const Walk& cyc = hd.cycles[static_cast<size_t>(i)];
        const int L = cyc.length();
        for (int j = 0; j < L; j++) {
            int v = cyc.vertices[static_cast<size_t>(j)];
            int e_in = cyc.edges[static_cast<size_t>((j - 1 + L) % L)];
            int e_out = cyc.edges[static_cast<size_t>(j)];
            local_pairs[static_cast<size_t>(v)][static_cast<size_t>(i)] = {
                local_of(v, end_at_label(t, e_in, v)), local_of(v, end_at_label(t, e_out, v))};
        }
    }
    std::vector<int> distinguished(static_cast<size_t>(x.order()), -1);
    if (with_matching)
        for (int e : *hd.matching) {
            const Edge& ed = x.edge(e);
            distinguished[static_cast<size_t>(ed.u)] = local_of(ed.u, end_at_label(t, e, ed.u));
            distinguished[static_cast<size_t>(ed.v)] = local_of(ed.v, end_at_label(t, e, ed.v));
        }

    // Decompose each constituent with Walecki paths matching the 2-sets.
    // con_paths[v][i] = spanning path of con(v) in y ids, oriented arbitrarily.
    std::vector<std::vector<std::vector<int>>> con_paths(static_cast<size_t>(x.order()));
    std::vector<std::vector<std::pair<int, int>>> con_matchings(static_cast<size_t>(x.order()));
    for (int v = 0; v < x.order(); v++) {
        const auto& cl = clusters[static_cast<size_t>(v)];
        int d = static_cast<int>(cl.size());
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < nc; i++) pairs.push_back(local_pairs[static_cast<size_t>(v)][static_cast<size_t>(i)]);
        PathDecomposition pd =
            walecki_path_decomposition(d, pairs, with_matching ? distinguished[static_cast<size_t>(v)] : -1);
        for (const Walk& p : pd.paths) {
            std::vector<int> yseq;
            for (int li : p.vertices) yseq.push_back(cl[static_cast<size_t>(li)]);
            con_paths[static_cast<size_t>(v)].push_back(yseq);
        }
        for (auto [a, b] : pd.matching)
            con_matchings[static_cast<size_t>(v)].push_back(
                {cl[static_cast<size_t>(a)], cl[static_cast<size_t>(b)]});
    }

    // Constituent y-edge lookup.
    auto y_con_edge = [&](int a, int b) {
        for (int e = static_cast<int>(t.matching_edges.size()); e < t.y.size(); e++) {
            const Edge& ed = t.y.edge(e);
            if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
        }
        throw precondition_error("internal: missing constituent edge");
    };

    HamiltonDecomposition out;
    for (int i = 0; i < nc; i++) {
        const Walk& cyc = hd.cycles[static_cast<size_t>(i)];
        const int L = cyc.length();
        Walk w;
        w.closed = true;
        int start = end_at_label(t, cyc.edges[0], cyc.vertices[0]);
        w.vertices.push_back(start);
        for (int j = 0; j < L; j++) {
            int e = cyc.edges[static_cast<size_t>(j)];
            int to = cyc.vertices[static_cast<size_t>(j + 1)];
            w.edges.push_back(t.matching_edges[static_cast<size_t>(e)]);
            int arr = end_at_label(t, e, to);
            w.vertices.push_back(arr);
            // constituent path i at `to`, oriented to start at arr
            std::vector<int> path = con_paths[static_cast<size_t>(to)][static_cast<size_t>(i)];
            if (path.back() == arr) std::reverse(path.begin(), path.end());
            if (path.front() != arr) throw precondition_error("internal: passage mismatch");
            for (size_t p = 0; p + 1 < path.size(); p++) {
                w.edges.push_back(y_con_edge(path[p], path[p + 1]));
                w.vertices.push_back(path[p + 1]);
            }
        }
        out.cycles.push_back(std::move(w));
    }
    if (with_matching) {
        std::vector<int> ymatch;
        for (int e : *hd.matching) ymatch.push_back(t.matching_edges[static_cast<size_t>(e)]);
        for (int v = 0; v < x.order(); v++)
            for (auto [a, b] : con_matchings[static_cast<size_t>(v)]) ymatch.push_back(y_con_edge(a, b));
        std::sort(ymatch.begin(), ymatch.end());
        out.matching = ymatch;
    }
    return out;
}

std::optional<HamiltonDecomposition> find_hamilton_decomposition(const Multigraph& x) {
    if (!x.is_regular() || x.order() < 2) return std::nullopt;
    int d = x.valency(0);
    HamiltonDecomposition hd;
    Multigraph rest = x;
    std::vector<int> alive(static_cast<size_t>(x.size()));
    std::iota(alive.begin(), alive.end(), 0);
    while (d >= 2) {
        auto hc = hamilton_cycle(rest);
        if (!hc) return std::nullopt;
        Walk mapped = *hc;
        for (int& e : mapped.edges) e = alive[static_cast<size_t>(e)];
        hd.cycles.push_back(mapped);
        std::vector<char> used(static_cast<size_t>(rest.size()), 0);
        for (int e : hc->edges) used[static_cast<size_t>(e)] = 1;
        std::vector<int> keep, keep_ids;
        for (int e = 0; e < rest.size(); e++)
            if (!used[static_cast<size_t>(e)]) {
                keep.push_back(e);
                keep_ids.push_back(alive[static_cast<size_t>(e)]);
            }
        rest = rest.edge_subgraph(keep);
        alive = keep_ids;
        d -= 2;
    }
    if (d == 1) {
        // remainder must be a perfect matching
        std::vector<char> covered(static_cast<size_t>(x.order()), 0);
        for (const Edge& e : rest.edges()) {
            if (e.is_loop() || covered[static_cast<size_t>(e.u)] || covered[static_cast<size_t>(e.v)])
                return std::nullopt;
            covered[static_cast<size_t>(e.u)] = covered[static_cast<size_t>(e.v)] = 1;
        }
        for (char c : covered)
            if (!c) return std::nullopt;
        hd.matching = alive;
    } else if (rest.size() != 0) {
        return std::nullopt;
    }
    if (!is_valid_hamilton_decomposition(x, hd)) return std::nullopt;
    return hd;
}

}  // namespace trunkit
