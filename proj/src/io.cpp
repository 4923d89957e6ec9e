#include "trunkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "trunkit/errors.hpp"

namespace trunkit {

std::string serialize_graph(const Multigraph& g) {
    std::ostringstream os;
    os << "p " << g.order() << " " << g.size() << "\n";
    for (const Edge& e : g.edges()) os << "e " << e.u << " " << e.v << "\n";
    return os.str();
}

Multigraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int order = -1, size = -1;
    Multigraph g;
    int seen_edges = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c" || tag[0] == '#') continue;
        if (tag == "p") {
            if (order >= 0) throw precondition_error("graph file: duplicate p line");
            if (!(ls >> order >> size) || order < 0 || size < 0)
                throw precondition_error("graph file: malformed p line");
            g = Multigraph(order);
        } else if (tag == "e") {
            if (order < 0) throw precondition_error("graph file: e line before p line");
            int u, v;
            if (!(ls >> u >> v)) throw precondition_error("graph file: malformed e line");
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw precondition_error("graph file: endpoint out of range");
            g.add_edge(u, v);
            seen_edges++;
        } else {
            throw precondition_error("graph file: unknown line tag '" + tag + "'");
        }
    }
    if (order < 0) throw precondition_error("graph file: missing p line");
    if (seen_edges != size) throw precondition_error("graph file: edge count mismatch");
    return g;
}

Multigraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw precondition_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

void save_graph(const Multigraph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw precondition_error("cannot write " + path);
    f << serialize_graph(g);
}

std::string serialize_truncation(const Truncation& t) {
    std::ostringstream os;
    os << serialize_graph(t.y);
    for (int v = 0; v < t.y.order(); v++)
        os << "# cluster " << v << " " << t.cluster_of[static_cast<size_t>(v)] << "\n";
    for (int e : t.matching_edges) os << "# matching " << e << "\n";
    return os.str();
}

Truncation parse_truncation(const std::string& text) {
    // split provenance from the graph lines
    std::istringstream is(text);
    std::string line, graph_text;
    std::vector<std::pair<int, int>> cluster_lines;
    std::vector<int> matching_lines;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "#") {
            std::string what;
            ls >> what;
            if (what == "cluster") {
                int yv, sv;
                if (!(ls >> yv >> sv)) throw precondition_error("truncation file: malformed cluster line");
                cluster_lines.emplace_back(yv, sv);
            } else if (what == "matching") {
                int e;
                if (!(ls >> e)) throw precondition_error("truncation file: malformed matching line");
                matching_lines.push_back(e);
            } else {
                throw precondition_error("truncation file: unknown provenance '" + what + "'");
            }
        } else {
            graph_text += line + "\n";
        }
    }
    Multigraph y = parse_graph(graph_text);
    if (y.order() == 0) throw precondition_error("truncation file: empty graph");

    std::vector<int> cluster_of(static_cast<size_t>(y.order()), -1);
    for (auto [yv, sv] : cluster_lines) {
        if (yv < 0 || yv >= y.order() || sv < 0)
            throw precondition_error("truncation file: cluster id out of range");
        if (cluster_of[static_cast<size_t>(yv)] >= 0)
            throw precondition_error("truncation file: duplicate cluster line");
        cluster_of[static_cast<size_t>(yv)] = sv;
    }
    for (int c : cluster_of)
        if (c < 0) throw precondition_error("truncation file: cluster map incomplete");

    const int m = y.order() / 2;
    if (y.order() % 2 != 0) throw precondition_error("truncation file: odd order");
    if (static_cast<int>(matching_lines.size()) != m)
        throw precondition_error("truncation file: wrong matching size");
    for (int i = 0; i < m; i++) {
        if (matching_lines[static_cast<size_t>(i)] != i)
            throw precondition_error("truncation file: not in canonical layout (matching ids)");
        if (i >= y.size())
            throw precondition_error("truncation file: matching edge id out of range");
        const Edge& e = y.edge(i);
        if (std::min(e.u, e.v) != 2 * i || std::max(e.u, e.v) != 2 * i + 1)
            throw precondition_error(
                "truncation file: not in canonical layout (matching edge " + std::to_string(i) +
                " must join vertices " + std::to_string(2 * i) + " and " + std::to_string(2 * i + 1) +
                ")");
    }

    // source order = number of distinct cluster labels, contiguous from 0
    int src_order = *std::max_element(cluster_of.begin(), cluster_of.end()) + 1;
    std::vector<char> present(static_cast<size_t>(src_order), 0);
    for (int c : cluster_of) present[static_cast<size_t>(c)] = 1;
    for (char p : present)
        if (!p) throw precondition_error("truncation file: cluster labels not contiguous");

    // rebuild the labeled matching and the constituents; constituent edges
    // must stay within a cluster
    LabeledMatching lm;
    lm.source_order = src_order;
    for (int i = 0; i < m; i++) {
        const Edge& e = y.edge(i);
        int lu = cluster_of[static_cast<size_t>(std::min(e.u, e.v))];
        int lv = cluster_of[static_cast<size_t>(std::max(e.u, e.v))];
        lm.source_edges.push_back(Edge{std::min(lu, lv), std::max(lu, lv)});
        lm.label.push_back(lu);
        lm.label.push_back(lv);
    }
    // slot 0 must carry the lower label to match excise()
    for (int i = 0; i < m; i++) {
        int l0 = lm.label[static_cast<size_t>(2 * i)], l1 = lm.label[static_cast<size_t>(2 * i + 1)];
        if (l0 > l1)
            throw precondition_error("truncation file: not in canonical layout (slot labels)");
    }
    auto clusters = lm.clusters();
    std::vector<int> local_of(static_cast<size_t>(y.order()), -1);
    for (int v = 0; v < src_order; v++)
        for (size_t i = 0; i < clusters[static_cast<size_t>(v)].size(); i++)
            local_of[static_cast<size_t>(clusters[static_cast<size_t>(v)][i])] = static_cast<int>(i);
    ConstituentAssignment ca;
    for (int v = 0; v < src_order; v++)
        ca.constituents.emplace_back(static_cast<int>(clusters[static_cast<size_t>(v)].size()));
    for (int e = m; e < y.size(); e++) {
        const Edge& ed = y.edge(e);
        if (cluster_of[static_cast<size_t>(ed.u)] != cluster_of[static_cast<size_t>(ed.v)])
            throw precondition_error("truncation file: constituent edge crosses clusters");
        int v = cluster_of[static_cast<size_t>(ed.u)];
        ca.constituents[static_cast<size_t>(v)].add_edge(local_of[static_cast<size_t>(ed.u)],
                                                         local_of[static_cast<size_t>(ed.v)]);
    }
    Truncation t = assemble(lm, ca);
    // assemble() reproduces the canonical layout; the edge lists must agree
    if (t.y.size() != y.size()) throw precondition_error("truncation file: edge list mismatch");
    for (int e = 0; e < y.size(); e++) {
        const Edge& a = t.y.edge(e);
        const Edge& b = y.edge(e);
        if (std::minmax(a.u, a.v) != std::minmax(b.u, b.v))
            throw precondition_error("truncation file: not in canonical layout (edge order)");
    }
    return t;
}

Truncation load_truncation(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw precondition_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_truncation(ss.str());
}

void save_truncation(const Truncation& t, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw precondition_error("cannot write " + path);
    f << serialize_truncation(t);
}

std::string export_dot(const Truncation& t) {
    std::ostringstream os;
    os << "graph truncation {\n";
    auto clusters = t.matching.clusters();
    for (int v = 0; v < t.source.order(); v++) {
        os << "  subgraph cluster_" << v << " {\n";
        os << "    label=\"con(" << v << ")\";\n";
        for (int yv : clusters[static_cast<size_t>(v)]) os << "    n" << yv << ";\n";
        for (int e = static_cast<int>(t.matching_edges.size()); e < t.y.size(); e++) {
            const Edge& ed = t.y.edge(e);
            if (t.cluster_of[static_cast<size_t>(ed.u)] == v &&
                t.cluster_of[static_cast<size_t>(ed.v)] == v)
                os << "    n" << ed.u << " -- n" << ed.v << ";\n";
        }
        os << "  }\n";
    }
    for (int e : t.matching_edges) {
        const Edge& ed = t.y.edge(e);
        os << "  n" << ed.u << " -- n" << ed.v << " [style=bold, color=crimson];\n";
    }
    os << "}\n";
    return os.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; i--) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace trunkit
