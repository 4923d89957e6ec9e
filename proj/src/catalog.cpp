#include "trunkit/catalog.hpp"

#include "trunkit/errors.hpp"

namespace trunkit {

Multigraph complete_graph(int n) {
    Multigraph g(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) g.add_edge(u, v);
    return g;
}

Multigraph complete_multigraph(int n, int multiplicity) {
    Multigraph g(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            for (int k = 0; k < multiplicity; k++) g.add_edge(u, v);
    return g;
}

Multigraph cycle_graph(int n) {
    Multigraph g(n);
    for (int v = 0; v < n; v++) g.add_edge(v, (v + 1) % n);
    return g;
}

Multigraph path_graph(int n) {
    Multigraph g(n);
    for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
    return g;
}

Multigraph complete_bipartite(int a, int b) {
    Multigraph g(a + b);
    for (int u = 0; u < a; u++)
        for (int v = 0; v < b; v++) g.add_edge(u, a + v);
    return g;
}

Multigraph star_graph(int leaves) {
    Multigraph g(leaves + 1);
    for (int v = 1; v <= leaves; v++) g.add_edge(0, v);
    return g;
}

Multigraph hypercube_q3() {
    Multigraph g(8);
    for (int u = 0; u < 8; u++)
        for (int b = 0; b < 3; b++) {
            int v = u ^ (1 << b);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

Multigraph prism_graph(int n) {
    Multigraph g(2 * n);
    for (int v = 0; v < n; v++) {
        g.add_edge(v, (v + 1) % n);
        g.add_edge(n + v, n + (v + 1) % n);
        g.add_edge(v, n + v);
    }
    return g;
}

Multigraph octahedron_graph() {
    // K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5).
    Multigraph g(6);
    for (int u = 0; u < 6; u++)
        for (int v = u + 1; v < 6; v++)
            if (u / 2 != v / 2) g.add_edge(u, v);
    return g;
}

Multigraph petersen_graph() {
    Multigraph g(10);
    for (int v = 0; v < 5; v++) {
        g.add_edge(v, (v + 1) % 5);          // outer pentagon
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

Multigraph path_prism(int n) {
    Multigraph g(2 * n);
    for (int v = 0; v + 1 < n; v++) {
        g.add_edge(v, v + 1);
        g.add_edge(n + v, n + v + 1);
    }
    for (int v = 0; v < n; v++) g.add_edge(v, n + v);
    return g;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"k3", complete_graph(3)});
        v.push_back({"k4", complete_graph(4)});
        v.push_back({"k5", complete_graph(5)});
        v.push_back({"k6", complete_graph(6)});
        v.push_back({"2k2", complete_multigraph(2, 2)});
        v.push_back({"3k2", complete_multigraph(2, 3)});
        v.push_back({"c4", cycle_graph(4)});
        v.push_back({"c5", cycle_graph(5)});
        v.push_back({"c6", cycle_graph(6)});
        v.push_back({"p3", path_graph(3)});
        v.push_back({"p4", path_graph(4)});
        v.push_back({"k13", star_graph(3)});
        v.push_back({"k33", complete_bipartite(3, 3)});
        v.push_back({"k23", complete_bipartite(2, 3)});
        v.push_back({"q3", hypercube_q3()});
        v.push_back({"prism", prism_graph(3)});
        v.push_back({"p4k2", path_prism(4)});
        v.push_back({"octahedron", octahedron_graph()});
        v.push_back({"petersen", petersen_graph()});
        return v;
    }();
    return c;
}

const Multigraph& catalog_graph(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e.graph;
    throw precondition_error("unknown catalog graph: " + name);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog()) names.push_back(e.name);
    return names;
}

}  // namespace trunkit
