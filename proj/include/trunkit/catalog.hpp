#ifndef TRUNKIT_CATALOG_HPP
#define TRUNKIT_CATALOG_HPP

#include <string>
#include <vector>

#include "trunkit/multigraph.hpp"

namespace trunkit {

// Standard constructions.
Multigraph complete_graph(int n);
Multigraph complete_multigraph(int n, int multiplicity);  // alpha*K_n
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);  // P_n has n vertices
Multigraph complete_bipartite(int a, int b);
Multigraph star_graph(int leaves);  // K_{1,leaves}, center = 0
Multigraph hypercube_q3();
Multigraph prism_graph(int n);  // C_n box K_2
Multigraph octahedron_graph();
Multigraph petersen_graph();
Multigraph path_prism(int n);  // P_n box K_2

// The named, bit-exact test catalog. Lookup throws precondition_error for
// unknown names.
struct CatalogEntry {
    std::string name;
    Multigraph graph;
};
const std::vector<CatalogEntry>& catalog();
const Multigraph& catalog_graph(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace trunkit

#endif
