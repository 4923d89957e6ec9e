#ifndef TRUNKIT_COLORING_HPP
#define TRUNKIT_COLORING_HPP

#include <vector>

#include "trunkit/coloring_exact.hpp"
#include "trunkit/multigraph.hpp"
#include "trunkit/report.hpp"
#include "trunkit/truncation.hpp"

namespace trunkit {

// Near-1-factorization of odd K_n (circle method): n matchings of size
// (n-1)/2 partitioning the edges; matching i misses exactly vertex i.
std::vector<std::vector<std::pair<int, int>>> near_one_factorization(int n);

// Even n: one perfect matching plus n matchings of size (n-2)/2, obtained
// from the near-1-factorization of K_{n+1} with an apex vertex removed.
// missed[i] records the two vertices matching i misses (the first is i).
struct ApexFactorization {
    std::vector<std::pair<int, int>> perfect;             // the perfect matching
    std::vector<std::vector<std::pair<int, int>>> small;  // n matchings
    std::vector<std::pair<int, int>> missed;              // per small matching
};
ApexFactorization one_factorization_via_apex(int n);

enum class GraphClass { ClassI, ClassII };
GraphClass classify(const Multigraph& g);

// Proper d-edge-coloring of complete_truncation(x) with d = max valency:
// even d colors every matching edge with one fresh color; odd d lifts an
// exact d-edge-coloring of x through near/apex factorizations. Fails when d
// is odd and x is class II.
EdgeColoring class1_truncation_coloring(const Multigraph& x);

// Color classes of the class-I coloring as d perfect matchings of Y.
// Requires regular x.
std::vector<std::vector<int>> one_factorization_of_truncation(const Multigraph& x);

// Cohesive truncation with exact chromatic index k (3 <= k <= index of the
// complete truncation): spanning-path base, then greedy edge additions,
// every step certified by the exact solver.
Truncation chromatic_index_spectrum(const Multigraph& x, int k);

// Cohesive truncation with exact chromatic number k (d = 2 forces k = 2;
// d > 2 allows 3 <= k <= d).
Truncation chromatic_number_spectrum(const Multigraph& x, int k);

// chi(complete truncation) == max valency, exact.
VerificationReport check_chi_of_complete_truncation(const Multigraph& x);

}  // namespace trunkit

#endif
