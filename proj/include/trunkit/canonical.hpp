#ifndef TRUNKIT_CANONICAL_HPP
#define TRUNKIT_CANONICAL_HPP

#include <string>

#include "trunkit/multigraph.hpp"

namespace trunkit {

// Byte string identifying a multigraph up to isomorphism (multiplicities and
// loops included): equal forms iff isomorphic. Computed by permutation
// search over the lexicographically greatest adjacency encoding, pruned by
// iterated degree-partition refinement. Order cap applies (canonical_order).
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) = default;
};

CanonicalForm canonical_form(const Multigraph& g);

// Convenience: equal canonical forms (both graphs must fit under the cap).
bool isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace trunkit

#endif
