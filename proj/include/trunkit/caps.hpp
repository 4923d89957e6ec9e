#ifndef TRUNKIT_CAPS_HPP
#define TRUNKIT_CAPS_HPP

#include <atomic>
#include <cstdint>
#include <functional>

namespace trunkit {

// Desk-scale search caps. Exceeding one raises cap_exceeded; the library
// never degrades to a heuristic answer. TRUNKIT_CAP_OVERRIDE raises them
// (see caps_from_env).
struct SearchCaps {
    int hamilton_order = 40;       // hamilton cycle/path oracle
    int chromatic_edges = 50;      // exact chromatic index
    int canonical_order = 16;      // canonical form / isomorphism dedup
    int euler_subgraph_edges = 24; // spanning eulerian subgraph enumeration
};

// Global caps, initialized from the environment once.
const SearchCaps& caps();

// Parses TRUNKIT_CAP_OVERRIDE: either a single integer applied to every cap,
// or a comma list of key=value with keys hamilton, chromatic, canonical,
// eulersub. Values below the defaults are ignored (caps may only be raised).
SearchCaps caps_from_env(const SearchCaps& defaults = SearchCaps{});

// Cooperative cancellation/progress contract for the long-running exact
// searches. Searches poll should_abort between nodes and bump nodes_visited;
// an abort makes the search throw cap_exceeded.
struct SearchControl {
    std::function<bool()> should_abort;            // may be empty
    std::atomic<std::uint64_t> nodes_visited{0};

    bool poll() {
        nodes_visited.fetch_add(1, std::memory_order_relaxed);
        return should_abort && should_abort();
    }
};

}  // namespace trunkit

#endif
