#include "trunkit/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

namespace trunkit {

SearchCaps caps_from_env(const SearchCaps& defaults) {
    SearchCaps c = defaults;
    const char* env = std::getenv("TRUNKIT_CAP_OVERRIDE");
    if (!env || !*env) return c;

    std::string s(env);
    if (s.find('=') == std::string::npos) {
        int v = std::atoi(s.c_str());
        c.hamilton_order = std::max(c.hamilton_order, v);
        c.chromatic_edges = std::max(c.chromatic_edges, v);
        c.canonical_order = std::max(c.canonical_order, v);
        c.euler_subgraph_edges = std::max(c.euler_subgraph_edges, v);
        return c;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        int v = std::atoi(item.c_str() + eq + 1);
        if (key == "hamilton") c.hamilton_order = std::max(c.hamilton_order, v);
        else if (key == "chromatic") c.chromatic_edges = std::max(c.chromatic_edges, v);
        else if (key == "canonical") c.canonical_order = std::max(c.canonical_order, v);
        else if (key == "eulersub") c.euler_subgraph_edges = std::max(c.euler_subgraph_edges, v);
    }
    return c;
}

const SearchCaps& caps() {
    static const SearchCaps c = caps_from_env();
    return c;
}

}  // namespace trunkit
