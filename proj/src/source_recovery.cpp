#include "trunkit/source_recovery.hpp"

#include <algorithm>
#include <map>

#include "trunkit/canonical.hpp"
#include "trunkit/caps.hpp"
#include "trunkit/errors.hpp"
#include "trunkit/oracles.hpp"

namespace trunkit {

namespace {

Multigraph remove_edges(const Multigraph& g, const std::vector<int>& edge_ids) {
    std::vector<char> drop(static_cast<size_t>(g.size()), 0);
    for (int e : edge_ids) drop[static_cast<size_t>(e)] = 1;
    std::vector<int> keep;
    for (int e = 0; e < g.size(); e++)
        if (!drop[static_cast<size_t>(e)]) keep.push_back(e);
    return g.edge_subgraph(keep);
}

bool matching_is_isolating(const Multigraph& y, const std::vector<int>& m,
                           std::vector<int>* comp_out = nullptr) {
    Multigraph rest = remove_edges(y, m);
    std::vector<int> comp = component_labels(rest);
    for (int e : m) {
        const Edge& ed = y.edge(e);
        if (comp[static_cast<size_t>(ed.u)] == comp[static_cast<size_t>(ed.v)]) return false;
    }
    if (comp_out) *comp_out = comp;
    return true;
}

}  // namespace

std::optional<std::vector<int>> is_truncation_of_reflexive(const Multigraph& y) {
    for (const auto& m : enumerate_perfect_matchings(y)) {
        Multigraph rest = remove_edges(y, m);
        if (rest.is_simple()) return m;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> isolating_perfect_matchings(const Multigraph& y) {
    if (!y.is_simple()) throw precondition_error("isolating matchings are defined on graphs");
    std::vector<std::vector<int>> out;
    for (const auto& m : enumerate_perfect_matchings(y))
        if (matching_is_isolating(y, m)) out.push_back(m);
    return out;
}

SourceCertificate contract_with_blocks(const Multigraph& y, const std::vector<int>& matching,
                                       const std::vector<std::vector<int>>& blocks) {
    std::vector<int> m = matching;
    std::sort(m.begin(), m.end());
    std::vector<int> comp;
    if (!matching_is_isolating(y, m, &comp))
        throw precondition_error("matching is not isolating");
    Multigraph rest = remove_edges(y, m);
    if (!rest.is_simple()) throw precondition_error("Y minus matching is not a graph");

    auto comps = components(rest);
    std::vector<int> block_of(comps.size(), -1);
    for (size_t b = 0; b < blocks.size(); b++)
        for (int c : blocks[b]) {
            if (c < 0 || c >= static_cast<int>(comps.size()) || block_of[static_cast<size_t>(c)] >= 0)
                throw precondition_error("blocks must partition the components");
            block_of[static_cast<size_t>(c)] = static_cast<int>(b);
        }
    for (int b : block_of)
        if (b < 0) throw precondition_error("blocks must partition the components");

    SourceCertificate cert;
    cert.matching = m;
    cert.component_partition = comps;
    cert.blocks = blocks;
    cert.recovered = Multigraph(static_cast<int>(blocks.size()));
    for (int e : m) {
        const Edge& ed = y.edge(e);
        int bu = block_of[static_cast<size_t>(comp[static_cast<size_t>(ed.u)])];
        int bv = block_of[static_cast<size_t>(comp[static_cast<size_t>(ed.v)])];
        if (bu == bv)
            throw precondition_error("matching edge internal to a block");
        cert.recovered.add_edge(std::min(bu, bv), std::max(bu, bv));
    }
    return cert;
}

SourceCertificate contract_to_source(const Multigraph& y, const std::vector<int>& matching) {
    std::vector<int> m = matching;
    std::sort(m.begin(), m.end());
    std::vector<int> comp;
    if (!matching_is_isolating(y, m, &comp))
        throw precondition_error("matching is not isolating");
    Multigraph rest = remove_edges(y, m);
    auto comps = components(rest);
    std::vector<std::vector<int>> singleton_blocks;
    for (size_t c = 0; c < comps.size(); c++) singleton_blocks.push_back({static_cast<int>(c)});
    return contract_with_blocks(y, m, singleton_blocks);
}

namespace {

// Deduplicate certificates by recovered-graph isomorphism. Sources above the
// canonical cap stay uncompared and clear all_compared.
void dedup_into(SourceSet& set, std::vector<SourceCertificate> certs) {
    set.certificate_count = static_cast<int>(certs.size());
    std::vector<CanonicalForm> forms;
    for (auto& c : certs) {
        if (c.recovered.order() > caps().canonical_order) {
            set.all_compared = false;
            set.representatives.push_back(std::move(c));
            continue;
        }
        CanonicalForm f = canonical_form(c.recovered);
        bool dup = false;
        for (const auto& known : forms)
            if (known == f) {
                dup = true;
                break;
            }
        if (!dup) {
            forms.push_back(f);
            set.representatives.push_back(std::move(c));
        }
    }
}

}  // namespace

SourceSet minimal_sources(const Multigraph& y) {
    SourceSet set;
    auto matchings = isolating_perfect_matchings(y);
    set.matching_count = static_cast<int>(matchings.size());
    std::vector<SourceCertificate> certs;
    for (const auto& m : matchings) certs.push_back(contract_to_source(y, m));
    dedup_into(set, std::move(certs));
    return set;
}

namespace {

// All partitions of the components into blocks with no internal matching
// edge: exactly the partitions of the "component graph" into independent
// sets. Restricted growth enumeration.
void partitions_rec(int c, int t, const std::vector<std::vector<char>>& conflict,
                    std::vector<std::vector<int>>& blocks,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (c == t) {
        out.push_back(blocks);
        return;
    }
    // index-based: the recursion appends to `blocks`, which may reallocate
    const size_t level_size = blocks.size();
    for (size_t bi = 0; bi < level_size; bi++) {
        bool ok = true;
        for (int d : blocks[bi])
            if (conflict[static_cast<size_t>(d)][static_cast<size_t>(c)]) ok = false;
        if (!ok) continue;
        blocks[bi].push_back(c);
        partitions_rec(c + 1, t, conflict, blocks, out);
        blocks[bi].pop_back();
    }
    blocks.push_back({c});
    partitions_rec(c + 1, t, conflict, blocks, out);
    blocks.pop_back();
}

}  // namespace

SourceSet coarsened_sources(const Multigraph& y, const SourceCertificate& cert) {
    std::vector<int> comp;
    if (!matching_is_isolating(y, cert.matching, &comp))
        throw precondition_error("certificate matching is not isolating");
    int t = static_cast<int>(cert.component_partition.size());
    std::vector<std::vector<char>> conflict(static_cast<size_t>(t),
                                            std::vector<char>(static_cast<size_t>(t), 0));
    for (int e : cert.matching) {
        const Edge& ed = y.edge(e);
        int cu = comp[static_cast<size_t>(ed.u)], cv = comp[static_cast<size_t>(ed.v)];
        conflict[static_cast<size_t>(cu)][static_cast<size_t>(cv)] = 1;
        conflict[static_cast<size_t>(cv)][static_cast<size_t>(cu)] = 1;
    }
    std::vector<std::vector<std::vector<int>>> parts;
    std::vector<std::vector<int>> blocks;
    partitions_rec(0, t, conflict, blocks, parts);

    SourceSet set;
    set.matching_count = 1;
    std::vector<SourceCertificate> certs;
    for (const auto& p : parts) certs.push_back(contract_with_blocks(y, cert.matching, p));
    dedup_into(set, std::move(certs));
    return set;
}

SourceSet graph_sources(const Multigraph& y) {
    SourceSet set;
    auto matchings = isolating_perfect_matchings(y);
    set.matching_count = static_cast<int>(matchings.size());
    std::vector<SourceCertificate> certs;
    for (const auto& m : matchings) {
        SourceCertificate c = contract_to_source(y, m);
        if (c.recovered.is_simple()) certs.push_back(std::move(c));
    }
    dedup_into(set, std::move(certs));
    return set;
}

bool unique_source_certificate(const Multigraph& y) {
    if (!y.is_simple()) return false;
    auto matchings = isolating_perfect_matchings(y);
    if (matchings.size() != 1) return false;
    SourceCertificate cert = contract_to_source(y, matchings.front());
    int t = static_cast<int>(cert.component_partition.size());
    std::vector<std::vector<char>> joined(static_cast<size_t>(t),
                                          std::vector<char>(static_cast<size_t>(t), 0));
    for (const Edge& e : cert.recovered.edges()) {
        joined[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] = 1;
        joined[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] = 1;
    }
    for (int a = 0; a < t; a++)
        for (int b = a + 1; b < t; b++)
            if (!joined[static_cast<size_t>(a)][static_cast<size_t>(b)]) return false;
    return true;
}

}  // namespace trunkit
