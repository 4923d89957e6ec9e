#include "trunkit/canonical.hpp"

#include <algorithm>
#include <map>

#include "trunkit/caps.hpp"
#include "trunkit/errors.hpp"

namespace trunkit {

namespace {

// Iterated refinement of vertex classes by (loop count, multiset of
// (neighbor class, multiplicity)). Class ranks are canonical: classes are
// ordered by their invariant signature, so isomorphic graphs get identical
// rank functions.
std::vector<int> refine_classes(const std::vector<std::vector<int>>& mult,
                                const std::vector<int>& loops) {
    const int n = static_cast<int>(mult.size());
    std::vector<int> cls(static_cast<size_t>(n), 0);
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; v++) {
            std::vector<int>& s = sig[static_cast<size_t>(v)];
            s.push_back(cls[static_cast<size_t>(v)]);
            s.push_back(loops[static_cast<size_t>(v)]);
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; u++)
                if (u != v && mult[static_cast<size_t>(v)][static_cast<size_t>(u)] > 0)
                    nb.emplace_back(cls[static_cast<size_t>(u)],
                                    mult[static_cast<size_t>(v)][static_cast<size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            for (auto [c, m] : nb) {
                s.push_back(c);
                s.push_back(m);
            }
        }
        std::map<std::vector<int>, int> rank;
        for (int v = 0; v < n; v++) rank[sig[static_cast<size_t>(v)]] = 0;
        int r = 0;
        for (auto& [k, val] : rank) val = r++;
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; v++) next[static_cast<size_t>(v)] = rank[sig[static_cast<size_t>(v)]];
        if (next == cls) return cls;
        cls = std::move(next);
    }
}

struct CanonSearch {
    int n;
    const std::vector<std::vector<int>>& mult;
    const std::vector<int>& loops;
    const std::vector<int>& cls;
    std::vector<int> placed;          // prefix permutation
    std::vector<char> used;
    std::vector<int> best;            // best flattened encoding
    bool have_best = false;
    std::vector<int> current;         // encoding for the current prefix
    long long nodes = 0;

    // Row for candidate u given current prefix: class rank (descending is
    // canonical because we maximize), loop count, multiplicities to placed.
    std::vector<int> row_for(int u) const {
        std::vector<int> r;
        r.reserve(placed.size() + 2);
        r.push_back(cls[static_cast<size_t>(u)]);
        r.push_back(loops[static_cast<size_t>(u)]);
        for (int p : placed) r.push_back(mult[static_cast<size_t>(u)][static_cast<size_t>(p)]);
        return r;
    }

    void dfs() {
        if (++nodes > 4'000'000) throw cap_exceeded("canonical form search budget exceeded");
        if (static_cast<int>(placed.size()) == n) {
            if (!have_best || current > best) {
                best = current;
                have_best = true;
            }
            return;
        }
        // the maximal completion must take a level-maximal row at each level
        std::vector<int> max_row;
        std::vector<int> cands;
        for (int u = 0; u < n; u++) {
            if (used[static_cast<size_t>(u)]) continue;
            std::vector<int> r = row_for(u);
            if (cands.empty() || r > max_row) {
                max_row = std::move(r);
                cands.assign(1, u);
            } else if (r == max_row) {
                cands.push_back(u);
            }
        }
        // prune against best: compare this level's row with best's row here
        size_t pos = current.size();
        if (have_best) {
            bool prefix_eq = std::equal(current.begin(), current.end(), best.begin());
            if (prefix_eq && pos + max_row.size() <= best.size()) {
                std::vector<int> best_row(best.begin() + static_cast<long>(pos),
                                          best.begin() + static_cast<long>(pos + max_row.size()));
                if (max_row < best_row) return;  // cannot beat nor tie
            }
        }
        // sibling symmetry: if the tied candidates are mutually uniform and
        // look identical to every other unplaced vertex, swapping two of them
        // is an automorphism of the remainder, so one branch suffices
        if (cands.size() > 1) {
            bool interchangeable = true;
            int mu = mult[static_cast<size_t>(cands[0])][static_cast<size_t>(cands[1])];
            for (size_t i = 0; i < cands.size() && interchangeable; i++)
                for (size_t j = i + 1; j < cands.size() && interchangeable; j++)
                    if (mult[static_cast<size_t>(cands[i])][static_cast<size_t>(cands[j])] != mu)
                        interchangeable = false;
            for (int w = 0; w < n && interchangeable; w++) {
                if (used[static_cast<size_t>(w)]) continue;
                if (std::find(cands.begin(), cands.end(), w) != cands.end()) continue;
                int m0 = mult[static_cast<size_t>(cands[0])][static_cast<size_t>(w)];
                for (size_t i = 1; i < cands.size() && interchangeable; i++)
                    if (mult[static_cast<size_t>(cands[i])][static_cast<size_t>(w)] != m0)
                        interchangeable = false;
            }
            if (interchangeable) cands.resize(1);
        }
        for (int u : cands) {
            used[static_cast<size_t>(u)] = 1;
            placed.push_back(u);
            current.insert(current.end(), max_row.begin(), max_row.end());
            dfs();
            current.resize(pos);
            placed.pop_back();
            used[static_cast<size_t>(u)] = 0;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
    const int n = g.order();
    if (n > caps().canonical_order) throw cap_exceeded("canonical form order cap exceeded");
    std::vector<std::vector<int>> mult(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), 0));
    std::vector<int> loops(static_cast<size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        if (e.is_loop())
            loops[static_cast<size_t>(e.u)]++;
        else {
            mult[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)]++;
            mult[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)]++;
        }
    }
    std::vector<int> cls = refine_classes(mult, loops);
    CanonSearch s{n, mult, loops, cls, {}, std::vector<char>(static_cast<size_t>(n), 0),
                  {}, false, {}, 0};
    if (n > 0) s.dfs();

    std::string bytes;
    bytes.push_back(static_cast<char>(n));
    bytes.push_back(static_cast<char>(g.size() & 0xff));
    bytes.push_back(static_cast<char>((g.size() >> 8) & 0xff));
    for (int x : s.best) {
        if (x > 250) throw precondition_error("multiplicity too large for canonical encoding");
        bytes.push_back(static_cast<char>(x));
    }
    return CanonicalForm{bytes};
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace trunkit
