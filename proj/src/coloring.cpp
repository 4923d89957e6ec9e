#include "trunkit/coloring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "trunkit/errors.hpp"

namespace trunkit {

std::vector<std::vector<std::pair<int, int>>> near_one_factorization(int n) {
    if (n % 2 == 0 || n < 3) throw precondition_error("near_one_factorization requires odd n >= 3");
    std::vector<std::vector<std::pair<int, int>>> out(static_cast<size_t>(n));
    for (int i = 0; i < n; i++)
        for (int j = 1; j <= (n - 1) / 2; j++) {
            int a = ((i + j) % n + n) % n;
            int b = ((i - j) % n + n) % n;
            out[static_cast<size_t>(i)].emplace_back(std::min(a, b), std::max(a, b));
        }
    return out;
}

ApexFactorization one_factorization_via_apex(int n) {
    if (n % 2 != 0 || n < 2) throw precondition_error("one_factorization_via_apex requires even n >= 2");
    auto near = near_one_factorization(n + 1);  // apex = vertex n
    ApexFactorization out;
    out.small.resize(static_cast<size_t>(n));
    out.missed.resize(static_cast<size_t>(n));
    for (int i = 0; i <= n; i++) {
        std::vector<std::pair<int, int>> kept;
        int apex_mate = -1;
        for (auto [a, b] : near[static_cast<size_t>(i)]) {
            if (b == n)
                apex_mate = a;
            else if (a == n)
                apex_mate = b;
            else
                kept.emplace_back(a, b);
        }
        if (i == n) {
            out.perfect = kept;  // the matching missing the apex covers K_n
        } else {
            out.small[static_cast<size_t>(i)] = kept;
            out.missed[static_cast<size_t>(i)] = {i, apex_mate};
        }
    }
    return out;
}

GraphClass classify(const Multigraph& g) {
    return chromatic_index_exact(g) == g.max_valency() ? GraphClass::ClassI : GraphClass::ClassII;
}

namespace {

// Proper edge coloring of complete constituent K_c with colors drawn from
// 0..d-2 (c <= d, d even case). Round robin for even c, circle method for
// odd c.
std::vector<std::vector<std::pair<int, int>>> complete_color_classes(int c) {
    std::vector<std::vector<std::pair<int, int>>> classes;
    if (c <= 1) return classes;
    if (c % 2 == 1) {
        return near_one_factorization(c);
    }
    if (c == 2) {
        classes.push_back({{0, 1}});
        return classes;
    }
    // even c: c-1 perfect matchings; fix vertex c-1, rotate the rest
    int r = c - 1;
    for (int i = 0; i < r; i++) {
        std::vector<std::pair<int, int>> m;
        m.emplace_back(std::min(i, c - 1), std::max(i, c - 1));
        for (int j = 1; j <= (c - 2) / 2; j++) {
            int a = ((i + j) % r + r) % r;
            int b = ((i - j) % r + r) % r;
            m.emplace_back(std::min(a, b), std::max(a, b));
        }
        classes.push_back(m);
    }
    return classes;
}

}  // namespace

EdgeColoring class1_truncation_coloring(const Multigraph& x) {
    if (x.has_loops()) throw precondition_error("class1_truncation_coloring: source has a loop");
    const int d = x.max_valency();
    if (d == 0) throw precondition_error("class1_truncation_coloring: empty source");
    Truncation t = complete_truncation(x);
    auto clusters = t.matching.clusters();
    EdgeColoring out;
    out.color.assign(static_cast<size_t>(t.y.size()), -1);
    out.color_count = d;

    // constituent y-edge lookup per cluster
    auto y_con_edge = [&](int a, int b) {
        for (int e = static_cast<int>(t.matching_edges.size()); e < t.y.size(); e++) {
            const Edge& ed = t.y.edge(e);
            if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
        }
        throw precondition_error("internal: missing constituent edge");
    };

    if (d % 2 == 0) {
        // constituents take colors 0..d-2, matching edges the fresh color d-1
        for (int me : t.matching_edges) out.color[static_cast<size_t>(me)] = d - 1;
        for (int v = 0; v < x.order(); v++) {
            const auto& cl = clusters[static_cast<size_t>(v)];
            auto classes = complete_color_classes(static_cast<int>(cl.size()));
            for (size_t c = 0; c < classes.size(); c++)
                for (auto [a, b] : classes[c])
                    out.color[static_cast<size_t>(y_con_edge(cl[static_cast<size_t>(a)],
                                                             cl[static_cast<size_t>(b)]))] =
                        static_cast<int>(c);
        }
        return out;
    }

    // odd d: x must be class I; lift its exact d-edge-coloring
    EdgeColoring xc;
    if (!edge_colorable_with(x, d, &xc))
        throw precondition_error(
            "class1_truncation_coloring: odd maximum valency and class II source");
    // matching edges keep their source colors
    for (int e = 0; e < x.size(); e++)
        out.color[static_cast<size_t>(t.matching_edges[static_cast<size_t>(e)])] =
            xc.color[static_cast<size_t>(e)];

    for (int v = 0; v < x.order(); v++) {
        const auto& cl = clusters[static_cast<size_t>(v)];
        const int c = static_cast<int>(cl.size());
        if (c <= 1) continue;
        // color of the x-edge behind each cluster vertex
        auto edge_color = [&](int local) {
            int y_vertex = cl[static_cast<size_t>(local)];
            return xc.color[static_cast<size_t>(y_vertex / 2)];
        };
        if (c % 2 == 1) {
            auto classes = near_one_factorization(c);
            // matching missing local vertex i takes the color at i's pendant edge
            for (int i = 0; i < c; i++)
                for (auto [a, b] : classes[static_cast<size_t>(i)])
                    out.color[static_cast<size_t>(y_con_edge(cl[static_cast<size_t>(a)],
                                                             cl[static_cast<size_t>(b)]))] =
                        edge_color(i);
        } else {
            ApexFactorization f = one_factorization_via_apex(c);
            // a color absent at v in x
            std::vector<char> used(static_cast<size_t>(d), 0);
            for (int i = 0; i < c; i++) used[static_cast<size_t>(edge_color(i))] = 1;
            int fresh = -1;
            for (int col = 0; col < d; col++)
                if (!used[static_cast<size_t>(col)]) {
                    fresh = col;
                    break;
                }
            for (auto [a, b] : f.perfect)
                out.color[static_cast<size_t>(
                    y_con_edge(cl[static_cast<size_t>(a)], cl[static_cast<size_t>(b)]))] = fresh;
            for (int i = 0; i < c; i++)
                for (auto [a, b] : f.small[static_cast<size_t>(i)])
                    out.color[static_cast<size_t>(y_con_edge(cl[static_cast<size_t>(a)],
                                                             cl[static_cast<size_t>(b)]))] =
                        edge_color(i);
        }
    }
    return out;
}

std::vector<std::vector<int>> one_factorization_of_truncation(const Multigraph& x) {
    if (!x.is_regular())
        throw precondition_error("one_factorization_of_truncation requires a regular source");
    EdgeColoring col = class1_truncation_coloring(x);
    Truncation t = complete_truncation(x);
    std::vector<std::vector<int>> classes(static_cast<size_t>(col.color_count));
    for (int e = 0; e < t.y.size(); e++)
        classes[static_cast<size_t>(col.color[static_cast<size_t>(e)])].push_back(e);
    // each class must be a perfect matching of Y
    for (const auto& cls : classes) {
        std::vector<char> covered(static_cast<size_t>(t.y.order()), 0);
        for (int e : cls) {
            const Edge& ed = t.y.edge(e);
            if (covered[static_cast<size_t>(ed.u)] || covered[static_cast<size_t>(ed.v)])
                throw precondition_error("internal: color class is not a matching");
            covered[static_cast<size_t>(ed.u)] = covered[static_cast<size_t>(ed.v)] = 1;
        }
        for (char cv : covered)
            if (!cv) throw precondition_error("internal: color class misses a vertex");
    }
    return classes;
}

namespace {

// Shared greedy scaffold for the spectrum constructors: start from the
// spanning-path truncation and add constituent edges one at a time
// (lexicographic within the first incomplete cluster) until measure(t) == k.
Truncation spectrum_search(const Multigraph& x, int k, const std::function<int(const Truncation&)>& measure,
                           int step_limit) {
    Truncation t = spanning_path_truncation(x);
    int cur = measure(t);
    int prev = cur;
    while (cur < k) {
        // first cluster that is not yet complete, then lexicographic pair
        bool added = false;
        for (int v = 0; v < x.order() && !added; v++) {
            Multigraph con = t.assignment.constituents[static_cast<size_t>(v)];
            for (int i = 0; i < con.order() && !added; i++)
                for (int j = i + 1; j < con.order() && !added; j++)
                    if (!con.adjacent(i, j)) {
                        ConstituentAssignment ca = t.assignment;
                        ca.constituents[static_cast<size_t>(v)].add_edge(i, j);
                        t = assemble(t.matching, ca);
                        added = true;
                    }
        }
        if (!added)
            throw precondition_error("spectrum constructor: complete truncation reached below k");
        prev = cur;
        cur = measure(t);
        if (cur < prev || cur > prev + 1)
            throw precondition_error("spectrum constructor: non-monotone step");
        if (--step_limit < 0) throw precondition_error("spectrum constructor: step limit");
    }
    if (cur != k) throw precondition_error("spectrum constructor: overshot k");
    return t;
}

}  // namespace

Truncation chromatic_index_spectrum(const Multigraph& x, int k) {
    const int d = x.max_valency();
    if (d <= 2) throw precondition_error("chromatic_index_spectrum requires max valency > 2");
    int cap = chromatic_index_exact(complete_truncation(x).y);
    if (k < 3 || k > cap)
        throw precondition_error("chromatic_index_spectrum: k out of range [3, " +
                                 std::to_string(cap) + "]");
    return spectrum_search(x, k, [](const Truncation& t) { return chromatic_index_exact(t.y); },
                           4 * x.size() * x.size() + 16);
}

Truncation chromatic_number_spectrum(const Multigraph& x, int k) {
    const int d = x.max_valency();
    if (d <= 1) throw precondition_error("chromatic_number_spectrum requires max valency >= 2");
    if (d == 2) {
        if (k != 2) throw precondition_error("chromatic_number_spectrum: d = 2 forces k = 2");
        Truncation t = spanning_path_truncation(x);
        if (chromatic_number_exact(t.y) != 2)
            throw precondition_error("internal: d = 2 truncation not 2-chromatic");
        return t;
    }
    if (k < 3 || k > d)
        throw precondition_error("chromatic_number_spectrum: k out of range [3, " +
                                 std::to_string(d) + "]");
    return spectrum_search(x, k, [](const Truncation& t) { return chromatic_number_exact(t.y); },
                           4 * x.size() * x.size() + 16);
}

VerificationReport check_chi_of_complete_truncation(const Multigraph& x) {
    VerificationReport r;
    r.check = "thm-chromatic-number";
    const int d = x.max_valency();
    if (d <= 1) {
        r.pass = false;
        r.details = "precondition violated: max valency must exceed 1";
        return r;
    }
    Truncation t = complete_truncation(x);
    int chi = chromatic_number_exact(t.y);
    r.lhs = (chi == d);
    r.rhs = true;
    r.pass = (chi == d);
    std::ostringstream os;
    os << "chi(Y) = " << chi << ", max valency = " << d;
    r.details = os.str();
    if (!r.pass) r.certificate = "chi differs from max valency";
    return r;
}

}  // namespace trunkit
