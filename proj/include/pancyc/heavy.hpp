#pragma once

// Degree-threshold predicates. Every "d >= (n+i)/2" comparison is done as
// 2*d >= n+i so odd orders stay exact.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pancyc/graph.hpp"
#include "pancyc/graph_io.hpp"
#include "pancyc/pattern.hpp"

namespace pancyc {

inline bool is_heavy(const Graph& g, int v) { return 2 * g.degree(v) >= g.order(); }
inline bool is_super_heavy(const Graph& g, int v) { return 2 * g.degree(v) >= g.order() + 1; }

inline bool is_heavy_pair(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("heavy pair needs two distinct vertices");
    return g.degree(u) + g.degree(v) >= g.order();
}

inline bool is_super_heavy_pair(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("heavy pair needs two distinct vertices");
    return g.degree(u) + g.degree(v) >= g.order() + 1;
}

/// A pair at distance 2 inside an induced copy (or inside G, for Fan's
/// condition) whose larger host degree misses the bound 2*max >= n+i.
struct Violation {
    VertexSet copy;
    std::pair<int, int> pair;
    std::pair<int, int> degrees;
    int n = 0;
    int i = 0;

    int required() const { return n + i; }

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// "copy={0,1,2,3} pair=(1,2) deg=(1,1) need 2*max>=5"
inline std::string format_violation(const Violation& v) {
    return "copy=" + format_set(v.copy.vertices()) + " pair=(" + std::to_string(v.pair.first) + "," +
           std::to_string(v.pair.second) + ") deg=(" + std::to_string(v.degrees.first) + "," +
           std::to_string(v.degrees.second) + ") need 2*max>=" + std::to_string(v.required());
}

namespace detail {

inline void check_heaviness(int i) {
    if (i != 0 && i != 1) throw std::invalid_argument("heaviness index must be 0 or 1");
}

template <typename Sink>
void scan_copies(const Graph& g, const Pattern& p, int i, Sink&& sink) {
    check_heaviness(i);
    const int need = g.order() + i;
    for (const auto& copy : find_induced_copies(g, p)) {
        // d_{G[S]}(a, b) == 2: nonadjacent with a common neighbor inside S.
        const auto verts = copy.subset.vertices();
        const Graph h = induced_subgraph(g, copy.subset);
        for (int a = 0; a < h.order(); ++a) {
            for (int b = a + 1; b < h.order(); ++b) {
                if (h.adjacent(a, b) || (h.adj(a) & h.adj(b)) == 0) continue;
                const int u = verts[static_cast<std::size_t>(a)];
                const int v = verts[static_cast<std::size_t>(b)];
                const int du = g.degree(u);
                const int dv = g.degree(v);
                if (2 * std::max(du, dv) < need) {
                    if (!sink(Violation{copy.subset, {u, v}, {du, dv}, g.order(), i})) return;
                }
            }
        }
    }
}

}  // namespace detail

/// All witnesses against G being P-f_i-heavy, ordered by copy mask then pair.
inline std::vector<Violation> violations(const Graph& g, const Pattern& p, int i) {
    std::vector<Violation> out;
    detail::scan_copies(g, p, i, [&](Violation v) {
        out.push_back(v);
        return true;
    });
    return out;
}

/// Every pair at distance 2 inside an induced copy of P has a vertex with
/// 2*d >= n+i (degrees taken in G). Vacuous when G is P-free.
inline bool is_R_fi_heavy(const Graph& g, const Pattern& p, int i) {
    bool ok = true;
    detail::scan_copies(g, p, i, [&](const Violation&) { return ok = false; });
    return ok;
}

/// Pairs at G-distance 2 with 2*max(d(u), d(v)) < n. The copy field holds V(G).
inline std::vector<Violation> fan_violations(const Graph& g) {
    std::vector<Violation> out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v) || (g.adj(u) & g.adj(v)) == 0) continue;
            const int du = g.degree(u);
            const int dv = g.degree(v);
            if (2 * std::max(du, dv) < g.order()) {
                out.push_back(Violation{VertexSet{g.vertices()}, {u, v}, {du, dv}, g.order(), 0});
            }
        }
    }
    return out;
}

inline bool fan_condition(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        if (2 * g.degree(u) >= g.order()) continue;
        for (int v = u + 1; v < g.order(); ++v) {
            if (2 * g.degree(v) >= g.order()) continue;
            if (!g.adjacent(u, v) && (g.adj(u) & g.adj(v)) != 0) return false;
        }
    }
    return true;
}

}  // namespace pancyc
