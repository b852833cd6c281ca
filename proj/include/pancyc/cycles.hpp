#pragma once

// Cycle queries: Hamiltonicity, k-cycles, the full set of cycle lengths and
// pancyclicity.
//
// Two independent routes compute the cycle spectrum:
//
//  * Subset DP. For every vertex set S, paths[S] is the set of vertices v
//    such that some path starts at min(S), visits exactly S and ends at v.
//    S carries a cycle of length |S| >= 3 iff paths[S] meets N(min(S)).
//    One pass over all 2^n sets yields every length at once.
//
//  * Anchored backtracking. A k-cycle is grown from its minimum vertex s
//    through vertices above s; the direction is fixed by requiring the
//    second vertex to be below the last one.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pancyc/graph.hpp"
#include "pancyc/graph_io.hpp"

namespace pancyc {

/// Largest order accepted by the subset-DP routines (2^n table entries).
inline constexpr int kMaxDpOrder = 24;

/// Vertex sequence v0 v1 ... v(k-1); consecutive vertices and (v(k-1), v0) adjacent.
using CycleCertificate = std::vector<int>;

inline bool is_valid_cycle(const Graph& g, const CycleCertificate& c) {
    if (c.size() < 3 || c.size() > static_cast<std::size_t>(g.order())) return false;
    Mask seen = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int v = c[i];
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
        if (!g.adjacent(v, c[(i + 1) % c.size()])) return false;
    }
    return true;
}

struct CycleSpectrum {
    int order = 0;
    /// present[k] for k in 0..order; entries below 3 stay false.
    std::vector<bool> present;
    /// certificates[k] non-empty iff requested and present[k].
    std::vector<CycleCertificate> certificates;

    bool has(int k) const { return k >= 0 && k <= order && present[static_cast<std::size_t>(k)]; }

    std::vector<int> lengths() const {
        std::vector<int> out;
        for (int k = 3; k <= order; ++k) {
            if (has(k)) out.push_back(k);
        }
        return out;
    }

    std::vector<int> missing() const {
        std::vector<int> out;
        for (int k = 3; k <= order; ++k) {
            if (!has(k)) out.push_back(k);
        }
        return out;
    }

    bool pancyclic() const { return missing().empty(); }

    friend bool operator==(const CycleSpectrum& a, const CycleSpectrum& b) {
        return a.order == b.order && a.present == b.present;
    }
};

/// "n=10 lengths={5,6,8,9} missing={3,4,7,10}"
inline std::string format_spectrum(const CycleSpectrum& s) {
    return "n=" + std::to_string(s.order) + " lengths=" + format_set(s.lengths()) +
           " missing=" + format_set(s.missing());
}

namespace detail {

inline void require_cycle_order(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("cycle queries need n >= 3");
}

inline void require_dp_order(const Graph& g) {
    if (g.order() > kMaxDpOrder) {
        throw std::length_error("subset DP supports n <= " + std::to_string(kMaxDpOrder));
    }
}

// Hamiltonian-path table anchored at vertex 0. Index: mask of vertices 1..n-1
// shifted down by one. Entry: vertices v such that a path from 0 covers
// {0} + subset and ends at v.
inline std::vector<Mask> anchored_path_table(const Graph& g) {
    const int n = g.order();
    const std::size_t size = std::size_t{1} << (n - 1);
    std::vector<Mask> ends(size, 0);
    ends[0] = bit(0);
    for (std::size_t sub = 1; sub < size; ++sub) {
        const Mask full = (static_cast<Mask>(sub) << 1) | 1u;
        Mask e = 0;
        for_each_bit(full & ~Mask{1}, [&](int w) {
            const Mask prev = full & ~bit(w);
            if (ends[prev >> 1] & g.adj(w)) e |= bit(w);
        });
        ends[sub] = e;
    }
    return ends;
}

// Walks a path table back from `end`; returns the path from the anchor to end.
template <typename Lookup>
std::vector<int> walk_back(const Graph& g, Mask set, int end, int anchor, Lookup&& ends_of) {
    std::vector<int> rev{end};
    while (set != bit(anchor)) {
        const Mask prev_set = set & ~bit(end);
        const int prev = lowest(ends_of(prev_set) & g.adj(end));
        rev.push_back(prev);
        set = prev_set;
        end = prev;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// paths[S] for every S (min-anchored); see the header comment.
inline std::vector<Mask> min_anchored_path_table(const Graph& g) {
    const std::size_t size = std::size_t{1} << g.order();
    std::vector<Mask> ends(size, 0);
    for (std::size_t s = 1; s < size; ++s) {
        const Mask set = static_cast<Mask>(s);
        const int anchor = lowest(set);
        if (set == bit(anchor)) {
            ends[s] = set;
            continue;
        }
        Mask e = 0;
        for_each_bit(set & ~bit(anchor), [&](int w) {
            if (ends[set & ~bit(w)] & g.adj(w)) e |= bit(w);
        });
        ends[s] = e;
    }
    return ends;
}

class CycleSearch {
public:
    CycleSearch(const Graph& g, int k) : g_(g), k_(k) {}

    std::optional<CycleCertificate> run() {
        for (int s = 0; s + k_ <= g_.order(); ++s) {
            anchor_ = s;
            above_ = g_.vertices() & ~full_mask(s + 1);
            path_.assign(1, s);
            if (extend(bit(s))) return path_;
        }
        return std::nullopt;
    }

private:
    bool extend(Mask used) {
        const int last = path_.back();
        if (static_cast<int>(path_.size()) == k_) {
            return (g_.adj(last) & bit(anchor_)) && path_[1] < last;
        }
        const int remaining = k_ - static_cast<int>(path_.size());
        const Mask free = above_ & ~used;
        // The rest of the cycle lives in last's component of the free vertices
        // and must come back to the anchor.
        const Mask reach = reachable_within(g_, last, free | bit(last)) & ~bit(last);
        if (popcount(reach) < remaining || (reach & g_.adj(anchor_)) == 0) return false;
        bool found = false;
        for_each_bit(g_.adj(last) & reach, [&](int w) {
            if (found) return;
            path_.push_back(w);
            if (extend(used | bit(w))) {
                found = true;
                return;
            }
            path_.pop_back();
        });
        return found;
    }

    const Graph& g_;
    int k_;
    int anchor_ = 0;
    Mask above_ = 0;
    std::vector<int> path_;
};

}  // namespace detail

/// A k-cycle by anchored backtracking, lowest indices first; nullopt if none.
inline std::optional<CycleCertificate> has_cycle_of_length(const Graph& g, int k) {
    if (k < 3 || k > g.order()) {
        throw std::out_of_range("cycle length " + std::to_string(k) + " outside 3.." + std::to_string(g.order()));
    }
    return detail::CycleSearch(g, k).run();
}

/// Hamilton cycle starting at vertex 0, rebuilt from the anchored path table.
inline std::optional<CycleCertificate> find_hamilton_cycle(const Graph& g) {
    detail::require_cycle_order(g);
    detail::require_dp_order(g);
    const auto ends = detail::anchored_path_table(g);
    const Mask all = g.vertices();
    const Mask closing = ends[all >> 1] & g.adj(0);
    if (closing == 0) return std::nullopt;
    return detail::walk_back(g, all, lowest(closing), 0, [&](Mask s) { return ends[s >> 1]; });
}

inline bool is_hamiltonian(const Graph& g) {
    detail::require_cycle_order(g);
    detail::require_dp_order(g);
    if (g.min_degree() < 2) return false;
    const auto ends = detail::anchored_path_table(g);
    return (ends[g.vertices() >> 1] & g.adj(0)) != 0;
}

/// Exact spectrum via the subset DP. Certificates come from the first
/// (ascending) vertex set of each length, closed at its lowest end vertex.
inline CycleSpectrum cycle_spectrum(const Graph& g, bool want_certificates = false) {
    detail::require_cycle_order(g);
    detail::require_dp_order(g);
    const int n = g.order();
    CycleSpectrum out{n, std::vector<bool>(static_cast<std::size_t>(n) + 1, false), {}};
    if (want_certificates) out.certificates.resize(static_cast<std::size_t>(n) + 1);
    const auto ends = detail::min_anchored_path_table(g);
    int found = 0;
    for (std::size_t s = 1; s < ends.size() && found < n - 2; ++s) {
        const Mask set = static_cast<Mask>(s);
        const int k = popcount(set);
        if (k < 3 || out.present[static_cast<std::size_t>(k)]) continue;
        const int anchor = lowest(set);
        const Mask closing = ends[s] & g.adj(anchor);
        if (closing == 0) continue;
        out.present[static_cast<std::size_t>(k)] = true;
        ++found;
        if (want_certificates) {
            out.certificates[static_cast<std::size_t>(k)] =
                detail::walk_back(g, set, lowest(closing), anchor, [&](Mask m) { return ends[m]; });
        }
    }
    return out;
}

/// Same spectrum through per-length backtracking, longest lengths first.
inline CycleSpectrum cycle_spectrum_backtracking(const Graph& g, bool want_certificates = false) {
    detail::require_cycle_order(g);
    const int n = g.order();
    CycleSpectrum out{n, std::vector<bool>(static_cast<std::size_t>(n) + 1, false), {}};
    if (want_certificates) out.certificates.resize(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 3; --k) {
        if (auto c = has_cycle_of_length(g, k)) {
            out.present[static_cast<std::size_t>(k)] = true;
            if (want_certificates) out.certificates[static_cast<std::size_t>(k)] = std::move(*c);
        }
    }
    return out;
}

inline bool is_pancyclic(const Graph& g) {
    detail::require_cycle_order(g);
    if (!is_hamiltonian(g)) return false;
    return cycle_spectrum(g).pancyclic();
}

/// Every length k..l present.
inline bool has_cycles_in_range(const Graph& g, int k, int l) {
    if (k < 3 || k > l || l > g.order()) throw std::out_of_range("invalid cycle length range");
    const auto s = cycle_spectrum(g);
    for (int len = k; len <= l; ++len) {
        if (!s.has(len)) return false;
    }
    return true;
}

/// A triangle (u, x, y) with x < y the lowest adjacent pair in N(u).
inline std::optional<CycleCertificate> has_u_triangle(const Graph& g, int u) {
    const Mask nu = g.neighbors(u);
    std::optional<CycleCertificate> out;
    for_each_bit(nu, [&](int x) {
        if (out) return;
        const Mask later = g.adj(x) & nu & ~full_mask(x + 1);
        if (later != 0) out = CycleCertificate{u, x, lowest(later)};
    });
    return out;
}

}  // namespace pancyc
