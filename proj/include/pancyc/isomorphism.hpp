#pragma once

// Small-order isomorphism test: degree-sequence filter, then backtracking
// over vertex assignments that respect degrees and adjacency to the vertices
// already placed. Exponential in the worst case; meant for n <= 12.

#include <algorithm>
#include <array>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) seq.push_back(g.degree(v));
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

namespace detail {

class IsoMatcher {
public:
    IsoMatcher(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {
        // Place high-degree, well-connected vertices of g first.
        order_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        map_.fill(-1);
    }

    bool run() { return extend(0, 0); }

private:
    bool extend(std::size_t depth, Mask used) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        const int dv = g_.degree(v);
        for (int w = 0; w < n_; ++w) {
            if ((used & bit(w)) || h_.degree(w) != dv) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const int u = order_[i];
                ok = g_.adj(v) & bit(u) ? (h_.adj(w) & bit(map_[static_cast<std::size_t>(u)])) != 0
                                        : (h_.adj(w) & bit(map_[static_cast<std::size_t>(u)])) == 0;
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(v)] = w;
            if (extend(depth + 1, used | bit(w))) return true;
        }
        map_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
    std::vector<int> order_;
    std::array<int, kMaxOrder> map_{};
};

}  // namespace detail

/// True iff some bijection maps the edges of g exactly onto the edges of h.
/// Different orders compare unequal rather than erroring.
inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    if (degree_sequence(g) != degree_sequence(h)) return false;
    return detail::IsoMatcher(g, h).run();
}

}  // namespace pancyc
