#pragma once

// Labeled graphs on n vertices, one per edge mask. Bit j of the mask is the
// j-th pair in lexicographic order: (0,1), (0,2), ..., (0,n-1), (1,2), ...

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

enum class Prefilter {
    None,
    /// Minimum degree >= 2 and connected: implied by every hypothesis the harness checks.
    MinDegree2Connected,
    TwoConnected,
};

inline constexpr int kMaxEnumerationOrder = 8;

class LabeledGraphs {
public:
    /// n = 8 (2^28 graphs) only with allow_long.
    explicit LabeledGraphs(int n, bool allow_long = false) : n_(n) {
        if (n < 3 || n > kMaxEnumerationOrder) throw std::out_of_range("enumeration supports 3 <= n <= 8");
        if (n == kMaxEnumerationOrder && !allow_long) {
            throw std::out_of_range("n = 8 enumeration is a long-running mode; enable it explicitly");
        }
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
        }
    }

    int order() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }

    Graph at(std::uint64_t mask) const {
        Graph g(n_);
        for (std::size_t j = 0; j < pairs_.size(); ++j) {
            if ((mask >> j) & 1u) g.add_edge(pairs_[j].first, pairs_[j].second);
        }
        return g;
    }

    static bool passes(const Graph& g, Prefilter f) {
        switch (f) {
            case Prefilter::None: return true;
            case Prefilter::MinDegree2Connected: return g.min_degree() >= 2 && is_connected(g);
            case Prefilter::TwoConnected: return is_2_connected(g);
        }
        return false;
    }

    /// fn(mask, graph) for masks in [lo, hi) passing the filter, ascending.
    template <typename Fn>
    void for_each(Prefilter f, std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        for (std::uint64_t m = lo; m < hi; ++m) {
            const Graph g = at(m);
            if (passes(g, f)) fn(m, g);
        }
    }

    template <typename Fn>
    void for_each(Prefilter f, Fn&& fn) const {
        for_each(f, 0, size(), std::forward<Fn>(fn));
    }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

/// Materialized form for small n.
inline std::vector<Graph> enumerate_labeled_graphs(int n, Prefilter f = Prefilter::None, bool allow_long = false) {
    LabeledGraphs all(n, allow_long);
    std::vector<Graph> out;
    all.for_each(f, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace pancyc
