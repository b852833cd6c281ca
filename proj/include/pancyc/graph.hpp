#pragma once

// Simple undirected graphs on at most 32 vertices with one neighbor mask per
// vertex, plus the structural predicates every other header builds on.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pancyc {

/// Bit set over vertex indices 0..31.
using Mask = std::uint32_t;

inline constexpr int kMaxOrder = 32;

constexpr Mask bit(int v) { return Mask{1} << v; }

/// {0, ..., n-1}; n may be 32.
constexpr Mask full_mask(int n) {
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// Calls fn(v) for each set bit in ascending order.
template <typename Fn>
constexpr void for_each_bit(Mask m, Fn&& fn) {
    while (m != 0) {
        fn(lowest(m));
        m &= m - 1;
    }
}

inline std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for_each_bit(m, [&](int v) { out.push_back(v); });
    return out;
}

/// A vertex subset of some host graph.
struct VertexSet {
    Mask bits = 0;

    int size() const { return popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int v) const { return (bits >> v) & 1u; }
    std::vector<int> vertices() const { return mask_to_vertices(bits); }

    friend bool operator==(VertexSet, VertexSet) = default;
    friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }
};

class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxOrder) {
            throw std::invalid_argument("graph order must be in 1..32, got " + std::to_string(n));
        }
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const { return n_; }
    Mask vertices() const { return full_mask(n_); }

    Mask neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    int degree(int v) const { return popcount(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += popcount(adj_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    int min_degree() const {
        int d = kMaxOrder;
        for (int v = 0; v < n_; ++v) d = std::min(d, popcount(adj_[static_cast<std::size_t>(v)]));
        return d;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            for_each_bit(adj_[static_cast<std::size_t>(u)] & ~full_mask(u + 1),
                         [&](int v) { out.emplace_back(u, v); });
        }
        return out;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)] &= ~bit(v);
        adj_[static_cast<std::size_t>(v)] &= ~bit(u);
    }

    /// Unchecked neighbor mask for inner loops; v must be < order().
    Mask adj(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v) {
            if (a.adj_[static_cast<std::size_t>(v)] != b.adj_[static_cast<std::size_t>(v)]) return false;
        }
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n_));
        }
    }

    int n_ = 0;
    std::array<Mask, kMaxOrder> adj_{};
};

inline int degree(const Graph& g, int v) { return g.degree(v); }

/// Vertices reachable from `start` using only vertices of `allowed`.
inline Mask reachable_within(const Graph& g, int start, Mask allowed) {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier != 0) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.adj(v); });
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// BFS distance; nullopt when v is unreachable from u.
inline std::optional<int> distance(const Graph& g, int u, int v) {
    (void)g.neighbors(u);
    (void)g.neighbors(v);
    Mask seen = bit(u);
    Mask frontier = seen;
    for (int d = 0; frontier != 0; ++d) {
        if (frontier & bit(v)) return d;
        Mask next = 0;
        for_each_bit(frontier, [&](int w) { next |= g.adj(w); });
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

/// G[S], relabeled 0..|S|-1 in ascending order of original index.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    if (s.bits & ~g.vertices()) throw std::out_of_range("induced_subgraph: vertex set exceeds host");
    std::array<int, kMaxOrder> index{};
    int k = 0;
    for_each_bit(s.bits, [&](int v) { index[static_cast<std::size_t>(v)] = k++; });
    Graph h(k);
    for_each_bit(s.bits, [&](int u) {
        for_each_bit(g.adj(u) & s.bits & ~full_mask(u + 1), [&](int v) {
            h.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
        });
    });
    return h;
}

/// G - S.
inline Graph remove_vertices(const Graph& g, VertexSet s) {
    return induced_subgraph(g, VertexSet{g.vertices() & ~s.bits});
}

inline bool is_connected(const Graph& g) {
    return reachable_within(g, 0, g.vertices()) == g.vertices();
}

namespace detail {

struct LowLink {
    const Graph& g;
    std::array<int, kMaxOrder> disc{};
    std::array<int, kMaxOrder> low{};
    int clock = 0;
    bool articulation = false;

    void visit(int v, int parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++clock;
        int children = 0;
        for_each_bit(g.adj(v), [&](int w) {
            auto& dw = disc[static_cast<std::size_t>(w)];
            auto& lv = low[static_cast<std::size_t>(v)];
            if (dw == 0) {
                ++children;
                visit(w, v);
                lv = std::min(lv, low[static_cast<std::size_t>(w)]);
                if (parent >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
                    articulation = true;
                }
            } else if (w != parent) {
                lv = std::min(lv, dw);
            }
        });
        if (parent < 0 && children > 1) articulation = true;
    }
};

}  // namespace detail

/// n >= 3, connected, and no articulation vertex.
inline bool is_2_connected(const Graph& g) {
    if (g.order() < 3 || g.min_degree() < 2 || !is_connected(g)) return false;
    detail::LowLink ll{g};
    ll.visit(0, -1);
    return !ll.articulation;
}

inline bool is_bipartite(const Graph& g) {
    Mask colored = 0;
    Mask side = 0;
    for (int root = 0; root < g.order(); ++root) {
        if (colored & bit(root)) continue;
        Mask frontier = bit(root);
        colored |= frontier;
        bool odd = false;
        while (frontier != 0) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.adj(v); });
            next &= ~colored;
            if (!odd) side |= next;
            colored |= next;
            frontier = next;
            odd = !odd;
        }
    }
    // side holds the odd layers; an edge inside either class breaks 2-colorability.
    for (int v = 0; v < g.order(); ++v) {
        const bool v_side = (side >> v) & 1u;
        const Mask same = v_side ? side : ~side & g.vertices();
        if (g.adj(v) & same) return false;
    }
    return true;
}

/// Connected and 2-regular.
inline bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (popcount(g.adj(v)) != 2) return false;
    }
    return is_connected(g);
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

}  // namespace pancyc
