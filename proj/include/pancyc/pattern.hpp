#pragma once

// The catalog of small connected patterns (paths, the triangle, Z_i, bull,
// net, wounded, claw) and enumeration of their induced copies in a host.

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pancyc/graph.hpp"
#include "pancyc/isomorphism.hpp"

namespace pancyc {

enum class PatternKind { Path, Triangle, Z, Bull, Net, Wounded, Claw };

class Pattern {
public:
    PatternKind kind() const { return kind_; }
    /// i for P_i and Z_i, 0 otherwise.
    int parameter() const { return param_; }
    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }

    /// Unordered pairs (u < v) at distance exactly 2 inside the pattern.
    const std::vector<std::pair<int, int>>& distance2_pairs() const { return d2_; }

    /// CLI id: "claw", "c3", "b", "n", "w", "p<i>", "z<i>".
    std::string id() const {
        switch (kind_) {
            case PatternKind::Path: return "p" + std::to_string(param_);
            case PatternKind::Triangle: return "c3";
            case PatternKind::Z: return "z" + std::to_string(param_);
            case PatternKind::Bull: return "b";
            case PatternKind::Net: return "n";
            case PatternKind::Wounded: return "w";
            case PatternKind::Claw: return "claw";
        }
        return "?";
    }

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }

    friend Pattern make_pattern(PatternKind kind, int param);

private:
    Pattern(PatternKind kind, int param, Graph g) : kind_(kind), param_(param), graph_(std::move(g)) {
        for (int u = 0; u < graph_.order(); ++u) {
            for (int v = u + 1; v < graph_.order(); ++v) {
                if (distance(graph_, u, v) == 2) d2_.emplace_back(u, v);
            }
        }
    }

    PatternKind kind_;
    int param_;
    Graph graph_;
    std::vector<std::pair<int, int>> d2_;
};

/// Builds a catalog pattern. Labelings:
///   P_i   path 0-1-...-(i-1), 3 <= i <= 32
///   C3    triangle 0 1 2
///   Z_i   triangle 0 1 2, tail 0-3-4-...-(i+2); vertex 0 has degree 3, 1 <= i <= 29
///   B     triangle 0 1 2, pendants 1-3 and 2-4
///   N     triangle 0 1 2, pendants 0-3, 1-4, 2-5
///   W     triangle 0 1 2, pendant 0-3, pendant path 1-4-5
///   CLAW  center 0, ends 1 2 3
inline Pattern make_pattern(PatternKind kind, int param = 0) {
    auto triangle_plus = [](int n, std::vector<std::pair<int, int>> extra) {
        extra.insert(extra.begin(), {{0, 1}, {0, 2}, {1, 2}});
        return Graph(n, extra);
    };
    switch (kind) {
        case PatternKind::Path: {
            if (param < 3 || param > kMaxOrder) throw std::invalid_argument("P_i needs 3 <= i <= 32");
            Graph g(param);
            for (int v = 0; v + 1 < param; ++v) g.add_edge(v, v + 1);
            return Pattern(kind, param, g);
        }
        case PatternKind::Triangle: return Pattern(kind, 0, triangle_plus(3, {}));
        case PatternKind::Z: {
            if (param < 1 || param > kMaxOrder - 3) throw std::invalid_argument("Z_i needs 1 <= i <= 29");
            Graph g = triangle_plus(param + 3, {});
            g.add_edge(0, 3);
            for (int v = 3; v + 1 < param + 3; ++v) g.add_edge(v, v + 1);
            return Pattern(kind, param, g);
        }
        case PatternKind::Bull: return Pattern(kind, 0, triangle_plus(5, {{1, 3}, {2, 4}}));
        case PatternKind::Net: return Pattern(kind, 0, triangle_plus(6, {{0, 3}, {1, 4}, {2, 5}}));
        case PatternKind::Wounded: return Pattern(kind, 0, triangle_plus(6, {{0, 3}, {1, 4}, {4, 5}}));
        case PatternKind::Claw: return Pattern(kind, 0, Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    }
    throw std::invalid_argument("unknown pattern kind");
}

/// Parses a CLI pattern id (case-insensitive).
inline Pattern parse_pattern(std::string_view id) {
    std::string s(id);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "claw" || s == "k13") return make_pattern(PatternKind::Claw);
    if (s == "c3") return make_pattern(PatternKind::Triangle);
    if (s == "b") return make_pattern(PatternKind::Bull);
    if (s == "n") return make_pattern(PatternKind::Net);
    if (s == "w") return make_pattern(PatternKind::Wounded);
    if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'z')) {
        int i = 0;
        auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), i);
        if (ec == std::errc{} && p == s.data() + s.size()) {
            return make_pattern(s[0] == 'p' ? PatternKind::Path : PatternKind::Z, i);
        }
    }
    throw std::invalid_argument("unknown pattern id \"" + std::string(id) + "\"");
}

/// A vertex subset S of the host with G[S] isomorphic to the pattern.
struct InducedCopy {
    VertexSet subset;
    friend bool operator==(const InducedCopy&, const InducedCopy&) = default;
};

namespace detail {

// Enumerates connected induced subgraphs of exactly k vertices, each once,
// by extension sets (each subset is grown from its minimum vertex and only
// through vertices that are exclusive neighbors of the latest addition).
// Branches die as soon as G[S] has a vertex of degree above max_degree or
// more than max_edges edges, since both only grow with S.
class CopyEnumerator {
public:
    CopyEnumerator(const Graph& g, const Pattern& p) : g_(g), p_(p), k_(p.order()) {
        const auto seq = degree_sequence(p.graph());
        max_degree_ = seq.front();
        max_edges_ = p.graph().edge_count();
    }

    std::vector<InducedCopy> run() {
        if (k_ > g_.order()) return {};
        for (int v = 0; v < g_.order(); ++v) {
            root_ = v;
            const Mask above = ~full_mask(v + 1) & g_.vertices();
            grow(bit(v), g_.adj(v) & above, 0);
        }
        std::sort(found_.begin(), found_.end(),
                  [](const InducedCopy& a, const InducedCopy& b) { return a.subset < b.subset; });
        return std::move(found_);
    }

private:
    void grow(Mask sub, Mask ext, int edges) {
        if (popcount(sub) == k_) {
            if (edges == max_edges_ && are_isomorphic(induced_subgraph(g_, VertexSet{sub}), p_.graph())) {
                found_.push_back(InducedCopy{VertexSet{sub}});
            }
            return;
        }
        const Mask above = ~full_mask(root_ + 1) & g_.vertices();
        Mask closed = sub;
        for_each_bit(sub, [&](int u) { closed |= g_.adj(u); });
        while (ext != 0) {
            const int w = lowest(ext);
            ext &= ext - 1;
            const Mask into = g_.adj(w) & sub;
            const int new_edges = edges + popcount(into);
            if (new_edges > max_edges_ || popcount(into) > max_degree_) continue;
            bool ok = true;
            for_each_bit(into, [&](int u) { ok = ok && popcount(g_.adj(u) & (sub | bit(w))) <= max_degree_; });
            if (!ok) continue;
            const Mask exclusive = g_.adj(w) & ~closed & above;
            grow(sub | bit(w), ext | exclusive, new_edges);
        }
    }

    const Graph& g_;
    const Pattern& p_;
    int k_;
    int max_degree_ = 0;
    int max_edges_ = 0;
    int root_ = 0;
    std::vector<InducedCopy> found_;
};

}  // namespace detail

/// Every vertex subset S with G[S] isomorphic to P, ascending by mask.
inline std::vector<InducedCopy> find_induced_copies(const Graph& g, const Pattern& p) {
    return detail::CopyEnumerator(g, p).run();
}

inline bool is_R_free(const Graph& g, const Pattern& p) { return find_induced_copies(g, p).empty(); }

}  // namespace pancyc
