#pragma once

// Named graph families and the exceptional graphs listed alongside the
// pancyclicity results for P_3-f-heavy and {claw, Z_1}-f-heavy graphs.

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pancyc/graph.hpp"

namespace pancyc {

enum class FamilyName { F4R, CompleteBipartite, CompleteBipartiteMinusE, Cycle, Complete, Petersen };

struct FamilyId {
    FamilyName name = FamilyName::Complete;
    int a = 0;  // r, n, or first part size
    int b = 0;  // second part size

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// CLI spelling: "f4r:3", "kbb:3,3", "kbb-e:3,3", "cycle:6", "complete:5", "petersen".
inline std::string to_string(const FamilyId& f) {
    switch (f.name) {
        case FamilyName::F4R: return "f4r:" + std::to_string(f.a);
        case FamilyName::CompleteBipartite: return "kbb:" + std::to_string(f.a) + "," + std::to_string(f.b);
        case FamilyName::CompleteBipartiteMinusE:
            return "kbb-e:" + std::to_string(f.a) + "," + std::to_string(f.b);
        case FamilyName::Cycle: return "cycle:" + std::to_string(f.a);
        case FamilyName::Complete: return "complete:" + std::to_string(f.a);
        case FamilyName::Petersen: return "petersen";
    }
    return "?";
}

/// K_{2r} on w_1..w_{2r} (vertices 0..2r-1) plus, for each i, a path
/// w_{2i-1} a_i b_i w_{2i} with a_i = 2r + 2(i-1), b_i = a_i + 1.
inline Graph f4r(int r) {
    if (r < 2 || 4 * r > kMaxOrder) throw std::out_of_range("f4r needs 2 <= r <= 8");
    const int clique = 2 * r;
    Graph g(4 * r);
    for (int u = 0; u < clique; ++u) {
        for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
    }
    for (int i = 0; i < r; ++i) {
        const int a = clique + 2 * i;
        const int b = a + 1;
        g.add_edge(2 * i, a);
        g.add_edge(a, b);
        g.add_edge(b, 2 * i + 1);
    }
    return g;
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1 || a + b > kMaxOrder) throw std::out_of_range("complete_bipartite: bad part sizes");
    Graph g(a + b);
    for (int u = 0; u < a; ++u) {
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    }
    return g;
}

/// K_{a,b} without the edge (0, a).
inline Graph complete_bipartite_minus_e(int a, int b) {
    Graph g = complete_bipartite(a, b);
    g.remove_edge(0, a);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3 || n > kMaxOrder) throw std::out_of_range("cycle_graph needs 3 <= n <= 32");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 1 || n > kMaxOrder) throw std::out_of_range("complete_graph needs 1 <= n <= 32");
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

inline Graph make_family(const FamilyId& f) {
    switch (f.name) {
        case FamilyName::F4R: return f4r(f.a);
        case FamilyName::CompleteBipartite: return complete_bipartite(f.a, f.b);
        case FamilyName::CompleteBipartiteMinusE: return complete_bipartite_minus_e(f.a, f.b);
        case FamilyName::Cycle: return cycle_graph(f.a);
        case FamilyName::Complete: return complete_graph(f.a);
        case FamilyName::Petersen: return petersen();
    }
    throw std::invalid_argument("unknown family");
}

inline FamilyId parse_family(std::string_view spec) {
    auto fail = [&]() -> FamilyId { throw std::invalid_argument("bad family spec \"" + std::string(spec) + "\""); };
    auto number = [&](std::string_view s) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) fail();
        return v;
    };
    if (spec == "petersen") return {FamilyName::Petersen, 0, 0};
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) return fail();
    const auto head = spec.substr(0, colon);
    const auto args = spec.substr(colon + 1);
    if (head == "kbb" || head == "kbb-e") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) return fail();
        const FamilyName name = head == "kbb" ? FamilyName::CompleteBipartite : FamilyName::CompleteBipartiteMinusE;
        return {name, number(args.substr(0, comma)), number(args.substr(comma + 1))};
    }
    if (head == "f4r") return {FamilyName::F4R, number(args), 0};
    if (head == "cycle") return {FamilyName::Cycle, number(args), 0};
    if (head == "complete") return {FamilyName::Complete, number(args), 0};
    return fail();
}

enum class ExceptionList { TH5, TH8 };

struct NamedGraph {
    FamilyId family;
    Graph graph;
};

/// The exceptional graphs of order n, in the order the statements list them.
///   TH5: F_{4r} (n = 4r, r > 2), K_{n/2,n/2} (n even), K_{n/2,n/2} - e (n >= 6 even).
///   TH8: F_{4r} (n = 4r, any r >= 2), the same two bipartite graphs, C_n.
inline std::vector<NamedGraph> exception_catalog(ExceptionList list, int n) {
    if (n < 3 || n > kMaxOrder) throw std::out_of_range("exception_catalog needs 3 <= n <= 32");
    std::vector<NamedGraph> out;
    auto add = [&](FamilyId f) { out.push_back({f, make_family(f)}); };
    const int min_r = list == ExceptionList::TH5 ? 3 : 2;
    if (n % 4 == 0 && n / 4 >= min_r) add({FamilyName::F4R, n / 4, 0});
    if (n % 2 == 0) add({FamilyName::CompleteBipartite, n / 2, n / 2});
    if (n % 2 == 0 && n >= 6) add({FamilyName::CompleteBipartiteMinusE, n / 2, n / 2});
    if (list == ExceptionList::TH8) add({FamilyName::Cycle, n, 0});
    return out;
}

}  // namespace pancyc
