#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pancyc/families.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/graph_io.hpp"
#include "pancyc/isomorphism.hpp"

using namespace pancyc;

namespace {

Graph two_disjoint_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Vertices are the 2-subsets of {0..4}, adjacent when disjoint.
Graph kneser_5_2() {
    std::vector<std::pair<int, int>> sets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = sets[i];
            auto [c, d] = sets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

}  // namespace

TEST(Graph, RejectsBadOrderAndSelfLoops) {
    EXPECT_THROW(Graph(0), std::invalid_argument);
    EXPECT_THROW(Graph(33), std::invalid_argument);
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, Degree) {
    EXPECT_EQ(degree(complete_graph(4), 0), 3);
    EXPECT_EQ(degree(cycle_graph(6), 2), 2);
    EXPECT_EQ(degree(petersen(), 0), 3);
    EXPECT_THROW(degree(cycle_graph(6), 6), std::out_of_range);
}

TEST(Graph, OrderThirtyTwo) {
    const Graph k = complete_graph(32);
    EXPECT_EQ(k.edge_count(), 32 * 31 / 2);
    EXPECT_EQ(k.degree(31), 31);
    EXPECT_TRUE(is_2_connected(k));
}

TEST(Graph, Distance) {
    EXPECT_EQ(distance(cycle_graph(6), 0, 3), 3);
    EXPECT_EQ(distance(complete_graph(4), 0, 1), 1);
    EXPECT_EQ(distance(complete_graph(4), 2, 2), 0);
    EXPECT_EQ(distance(Graph(4, {{0, 1}, {2, 3}}), 0, 2), std::nullopt);
    EXPECT_THROW(distance(cycle_graph(4), 0, 9), std::out_of_range);
}

TEST(Graph, DistanceMatchesFloydWarshall) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = oracle::random_graph(3 + static_cast<int>(seed % 8), 0.3, seed);
        const auto d = oracle::floyd_warshall(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                const auto got = distance(g, u, v);
                EXPECT_EQ(got.value_or(1000), d[u][v]);
                EXPECT_EQ(got, distance(g, v, u));
                EXPECT_EQ(got == 1, g.adjacent(u, v));
            }
    }
}

TEST(Graph, InducedSubgraph) {
    EXPECT_EQ(induced_subgraph(complete_graph(4), VertexSet{0b0111}), complete_graph(3));
    EXPECT_EQ(induced_subgraph(cycle_graph(6), VertexSet{0b0111}), path_graph(3));
    EXPECT_THROW(induced_subgraph(cycle_graph(6), VertexSet{0}), std::invalid_argument);

    const Graph p = petersen();
    const Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
    for (int v = 0; v < 10; ++v) {
        const Graph h = induced_subgraph(p, VertexSet{p.neighbors(v) | bit(v)});
        EXPECT_TRUE(oracle::isomorphic(h, claw)) << "vertex " << v;
    }
}

TEST(Graph, InducedDegreesNeverExceedHost) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = oracle::random_graph(9, 0.5, seed);
        const VertexSet s{static_cast<Mask>(SplitMix64(seed).next()) & g.vertices()};
        if (s.empty()) continue;
        const Graph h = induced_subgraph(g, s);
        const auto verts = s.vertices();
        for (int i = 0; i < h.order(); ++i) EXPECT_LE(h.degree(i), g.degree(verts[i]));
    }
}

TEST(Graph, Connectivity) {
    EXPECT_TRUE(is_connected(cycle_graph(5)));
    EXPECT_FALSE(is_connected(two_disjoint_triangles()));
    EXPECT_TRUE(is_connected(Graph(1)));

    EXPECT_TRUE(is_2_connected(complete_graph(4)));
    EXPECT_FALSE(is_2_connected(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})));
    EXPECT_FALSE(is_2_connected(path_graph(4)));
    EXPECT_FALSE(is_2_connected(complete_graph(2)));
}

TEST(Graph, TwoConnectivityMatchesVertexDeletionOracle) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Graph g = oracle::random_graph(3 + static_cast<int>(seed % 7), 0.45, seed);
        const bool got = is_2_connected(g);
        EXPECT_EQ(got, oracle::two_connected(g)) << serialize_graph(g);
        if (got) {
            EXPECT_TRUE(is_connected(g));
            EXPECT_GE(g.min_degree(), 2);
        }
    }
}

TEST(Graph, Bipartite) {
    EXPECT_TRUE(is_bipartite(complete_bipartite(3, 3)));
    EXPECT_FALSE(is_bipartite(cycle_graph(5)));
    EXPECT_FALSE(is_bipartite(f4r(3)));
    EXPECT_TRUE(is_bipartite(Graph(5, {{0, 1}, {3, 4}})));
    EXPECT_FALSE(is_bipartite(Graph(7, {{0, 1}, {4, 5}, {5, 6}, {4, 6}})));
}

TEST(Graph, CycleGraph) {
    EXPECT_TRUE(is_cycle_graph(cycle_graph(7)));
    EXPECT_FALSE(is_cycle_graph(complete_graph(4)));
    EXPECT_FALSE(is_cycle_graph(two_disjoint_triangles()));
}

TEST(Isomorphism, Examples) {
    EXPECT_TRUE(are_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
    EXPECT_FALSE(are_isomorphic(complete_bipartite(3, 3), cycle_graph(6)));
    EXPECT_TRUE(are_isomorphic(petersen(), kneser_5_2()));
    EXPECT_FALSE(are_isomorphic(cycle_graph(4), cycle_graph(5)));
    // Same degree sequence, not isomorphic.
    EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_disjoint_triangles()));
}

TEST(Isomorphism, ReflexiveSymmetricAndPermutationInvariant) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const int n = 3 + static_cast<int>(seed % 6);
        const Graph g = oracle::random_graph(n, 0.5, seed);
        const Graph h = oracle::random_graph(n, 0.5, seed + 1000);
        EXPECT_TRUE(are_isomorphic(g, g));
        EXPECT_EQ(are_isomorphic(g, h), are_isomorphic(h, g));
        EXPECT_EQ(are_isomorphic(g, h), oracle::isomorphic(g, h));
        EXPECT_TRUE(are_isomorphic(g, permute(g, oracle::random_permutation(n, seed))));
    }
}

TEST(GraphIo, ParseExamples) {
    EXPECT_EQ(parse_graph("3 3\n0 1\n1 2\n0 2\n"), complete_graph(3));
    EXPECT_EQ(parse_graph("2 0\n"), Graph(2));
    EXPECT_EQ(parse_graph("# triangle\n3 3\n# edges\n0 1\n1 2\n0 2\n"), complete_graph(3));
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const GraphFormatError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("3 1\n0 3\n"), 2);
    EXPECT_EQ(line_of("x y\n"), 1);
    EXPECT_EQ(line_of("3\n"), 1);
    EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3);
    EXPECT_EQ(line_of("3 1\n# c\n2 2\n"), 3);
    EXPECT_EQ(line_of("3 1\n1 0\n"), 2);
    EXPECT_EQ(line_of("3 2\n0 1\n"), 2);
    EXPECT_EQ(line_of("33 0\n"), 1);
    EXPECT_EQ(line_of(""), 0);
    try {
        parse_graph("3 1\n0 3\n");
    } catch (const GraphFormatError& e) {
        EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
    }
}

TEST(GraphIo, RoundTrip) {
    EXPECT_EQ(serialize_graph(complete_graph(3)), "3 3\n0 1\n0 2\n1 2\n");
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(seed % 32), 0.3, seed);
        const std::string text = serialize_graph(g);
        EXPECT_EQ(parse_graph(text), g);
        EXPECT_EQ(serialize_graph(parse_graph(text)), text);
    }
}
