#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pancyc/cycles.hpp"
#include "pancyc/families.hpp"
#include "pancyc/random.hpp"

using namespace pancyc;

namespace {

Graph wheel5() {
    Graph g = cycle_graph(5);
    g.remove_edge(3, 4);
    g.remove_edge(4, 0);
    g.add_edge(3, 0);
    for (int v = 0; v < 4; ++v) g.add_edge(4, v);
    return g;
}

std::vector<int> as_vector(const std::set<int>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(CycleOfLength, Examples) {
    EXPECT_EQ(has_cycle_of_length(complete_graph(4), 3), (CycleCertificate{0, 1, 2}));
    EXPECT_FALSE(has_cycle_of_length(complete_bipartite(3, 3), 5));
    EXPECT_FALSE(has_cycle_of_length(petersen(), 7));
    EXPECT_THROW(has_cycle_of_length(complete_graph(4), 2), std::out_of_range);
    EXPECT_THROW(has_cycle_of_length(complete_graph(4), 5), std::out_of_range);
}

TEST(Hamiltonian, Examples) {
    for (int n = 3; n <= 12; ++n) EXPECT_TRUE(is_hamiltonian(cycle_graph(n)));
    EXPECT_FALSE(is_hamiltonian(complete_bipartite(2, 3)));
    EXPECT_FALSE(is_hamiltonian(petersen()));
    EXPECT_THROW(is_hamiltonian(complete_graph(2)), std::invalid_argument);
    EXPECT_THROW(is_hamiltonian(complete_graph(25)), std::length_error);

    EXPECT_EQ(find_hamilton_cycle(cycle_graph(5)), (CycleCertificate{0, 4, 3, 2, 1}));
    EXPECT_FALSE(find_hamilton_cycle(complete_bipartite(2, 3)));
    const auto f12 = find_hamilton_cycle(f4r(3));
    ASSERT_TRUE(f12);
    EXPECT_EQ(f12->size(), 12u);
    EXPECT_TRUE(is_valid_cycle(f4r(3), *f12));
}

TEST(Hamiltonian, MatchesPermutationOracle) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = oracle::random_graph(4 + static_cast<int>(seed % 5), 0.5, seed);
        EXPECT_EQ(is_hamiltonian(g), oracle::hamiltonian(g)) << serialize_graph(g);
        const auto c = find_hamilton_cycle(g);
        EXPECT_EQ(c.has_value(), oracle::hamiltonian(g));
        if (c) {
            EXPECT_TRUE(is_valid_cycle(g, *c));
        }
    }
}

TEST(Spectrum, Examples) {
    EXPECT_EQ(cycle_spectrum(complete_graph(4)).lengths(), (std::vector<int>{3, 4}));
    EXPECT_EQ(cycle_spectrum(petersen()).lengths(), (std::vector<int>{5, 6, 8, 9}));
    EXPECT_EQ(cycle_spectrum(f4r(3)).missing(), (std::vector<int>{11}));
    EXPECT_EQ(cycle_spectrum(complete_bipartite(3, 3)).lengths(), (std::vector<int>{4, 6}));
    EXPECT_EQ(format_spectrum(cycle_spectrum(petersen())), "n=10 lengths={5,6,8,9} missing={3,4,7,10}");
}

// Expected sets are frozen from the unpruned simple-path oracle.
TEST(Spectrum, FrozenOracleValues) {
    EXPECT_EQ(as_vector(oracle::cycle_lengths(petersen())), (std::vector<int>{5, 6, 8, 9}));
    EXPECT_EQ(as_vector(oracle::cycle_lengths(f4r(3))), (std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10, 12}));
    EXPECT_EQ(as_vector(oracle::cycle_lengths(complete_bipartite(3, 3))), (std::vector<int>{4, 6}));
    EXPECT_EQ(as_vector(oracle::cycle_lengths(wheel5())), (std::vector<int>{3, 4, 5}));
}

TEST(Spectrum, Pancyclic) {
    EXPECT_TRUE(is_pancyclic(complete_graph(5)));
    EXPECT_FALSE(is_pancyclic(cycle_graph(6)));
    EXPECT_TRUE(is_pancyclic(wheel5()));
    EXPECT_FALSE(is_pancyclic(f4r(3)));
    EXPECT_THROW(is_pancyclic(complete_graph(2)), std::invalid_argument);
}

TEST(Spectrum, Ranges) {
    EXPECT_TRUE(has_cycles_in_range(complete_graph(5), 3, 5));
    EXPECT_TRUE(has_cycles_in_range(petersen(), 5, 6));
    EXPECT_FALSE(has_cycles_in_range(petersen(), 5, 7));
    EXPECT_THROW(has_cycles_in_range(petersen(), 6, 5), std::out_of_range);
    EXPECT_THROW(has_cycles_in_range(petersen(), 2, 5), std::out_of_range);
}

TEST(UTriangle, Examples) {
    EXPECT_EQ(has_u_triangle(complete_graph(4), 0), (CycleCertificate{0, 1, 2}));
    EXPECT_FALSE(has_u_triangle(cycle_graph(6), 0));
    // a_1 of F_12 is vertex 6 with neighbors w_1 = 0 and b_1 = 7.
    const Graph f = f4r(3);
    EXPECT_EQ(f.neighbors(6), bit(0) | bit(7));
    EXPECT_FALSE(has_u_triangle(f, 6));
    EXPECT_THROW(has_u_triangle(f, 12), std::out_of_range);
}

TEST(Spectrum, DualRoutesAgreeWithCertificates) {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        const Graph g = oracle::random_graph(n, 0.2 + 0.05 * static_cast<double>(seed % 12), seed);
        const auto dp = cycle_spectrum(g, true);
        const auto bt = cycle_spectrum_backtracking(g, true);
        ASSERT_EQ(dp.lengths(), bt.lengths()) << serialize_graph(g);
        EXPECT_EQ(dp.has(n), is_hamiltonian(g));
        for (int k : dp.lengths()) {
            EXPECT_TRUE(is_valid_cycle(g, dp.certificates[k]));
            EXPECT_TRUE(is_valid_cycle(g, bt.certificates[k]));
            EXPECT_EQ(dp.certificates[k].size(), static_cast<std::size_t>(k));
            EXPECT_EQ(bt.certificates[k].size(), static_cast<std::size_t>(k));
        }
        if (n <= 9) {
            EXPECT_EQ(dp.lengths(), as_vector(oracle::cycle_lengths(g)));
        }
        if (is_bipartite(g)) {
            for (int k : dp.lengths()) EXPECT_EQ(k % 2, 0);
        }
    }
}

TEST(Spectrum, EdgeMonotone) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);
        const Graph g = oracle::random_graph(n, 0.35, seed);
        Graph h = g;
        SplitMix64 rng(seed ^ 0xABCDEF);
        const int u = static_cast<int>(rng.next() % n);
        const int v = (u + 1 + static_cast<int>(rng.next() % (n - 1))) % n;
        h.add_edge(u, v);
        const auto before = cycle_spectrum(g);
        const auto after = cycle_spectrum(h);
        for (int k : before.lengths()) EXPECT_TRUE(after.has(k));
    }
}

TEST(Spectrum, InvariantUnderRelabeling) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = oracle::random_graph(10, 0.3, seed);
        const Graph h = permute(g, oracle::random_permutation(10, seed));
        EXPECT_EQ(cycle_spectrum(g), cycle_spectrum(h));
    }
}

TEST(Spectrum, CertificatesAreDeterministic) {
    const Graph g = random_2connected(11, 0.4, 5);
    const auto a = cycle_spectrum(g, true);
    const auto b = cycle_spectrum(g, true);
    EXPECT_EQ(a.certificates, b.certificates);
    EXPECT_EQ(has_cycle_of_length(g, 7), has_cycle_of_length(g, 7));
}

TEST(CycleCertificate, Validity) {
    const Graph g = cycle_graph(5);
    EXPECT_TRUE(is_valid_cycle(g, {0, 1, 2, 3, 4}));
    EXPECT_FALSE(is_valid_cycle(g, {0, 1, 2, 3}));
    EXPECT_FALSE(is_valid_cycle(g, {0, 1, 0}));
    EXPECT_FALSE(is_valid_cycle(g, {0, 1}));
}
