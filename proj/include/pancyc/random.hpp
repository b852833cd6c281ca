#pragma once

// Reproducible random graphs. The generator is SplitMix64, fully specified
// here so that a (n, p, seed) triple names the same graph on every platform:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// A coin with bias p is (next() >> 11) * 2^-53 < p. Each attempt draws one
// coin per pair (u, v), u < v, in lexicographic order.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pancyc/graph.hpp"

namespace pancyc {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return uniform() < p; }

private:
    std::uint64_t state_;
};

/// Seed of the i-th sample of a batch: one SplitMix64 output from seed + i.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) { return SplitMix64(seed + i).next(); }

class RejectionBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr long kRejectionBudget = 1'000'000;

inline Graph random_graph(int n, double p, SplitMix64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin(p)) g.add_edge(u, v);
        }
    }
    return g;
}

/// G(n, p) samples drawn until one is 2-connected.
inline Graph random_2connected(int n, double p, std::uint64_t seed, long budget = kRejectionBudget) {
    if (n < 3 || n > kMaxOrder) throw std::out_of_range("random_2connected needs 3 <= n <= 32");
    if (!(p >= 0.0 && p <= 1.0)) throw std::out_of_range("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    for (long attempt = 0; attempt < budget; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (is_2_connected(g)) return g;
    }
    throw RejectionBudgetExceeded("no 2-connected sample after " + std::to_string(budget) + " attempts (n=" +
                                  std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

}  // namespace pancyc
