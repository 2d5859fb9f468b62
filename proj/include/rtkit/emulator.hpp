#pragma once

#include <cstdint>
#include <vector>

#include "rtkit/graph.hpp"

namespace rtkit {

// (2k-1)-roundtrip emulator, k >= 3: a weighted edge list H (not necessarily
// a subgraph) with d_G(u <=> v) <= d_H(u <=> v) <= (2k-1) d_G(u <=> v).
// Runs (k-1) rounds of delta iterations; each iteration samples vertices,
// runs in/out Dijkstra on the CURRENT sparsified graph, connects every
// vertex to its pivot and bunch with the measured distances, then applies
// the elimination rule with the same current-graph distances.
struct EmulatorResult {
    struct SynEdge {
        std::uint32_t from;
        std::uint32_t to;
        Weight w;
    };
    struct IterationStats {
        std::uint64_t sample_size = 0;
        std::uint64_t live_edges = 0;
        std::uint64_t bunch_total = 0; // sum over u of |B_i(u)|
        std::uint64_t removed = 0;
    };
    struct Stats {
        std::uint32_t n = 0;
        std::uint64_t m = 0;
        std::uint64_t seed = 0;
        std::uint32_t k_requested = 0;
        std::uint32_t k_used = 0; // clamped to floor(log2 n), floor >= 3
        std::uint32_t delta = 0;
        std::vector<IterationStats> iterations;
        std::uint64_t dijkstra_count = 0; // equals 2 * sum |S_i|
        std::uint64_t residual_edges = 0; // |E(G_{(k-1)delta})|
        // Per-round pivot thresholds captured at each round boundary; used by
        // the monotonicity property checks.
        std::vector<std::vector<Dist>> round_thresholds;
    };

    std::uint32_t n = 0;
    // Raw synthetic edges in emission order, duplicates across iterations
    // kept so the list mirrors the two-edges-per-bunch-entry accounting.
    std::vector<SynEdge> edges;
    Stats stats;
};

EmulatorResult build_emulator(const WeightedDigraph& g, std::uint32_t k, std::uint64_t seed,
                              unsigned threads = 1);

// Materializes the emulator as a graph: parallel synthetic edges collapse to
// min weight, self-entries (u, u) are dropped.
WeightedDigraph emulator_distances(const EmulatorResult& result);

} // namespace rtkit
