#pragma once

#include <cstdint>
#include <vector>

#include "rtkit/graph.hpp"

namespace rtkit {

// 3-roundtrip spanner: a subgraph H with d_H(u <=> v) <= 3 d_G(u <=> v) for
// all pairs and O(n^{3/2}) expected edges. Each iteration samples vertices
// with probability alpha^i / n, adds their in/out shortest-path trees (built
// on the ORIGINAL graph), and removes edges of the working graph that the
// samples eliminate; whatever survives all iterations is added at the end.
struct SpannerResult {
    struct IterationStats {
        std::uint64_t sample_size = 0;
        std::uint64_t live_edges = 0;   // |E(G_i)| entering the iteration
        std::uint64_t removed = 0;      // edges deleted from G_{i+1}
    };
    struct Stats {
        std::uint32_t n = 0;
        std::uint64_t m = 0;
        std::uint64_t seed = 0;
        std::uint32_t delta = 0;
        std::vector<IterationStats> iterations;
        std::uint64_t dijkstra_count = 0;   // equals 2 * sum |S_i|
        std::uint64_t tree_edges = 0;       // edges first added by a tree
        std::uint64_t residual_edges = 0;   // edges first added by the final residual
    };

    std::vector<std::uint32_t> edge_ids; // ascending, subset of E(G)
    Stats stats;
};

SpannerResult build_3_spanner(const WeightedDigraph& g, std::uint64_t seed, unsigned threads = 1);

inline WeightedDigraph spanner_subgraph(const WeightedDigraph& g, const SpannerResult& r) {
    return g.edge_subgraph(r.edge_ids);
}

} // namespace rtkit
