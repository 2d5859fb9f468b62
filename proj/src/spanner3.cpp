#include "rtkit/spanner3.hpp"

#include <stdexcept>

#include "rtkit/dijkstra.hpp"
#include "rtkit/elimination.hpp"
#include "rtkit/parallel.hpp"
#include "rtkit/rng.hpp"
#include "rtkit/schedule.hpp"

namespace rtkit {

SpannerResult build_3_spanner(const WeightedDigraph& g, std::uint64_t seed, unsigned threads) {
    const std::uint32_t n = g.num_vertices();
    const std::uint32_t m = g.num_edges();

    SpannerResult result;
    result.stats.n = n;
    result.stats.m = m;
    result.stats.seed = seed;
    if (n < 2 || m == 0) {
        for (std::uint32_t id = 0; id < m; ++id) result.edge_ids.push_back(id);
        result.stats.residual_edges = m;
        return result;
    }

    const Schedule sched = make_schedule(n, 0.5);
    result.stats.delta = sched.delta;
    const std::uint64_t invocations_before = dijkstra_invocations();

    Rng rng(seed);
    std::vector<std::uint8_t> in_h(m, 0);      // spanner membership per edge id
    std::vector<std::uint8_t> alive(m, 1);     // E(G_i)
    std::vector<std::uint8_t> alive_next(m, 1);// E(G_{i+1}); scans read alive, write here
    std::uint64_t live_count = m;
    std::uint64_t total_samples = 0;

    std::vector<std::uint8_t> sampled(n, 0);
    for (std::uint32_t i = 0; i < sched.delta; ++i) {
        SpannerResult::IterationStats iter;
        iter.live_edges = live_count;

        // Draw order: one Bernoulli(alpha^i / n) per vertex, ascending.
        const double p = sched.sample_prob(i);
        std::vector<std::uint32_t> samples;
        std::vector<std::uint32_t> sample_index(n, kNoVertex);
        for (std::uint32_t v = 0; v < n; ++v) {
            sampled[v] = rng.chance(p) ? 1 : 0;
            if (sampled[v]) {
                sample_index[v] = static_cast<std::uint32_t>(samples.size());
                samples.push_back(v);
            }
        }
        iter.sample_size = samples.size();
        total_samples += samples.size();

        // Distances in the original graph from/to each sample; the shortest
        // path trees go straight into H.
        std::vector<DistanceArray> out_arr(samples.size()), in_arr(samples.size());
        parallel_for(0, samples.size(), threads, [&](std::size_t j) {
            out_arr[j] = dijkstra(g, samples[j], Direction::Out);
            in_arr[j] = dijkstra(g, samples[j], Direction::In);
        });
        for (std::size_t j = 0; j < samples.size(); ++j) {
            for (std::uint32_t v = 0; v < n; ++v) {
                if (out_arr[j].parent_edge[v] != kNoEdge) in_h[out_arr[j].parent_edge[v]] = 1;
                if (in_arr[j].parent_edge[v] != kNoEdge) in_h[in_arr[j].parent_edge[v]] = 1;
            }
        }

        // Sparsification scan: x's sampled live out-neighbors eliminate live
        // out-edges (x, y). Reads G_i (alive), writes G_{i+1} (alive_next);
        // per-x work is independent and removals are monotone flag clears.
        parallel_for(0, n, threads, [&](std::size_t xi) {
            const auto x = static_cast<std::uint32_t>(xi);
            std::vector<std::uint32_t> local; // sample indices adjacent to x in G_i
            for (const Arc& a : g.out(x))
                if (alive[a.id] && sampled[a.to]) local.push_back(sample_index[a.to]);
            if (local.empty()) return;
            for (const Arc& a : g.out(x)) {
                if (!alive[a.id]) continue;
                for (std::uint32_t j : local) {
                    if (edge_eliminated(in_arr[j].dist[x], out_arr[j].dist[a.to], a.w,
                                        in_arr[j].dist[a.to])) {
                        alive_next[a.id] = 0;
                        break;
                    }
                }
            }
        });

        std::uint64_t removed = 0;
        for (std::uint32_t id = 0; id < m; ++id) {
            if (alive[id] && !alive_next[id]) ++removed;
            alive[id] = alive_next[id];
        }
        iter.removed = removed;
        live_count -= removed;
        result.stats.iterations.push_back(iter);
    }

    // Count tree vs residual contributions before folding the residual in.
    std::uint64_t tree_edges = 0, residual_edges = 0;
    for (std::uint32_t id = 0; id < m; ++id) {
        if (in_h[id]) ++tree_edges;
        else if (alive[id]) ++residual_edges;
        if (alive[id]) in_h[id] = 1;
        if (in_h[id]) result.edge_ids.push_back(id);
    }
    result.stats.tree_edges = tree_edges;
    result.stats.residual_edges = residual_edges;
    result.stats.dijkstra_count = dijkstra_invocations() - invocations_before;
    if (result.stats.dijkstra_count != 2 * total_samples)
        throw std::logic_error("spanner3: Dijkstra budget violated");
    return result;
}

} // namespace rtkit
