#include "rtkit/emulator.hpp"

#include <bit>
#include <stdexcept>

#include "rtkit/dijkstra.hpp"
#include "rtkit/elimination.hpp"
#include "rtkit/parallel.hpp"
#include "rtkit/rng.hpp"
#include "rtkit/schedule.hpp"

namespace rtkit {

EmulatorResult build_emulator(const WeightedDigraph& g, std::uint32_t k, std::uint64_t seed,
                              unsigned threads) {
    if (k < 3) throw std::invalid_argument("emulator: k must be >= 3");
    const std::uint32_t n = g.num_vertices();
    const std::uint32_t m = g.num_edges();

    EmulatorResult result;
    result.n = n;
    result.stats.n = n;
    result.stats.m = m;
    result.stats.seed = seed;
    result.stats.k_requested = k;
    if (n < 2 || m == 0) {
        for (const Edge& e : g.edges()) result.edges.push_back({e.from, e.to, e.w});
        result.stats.k_used = k;
        result.stats.residual_edges = m;
        return result;
    }

    // The construction only pays off for k <= log2 n; larger k runs as if
    // k = floor(log2 n), floored at the minimum supported value 3.
    const auto log2n = static_cast<std::uint32_t>(std::bit_width(static_cast<std::uint64_t>(n)) - 1);
    const std::uint32_t k_used = std::max<std::uint32_t>(3, std::min(k, log2n));
    result.stats.k_used = k_used;

    const Schedule sched = make_schedule(n, 1.0 / k_used);
    result.stats.delta = sched.delta;
    const std::uint32_t rounds = k_used - 1;
    const std::uint64_t invocations_before = dijkstra_invocations();

    Rng rng(seed);
    std::vector<std::uint8_t> alive(m, 1), alive_next(m, 1);
    std::uint64_t live_count = m;
    std::uint64_t total_samples = 0;

    // Pivot state: thresh[u] holds the previous round's pivot roundtrip,
    // +inf before any round with a usable pivot finished.
    std::vector<Dist> thresh(n, kInf);
    std::vector<std::uint8_t> sampled(n, 0);

    for (std::uint32_t r = 0; r < rounds; ++r) {
        for (std::uint32_t t = 0; t < sched.delta; ++t) {
            const std::uint32_t i = r * sched.delta + t;
            EmulatorResult::IterationStats iter;
            iter.live_edges = live_count;

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

            // Distances on the current sparsified graph.
            DijkstraOptions dopts;
            dopts.edge_alive = &alive;
            std::vector<DistanceArray> out_arr(samples.size()), in_arr(samples.size());
            parallel_for(0, samples.size(), threads, [&](std::size_t j) {
                out_arr[j] = dijkstra(g, samples[j], Direction::Out, dopts);
                in_arr[j] = dijkstra(g, samples[j], Direction::In, dopts);
            });

            // Pivot = closest sample in roundtrip distance (ties to the
            // smaller vertex id; samples are scanned in ascending order).
            // Bunch = samples strictly closer than the previous round's
            // pivot; a roundtrip with an unreachable leg never qualifies.
            std::vector<std::uint32_t> pivot(n, kNoVertex);
            std::vector<Dist> pivot_rt(n, kInf);
            std::vector<std::vector<std::uint32_t>> bunch(n);
            parallel_for(0, n, threads, [&](std::size_t ui) {
                const auto u = static_cast<std::uint32_t>(ui);
                for (std::uint32_t j = 0; j < samples.size(); ++j) {
                    const Dist rt = roundtrip(in_arr[j].dist[u], out_arr[j].dist[u]);
                    if (rt < pivot_rt[u]) {
                        pivot_rt[u] = rt;
                        pivot[u] = samples[j];
                    }
                    if (rt < thresh[u]) bunch[u].push_back(j);
                }
            });

            for (std::uint32_t u = 0; u < n; ++u) {
                iter.bunch_total += bunch[u].size();
                bool pivot_in_bunch = false;
                for (std::uint32_t j : bunch[u]) {
                    const std::uint32_t s = samples[j];
                    if (s == pivot[u]) pivot_in_bunch = true;
                    result.edges.push_back({u, s, in_arr[j].dist[u]});
                    result.edges.push_back({s, u, out_arr[j].dist[u]});
                }
                if (pivot[u] != kNoVertex && !pivot_in_bunch) {
                    const std::uint32_t j = sample_index[pivot[u]];
                    result.edges.push_back({u, pivot[u], in_arr[j].dist[u]});
                    result.edges.push_back({pivot[u], u, out_arr[j].dist[u]});
                }
            }

            // Sparsification with current-graph distances.
            parallel_for(0, n, threads, [&](std::size_t xi) {
                const auto x = static_cast<std::uint32_t>(xi);
                std::vector<std::uint32_t> local;
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

            // Round boundary: next round's bunches compare against this
            // iteration's pivot roundtrips.
            if (t + 1 == sched.delta) {
                thresh = pivot_rt;
                result.stats.round_thresholds.push_back(thresh);
            }
        }
    }

    // Residual graph joins the emulator with its real weights.
    for (std::uint32_t id = 0; id < m; ++id) {
        if (!alive[id]) continue;
        const Edge& e = g.edge(id);
        result.edges.push_back({e.from, e.to, e.w});
        ++result.stats.residual_edges;
    }

    result.stats.dijkstra_count = dijkstra_invocations() - invocations_before;
    if (result.stats.dijkstra_count != 2 * total_samples)
        throw std::logic_error("emulator: Dijkstra budget violated");
    return result;
}

WeightedDigraph emulator_distances(const EmulatorResult& result) {
    std::vector<Edge> edges;
    edges.reserve(result.edges.size());
    for (const auto& e : result.edges) {
        if (e.from == e.to) continue; // self-entries carry no distance information
        if (is_inf(e.w)) continue;
        edges.push_back({e.from, e.to, e.w});
    }
    return WeightedDigraph::from_edges(result.n, std::move(edges));
}

} // namespace rtkit
