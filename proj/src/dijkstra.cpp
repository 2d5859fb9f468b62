#include "rtkit/dijkstra.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>

namespace rtkit {

namespace {

std::atomic<std::uint64_t> g_invocations{0};

using HeapItem = std::pair<Dist, std::uint32_t>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>>;

inline std::span<const Arc> arcs_of(const WeightedDigraph& g, std::uint32_t v, Direction dir) {
    return dir == Direction::Out ? g.out(v) : g.in(v);
}

} // namespace

std::uint64_t dijkstra_invocations() { return g_invocations.load(std::memory_order_relaxed); }

DistanceArray dijkstra(const WeightedDigraph& g, std::uint32_t source, Direction dir,
                       const DijkstraOptions& opts) {
    g_invocations.fetch_add(1, std::memory_order_relaxed);
    const std::uint32_t n = g.num_vertices();
    if (source >= n) throw std::invalid_argument("dijkstra: source out of range");
    if (opts.vertex_mask && !(*opts.vertex_mask)[source])
        throw std::invalid_argument("dijkstra: source outside restriction");

    DistanceArray da;
    da.source = source;
    da.direction = dir;
    da.dist.assign(n, kInf);
    da.parent.assign(n, kNoVertex);
    da.parent_edge.assign(n, kNoEdge);

    std::vector<std::uint8_t> settled(n, 0);
    MinHeap heap;
    da.dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (settled[u]) continue; // stale entry
        settled[u] = 1;
        for (const Arc& a : arcs_of(g, u, dir)) {
            if (opts.edge_alive && !(*opts.edge_alive)[a.id]) continue;
            if (opts.vertex_mask && !(*opts.vertex_mask)[a.to]) continue;
            const Dist nd = sat_add(d, a.w);
            if (nd < da.dist[a.to]) {
                da.dist[a.to] = nd;
                da.parent[a.to] = u;
                da.parent_edge[a.to] = a.id;
                heap.push({nd, a.to});
            }
        }
    }
    return da;
}

DistanceArray dijkstra_restricted(const WeightedDigraph& g, std::uint32_t source, Direction dir,
                                  const std::vector<std::uint32_t>& restrict_to) {
    std::vector<std::uint8_t> mask(g.num_vertices(), 0);
    for (std::uint32_t v : restrict_to) mask[v] = 1;
    DijkstraOptions opts;
    opts.vertex_mask = &mask;
    return dijkstra(g, source, dir, opts);
}

BallSet pruned_dijkstra(const WeightedDigraph& g, std::uint32_t source, Direction dir,
                        const PruneHook& hook, const PrunedOptions& opts) {
    g_invocations.fetch_add(1, std::memory_order_relaxed);
    const std::uint32_t n = g.num_vertices();
    if (source >= n) throw std::invalid_argument("pruned_dijkstra: source out of range");

    BallSet ball;
    ball.source = source;
    ball.direction = dir;

    std::vector<Dist> dist(n, kInf);
    std::vector<std::uint32_t> parent(n, kNoVertex);
    std::vector<std::uint8_t> settled(n, 0);
    MinHeap heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (settled[u]) continue;
        settled[u] = 1;
        const bool pass = (u == source && opts.source_always_passes) ? true : hook(u, d);
        if (!pass) continue;
        ball.index.emplace(u, static_cast<std::uint32_t>(ball.members.size()));
        ball.members.push_back({u, d, parent[u]});
        if (opts.max_members && ball.members.size() > opts.max_members) {
            ball.truncated = true;
            return ball;
        }
        for (const Arc& a : arcs_of(g, u, dir)) {
            const Dist nd = sat_add(d, a.w);
            if (nd < dist[a.to]) {
                dist[a.to] = nd;
                parent[a.to] = u;
                heap.push({nd, a.to});
            }
        }
    }
    return ball;
}

std::vector<std::uint32_t> BallSet::path(std::uint32_t v) const {
    if (!contains(v)) return {};
    std::vector<std::uint32_t> p;
    std::uint32_t cur = v;
    while (cur != kNoVertex) {
        p.push_back(cur);
        cur = members[index.at(cur)].parent;
    }
    if (direction == Direction::Out) std::reverse(p.begin(), p.end());
    return p;
}

std::vector<std::uint32_t> extract_path(const DistanceArray& da, std::uint32_t v) {
    if (is_inf(da.dist[v])) return {};
    std::vector<std::uint32_t> p;
    std::uint32_t cur = v;
    while (cur != kNoVertex) {
        p.push_back(cur);
        cur = da.parent[cur];
    }
    if (da.direction == Direction::Out) std::reverse(p.begin(), p.end());
    return p;
}

} // namespace rtkit
