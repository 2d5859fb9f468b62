#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "rtkit/graph.hpp"

namespace rtkit {

enum class Direction { Out, In };

// Single-source distances. For Out, dist[v] = d(source, v) and parent[v] is
// the predecessor on a shortest path from the source; for In, dist[v] =
// d(v, source) and parent[v] is the successor towards the source.
// parent_edge[v] is the id of the edge joining v with parent[v].
struct DistanceArray {
    std::uint32_t source = 0;
    Direction direction = Direction::Out;
    std::vector<Dist> dist;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> parent_edge;
};

struct DijkstraOptions {
    // Restrict the traversal to these vertices (induced subgraph).
    const std::vector<std::uint8_t>* vertex_mask = nullptr;
    // Skip edges whose id is not alive (sparsified views share one graph).
    const std::vector<std::uint8_t>* edge_alive = nullptr;
};

// Binary-heap Dijkstra, ties broken by smaller vertex id. One call
// increments the global invocation counter exactly once.
DistanceArray dijkstra(const WeightedDigraph& g, std::uint32_t source, Direction dir,
                       const DijkstraOptions& opts = {});

// Convenience overload taking the restriction as a vertex list.
DistanceArray dijkstra_restricted(const WeightedDigraph& g, std::uint32_t source, Direction dir,
                                  const std::vector<std::uint32_t>& restrict_to);

// Pruned traversal result: the settled vertices that passed the hook, in
// settle order, with exact settled distances and in-traversal parents.
struct BallSet {
    struct Entry {
        std::uint32_t v;
        Dist dist;
        std::uint32_t parent; // kNoVertex for the source
    };
    std::uint32_t source = 0;
    Direction direction = Direction::Out;
    std::vector<Entry> members;
    std::unordered_map<std::uint32_t, std::uint32_t> index; // vertex -> members position
    bool truncated = false; // max_members cap hit

    bool contains(std::uint32_t v) const { return index.count(v) != 0; }
    Dist dist_of(std::uint32_t v) const {
        auto it = index.find(v);
        return it == index.end() ? kInf : members[it->second].dist;
    }
    // Path from the ball's source to v (Out) or v to the source (In).
    std::vector<std::uint32_t> path(std::uint32_t v) const;
};

// The hook runs when a vertex is settled, seeing the vertex and its settled
// distance; returning false keeps the vertex out of the ball and stops
// relaxation through it. It must be pure with respect to the traversal.
using PruneHook = std::function<bool(std::uint32_t v, Dist settled)>;

struct PrunedOptions {
    std::size_t max_members = 0;     // 0 = unlimited; exceeding sets truncated
    bool source_always_passes = false;
};

BallSet pruned_dijkstra(const WeightedDigraph& g, std::uint32_t source, Direction dir,
                        const PruneHook& hook, const PrunedOptions& opts = {});

// Global invocation counter (atomic); every dijkstra/pruned_dijkstra call
// adds one. Algorithms assert their budgets against deltas of this value.
std::uint64_t dijkstra_invocations();

// Shortest path source..v (Out) or v..source (In) from parent pointers;
// empty if v is unreachable.
std::vector<std::uint32_t> extract_path(const DistanceArray& da, std::uint32_t v);

} // namespace rtkit
