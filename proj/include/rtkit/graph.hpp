#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rtkit/distance.hpp"

namespace rtkit {

inline constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    Weight w = 0;
};

// Adjacency entry; id indexes into the owning graph's edge list.
struct Arc {
    std::uint32_t to = 0;
    Weight w = 0;
    std::uint32_t id = 0;
};

// Immutable weighted digraph. No self-loops, no parallel edges, weights in
// [0, 2^64-2]. Edges are stored once in canonical (from, to) order and both
// adjacency directions are materialized; in_adj is the exact transpose of
// out_adj. Safe for concurrent readers.
class WeightedDigraph {
  public:
    WeightedDigraph() = default;

    // Builds from an arbitrary edge list. Parallel edges collapse to the
    // minimum weight; self-loops and out-of-range endpoints throw
    // std::invalid_argument.
    static WeightedDigraph from_edges(std::uint32_t n, std::vector<Edge> edges);

    std::uint32_t num_vertices() const { return n_; }
    std::uint32_t num_edges() const { return static_cast<std::uint32_t>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::uint32_t id) const { return edges_[id]; }

    std::span<const Arc> out(std::uint32_t v) const { return out_[v]; }
    std::span<const Arc> in(std::uint32_t v) const { return in_[v]; }

    std::uint32_t out_degree(std::uint32_t v) const { return static_cast<std::uint32_t>(out_[v].size()); }
    std::uint32_t in_degree(std::uint32_t v) const { return static_cast<std::uint32_t>(in_[v].size()); }
    std::uint32_t degree(std::uint32_t v) const { return out_degree(v) + in_degree(v); }

    // Subgraph on the given edge ids, same vertex set.
    WeightedDigraph edge_subgraph(std::span<const std::uint32_t> edge_ids) const;

    // Induced subgraph on `vertices`; `vertices` must be sorted and unique.
    // Fills local->global mapping (equal to `vertices`).
    WeightedDigraph induced_subgraph(std::span<const std::uint32_t> vertices) const;

    // Transpose-consistency self check, used by property tests.
    bool check_consistent() const;

    bool operator==(const WeightedDigraph& o) const { return n_ == o.n_ && edges_eq(o); }

  private:
    bool edges_eq(const WeightedDigraph& o) const;

    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
};

} // namespace rtkit
