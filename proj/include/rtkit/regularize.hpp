#pragma once

#include <cstdint>
#include <vector>

#include "rtkit/graph.hpp"

namespace rtkit {

// Degree-regularization reduction. A vertex of total degree d is split into
// ceil(d / cap) copies (cap = ceil(2m/n)) joined by a zero-weight directed
// cycle, and its incident edges are dealt round-robin over the copies, so
// every copy ends with at most cap external edges plus two gadget-cycle
// edges. Roundtrip distances between images of original vertices are
// unchanged, and any cycle that uses at least one non-gadget edge maps back
// to a closed walk of equal weight in the original graph.
struct RegularizedGraph {
    WeightedDigraph graph;
    std::vector<std::uint32_t> origin;     // gadget vertex -> original vertex
    std::vector<std::uint32_t> first_copy; // original vertex -> its image
    std::uint32_t original_n = 0;
    std::uint32_t degree_cap = 0;

    std::uint32_t image(std::uint32_t v) const { return first_copy[v]; }

    // Real edges always join copies of distinct originals (the input has no
    // self-loops), so an arc is a gadget arc iff its endpoints share an origin.
    bool gadget_arc(std::uint32_t a, std::uint32_t b) const { return origin[a] == origin[b]; }
};

RegularizedGraph regularize(const WeightedDigraph& g);

// Maps a closed walk in the regularized graph back to the original graph:
// gadget steps collapse (consecutive equal origins), real steps keep their
// weight. Walks are vertex sequences with front() == back().
std::vector<std::uint32_t> map_walk_to_original(const RegularizedGraph& reg,
                                                const std::vector<std::uint32_t>& walk);

// Total weight of a closed walk; kInf if some step is not an edge.
Dist walk_weight(const WeightedDigraph& g, const std::vector<std::uint32_t>& walk);

} // namespace rtkit
