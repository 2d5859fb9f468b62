#pragma once

#include <cstdint>
#include <vector>

#include "rtkit/graph.hpp"

namespace rtkit {

// Strongly-connected components. Two vertices share a component id iff each
// reaches the other. Ids are normalized so components sorted by their
// smallest vertex get ids 0, 1, ...; member lists are ascending. Stable for
// a fixed input.
struct SccDecomposition {
    std::vector<std::uint32_t> comp;
    std::uint32_t count = 0;
    std::vector<std::vector<std::uint32_t>> members;
};

SccDecomposition scc_decompose(const WeightedDigraph& g);

} // namespace rtkit
