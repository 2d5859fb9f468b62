#pragma once

#include <cstdint>
#include <string_view>

#include "rtkit/graph.hpp"

namespace rtkit {

enum class GraphKind { Cycle, RandomGnm, Layered, Complete };

GraphKind graph_kind_from_name(std::string_view name); // throws on unknown kind

struct GenerateParams {
    GraphKind kind = GraphKind::RandomGnm;
    std::uint32_t n = 0;
    std::uint64_t m = 0; // ignored (may be 0) for cycle/complete
    Weight weight_min = 1;
    Weight weight_max = 1;
    std::uint64_t seed = 0;
};

// Deterministic for a fixed seed. Infeasible (n, m) combinations throw
// std::invalid_argument. Draw order: cycle/complete draw one weight per edge
// in canonical order; random-gnm draws (u, v) pairs rejecting self-loops and
// duplicates, then one weight per accepted edge; layered assigns ceil(sqrt(n))
// vertices per layer and samples forward edges the same way as gnm.
WeightedDigraph generate(const GenerateParams& p);

} // namespace rtkit
