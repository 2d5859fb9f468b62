#pragma once

#include <cstdint>
#include <vector>

#include "rtkit/dijkstra.hpp"
#include "rtkit/graph.hpp"

namespace rtkit {

// Exact brute-force oracles; n Dijkstras each, meant for desk scale
// (n up to a few thousand).

// All-pairs one-way distances, row-major: at(u, v) = d(u, v).
struct ApspTable {
    std::uint32_t n = 0;
    std::vector<Dist> d;
    Dist at(std::uint32_t u, std::uint32_t v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    Dist rt(std::uint32_t u, std::uint32_t v) const { return sat_add(at(u, v), at(v, u)); }
};

ApspTable exact_apsp(const WeightedDigraph& g);

// Symmetric roundtrip matrix: entry (u, v) = d(u, v) + d(v, u).
struct RoundtripMatrix {
    std::uint32_t n = 0;
    std::vector<Dist> rt;
    Dist at(std::uint32_t u, std::uint32_t v) const { return rt[static_cast<std::size_t>(u) * n + v]; }
};

RoundtripMatrix exact_roundtrip_apsp(const WeightedDigraph& g);

// Exact girth: min over edges (u, v) of wt(u, v) + d(v, u); kInf iff acyclic.
// When `origin` is given (regularized graphs), only non-gadget edges seed
// candidates, so cycles made of gadget edges alone are never counted.
Dist exact_girth(const WeightedDigraph& g, const std::vector<std::uint32_t>* origin = nullptr);

} // namespace rtkit
