#include "rtkit/regularize.hpp"

#include <stdexcept>

namespace rtkit {

RegularizedGraph regularize(const WeightedDigraph& g) {
    const std::uint32_t n = g.num_vertices();
    const std::uint64_t m = g.num_edges();
    RegularizedGraph reg;
    reg.original_n = n;
    if (n == 0) return reg;

    const std::uint32_t cap =
        static_cast<std::uint32_t>(std::max<std::uint64_t>(1, (2 * m + n - 1) / n));
    reg.degree_cap = cap;

    reg.first_copy.assign(n, 0);
    std::vector<std::uint32_t> copies(n, 1);
    std::uint32_t total = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t d = g.degree(v);
        copies[v] = std::max<std::uint32_t>(1, (d + cap - 1) / cap);
        reg.first_copy[v] = total;
        total += copies[v];
    }
    reg.origin.assign(total, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t c = 0; c < copies[v]; ++c) reg.origin[reg.first_copy[v] + c] = v;

    std::vector<Edge> edges;
    edges.reserve(m + total);

    // Round-robin cursor per original vertex, shared by in and out slots so
    // each copy carries at most ceil(d / copies) <= cap external edges.
    std::vector<std::uint32_t> cursor(n, 0);
    auto next_copy = [&](std::uint32_t v) {
        std::uint32_t c = cursor[v];
        cursor[v] = (cursor[v] + 1) % copies[v];
        return reg.first_copy[v] + c;
    };

    for (const Edge& e : g.edges()) edges.push_back({next_copy(e.from), 0, e.w}); // to filled below
    {
        std::size_t idx = 0;
        for (const Edge& e : g.edges()) edges[idx++].to = next_copy(e.to);
    }

    // Zero-weight gadget cycle over each vertex's copies.
    for (std::uint32_t v = 0; v < n; ++v) {
        if (copies[v] < 2) continue;
        for (std::uint32_t c = 0; c < copies[v]; ++c) {
            std::uint32_t a = reg.first_copy[v] + c;
            std::uint32_t b = reg.first_copy[v] + (c + 1) % copies[v];
            edges.push_back({a, b, 0});
        }
    }

    reg.graph = WeightedDigraph::from_edges(total, std::move(edges));
    return reg;
}

std::vector<std::uint32_t> map_walk_to_original(const RegularizedGraph& reg,
                                                const std::vector<std::uint32_t>& walk) {
    // Collapsing consecutive equal origins keeps the walk closed; a walk of
    // gadget steps only collapses to a single vertex.
    std::vector<std::uint32_t> out;
    out.reserve(walk.size());
    for (std::uint32_t v : walk) {
        std::uint32_t o = reg.origin[v];
        if (out.empty() || out.back() != o) out.push_back(o);
    }
    return out;
}

Dist walk_weight(const WeightedDigraph& g, const std::vector<std::uint32_t>& walk) {
    Dist total = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        bool found = false;
        for (const Arc& a : g.out(walk[i])) {
            if (a.to == walk[i + 1]) {
                total = sat_add(total, a.w);
                found = true;
                break;
            }
        }
        if (!found) return kInf;
    }
    return total;
}

} // namespace rtkit
