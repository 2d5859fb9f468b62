#include "rtkit/generate.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "rtkit/rng.hpp"

namespace rtkit {

namespace {

std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

void check_weights(const GenerateParams& p) {
    if (p.weight_min > p.weight_max) throw std::invalid_argument("weight_min > weight_max");
    if (p.weight_max == kInf) throw std::invalid_argument("weight_max out of range");
}

WeightedDigraph gen_cycle(const GenerateParams& p, Rng& rng) {
    if (p.n < 2) throw std::invalid_argument("cycle needs n >= 2");
    if (p.m != 0 && p.m != p.n) throw std::invalid_argument("cycle has exactly n edges");
    std::vector<Edge> edges;
    edges.reserve(p.n);
    for (std::uint32_t v = 0; v < p.n; ++v)
        edges.push_back({v, (v + 1) % p.n, rng.range(p.weight_min, p.weight_max)});
    return WeightedDigraph::from_edges(p.n, std::move(edges));
}

WeightedDigraph gen_complete(const GenerateParams& p, Rng& rng) {
    if (p.n < 1) throw std::invalid_argument("complete needs n >= 1");
    const std::uint64_t full = static_cast<std::uint64_t>(p.n) * (p.n - 1);
    if (p.m != 0 && p.m != full) throw std::invalid_argument("complete graph has n(n-1) edges");
    std::vector<Edge> edges;
    edges.reserve(full);
    for (std::uint32_t u = 0; u < p.n; ++u)
        for (std::uint32_t v = 0; v < p.n; ++v)
            if (u != v) edges.push_back({u, v, rng.range(p.weight_min, p.weight_max)});
    return WeightedDigraph::from_edges(p.n, std::move(edges));
}

WeightedDigraph gen_gnm(const GenerateParams& p, Rng& rng) {
    if (p.n < 1) throw std::invalid_argument("random-gnm needs n >= 1");
    const std::uint64_t full = static_cast<std::uint64_t>(p.n) * (p.n - 1);
    if (p.m > full) throw std::invalid_argument("m exceeds n(n-1) possible edges");
    std::vector<Edge> edges;
    edges.reserve(p.m);
    std::unordered_set<std::uint64_t> used;
    used.reserve(p.m * 2);
    while (edges.size() < p.m) {
        auto u = static_cast<std::uint32_t>(rng.below(p.n));
        auto v = static_cast<std::uint32_t>(rng.below(p.n));
        if (u == v) continue;
        if (!used.insert(pair_key(u, v)).second) continue;
        edges.push_back({u, v, rng.range(p.weight_min, p.weight_max)});
    }
    return WeightedDigraph::from_edges(p.n, std::move(edges));
}

// Layered DAG: ceil(sqrt(n)) vertices per layer, edges only between
// consecutive layers. Acyclic by construction.
WeightedDigraph gen_layered(const GenerateParams& p, Rng& rng) {
    if (p.n < 2) throw std::invalid_argument("layered needs n >= 2");
    const std::uint32_t width = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(p.n))));
    const std::uint32_t layers = (p.n + width - 1) / width;
    auto layer_of = [&](std::uint32_t v) { return v / width; };
    auto layer_size = [&](std::uint32_t l) {
        return std::min(p.n, (l + 1) * width) - l * width;
    };
    std::uint64_t full = 0;
    for (std::uint32_t l = 0; l + 1 < layers; ++l)
        full += static_cast<std::uint64_t>(layer_size(l)) * layer_size(l + 1);
    if (layers < 2 || p.m > full) throw std::invalid_argument("m exceeds layered capacity");

    std::vector<Edge> edges;
    edges.reserve(p.m);
    std::unordered_set<std::uint64_t> used;
    while (edges.size() < p.m) {
        auto u = static_cast<std::uint32_t>(rng.below(p.n));
        const std::uint32_t l = layer_of(u);
        if (l + 1 >= layers) continue;
        auto v = static_cast<std::uint32_t>((l + 1) * width + rng.below(layer_size(l + 1)));
        if (!used.insert(pair_key(u, v)).second) continue;
        edges.push_back({u, v, rng.range(p.weight_min, p.weight_max)});
    }
    return WeightedDigraph::from_edges(p.n, std::move(edges));
}

} // namespace

GraphKind graph_kind_from_name(std::string_view name) {
    if (name == "cycle") return GraphKind::Cycle;
    if (name == "random-gnm") return GraphKind::RandomGnm;
    if (name == "layered") return GraphKind::Layered;
    if (name == "complete") return GraphKind::Complete;
    throw std::invalid_argument("unknown graph kind: " + std::string(name));
}

WeightedDigraph generate(const GenerateParams& p) {
    check_weights(p);
    Rng rng(p.seed);
    switch (p.kind) {
        case GraphKind::Cycle: return gen_cycle(p, rng);
        case GraphKind::Complete: return gen_complete(p, rng);
        case GraphKind::RandomGnm: return gen_gnm(p, rng);
        case GraphKind::Layered: return gen_layered(p, rng);
    }
    throw std::invalid_argument("unknown graph kind");
}

} // namespace rtkit
