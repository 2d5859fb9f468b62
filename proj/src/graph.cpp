#include "rtkit/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtkit {

WeightedDigraph WeightedDigraph::from_edges(std::uint32_t n, std::vector<Edge> edges) {
    for (const Edge& e : edges) {
        if (e.from >= n || e.to >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.from == e.to) throw std::invalid_argument("self-loop");
        if (e.w == kInf) throw std::invalid_argument("edge weight out of range");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.w < b.w;
    });
    // Parallel edges collapse to min weight; sort above puts it first.
    std::vector<Edge> dedup;
    dedup.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!dedup.empty() && dedup.back().from == e.from && dedup.back().to == e.to) continue;
        dedup.push_back(e);
    }

    WeightedDigraph g;
    g.n_ = n;
    g.edges_ = std::move(dedup);
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (std::uint32_t id = 0; id < g.edges_.size(); ++id) {
        const Edge& e = g.edges_[id];
        g.out_[e.from].push_back({e.to, e.w, id});
        g.in_[e.to].push_back({e.from, e.w, id});
    }
    for (auto& arcs : g.in_)
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    return g;
}

WeightedDigraph WeightedDigraph::edge_subgraph(std::span<const std::uint32_t> edge_ids) const {
    std::vector<Edge> sub;
    sub.reserve(edge_ids.size());
    for (std::uint32_t id : edge_ids) sub.push_back(edges_[id]);
    return from_edges(n_, std::move(sub));
}

WeightedDigraph WeightedDigraph::induced_subgraph(std::span<const std::uint32_t> vertices) const {
    std::vector<std::uint32_t> local(n_, kNoVertex);
    for (std::uint32_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
    std::vector<Edge> sub;
    for (const Edge& e : edges_) {
        if (local[e.from] != kNoVertex && local[e.to] != kNoVertex)
            sub.push_back({local[e.from], local[e.to], e.w});
    }
    return from_edges(static_cast<std::uint32_t>(vertices.size()), std::move(sub));
}

bool WeightedDigraph::check_consistent() const {
    std::size_t out_total = 0, in_total = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
        out_total += out_[v].size();
        in_total += in_[v].size();
        for (const Arc& a : out_[v]) {
            const Edge& e = edges_[a.id];
            if (e.from != v || e.to != a.to || e.w != a.w) return false;
            // exactly one transpose entry
            std::size_t hits = 0;
            for (const Arc& b : in_[a.to])
                if (b.to == v && b.w == a.w && b.id == a.id) ++hits;
            if (hits != 1) return false;
        }
    }
    return out_total == edges_.size() && in_total == edges_.size();
}

bool WeightedDigraph::edges_eq(const WeightedDigraph& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].from != o.edges_[i].from || edges_[i].to != o.edges_[i].to ||
            edges_[i].w != o.edges_[i].w)
            return false;
    }
    return true;
}

} // namespace rtkit
