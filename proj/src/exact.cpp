#include "rtkit/exact.hpp"

namespace rtkit {

ApspTable exact_apsp(const WeightedDigraph& g) {
    const std::uint32_t n = g.num_vertices();
    ApspTable t;
    t.n = n;
    t.d.assign(static_cast<std::size_t>(n) * n, kInf);
    for (std::uint32_t u = 0; u < n; ++u) {
        DistanceArray da = dijkstra(g, u, Direction::Out);
        std::copy(da.dist.begin(), da.dist.end(), t.d.begin() + static_cast<std::size_t>(u) * n);
    }
    return t;
}

RoundtripMatrix exact_roundtrip_apsp(const WeightedDigraph& g) {
    ApspTable t = exact_apsp(g);
    RoundtripMatrix m;
    m.n = t.n;
    m.rt.assign(t.d.size(), kInf);
    for (std::uint32_t u = 0; u < t.n; ++u)
        for (std::uint32_t v = 0; v < t.n; ++v) m.rt[static_cast<std::size_t>(u) * t.n + v] = t.rt(u, v);
    return m;
}

Dist exact_girth(const WeightedDigraph& g, const std::vector<std::uint32_t>* origin) {
    const std::uint32_t n = g.num_vertices();
    Dist best = kInf;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0 || g.out_degree(v) == 0) continue;
        // One out-Dijkstra from v covers all candidate cycles closed by an
        // in-edge (u, v): wt(u, v) + d(v, u).
        DistanceArray da = dijkstra(g, v, Direction::Out);
        for (const Arc& a : g.in(v)) {
            if (origin && (*origin)[a.to] == (*origin)[v]) continue;
            best = std::min(best, sat_add(a.w, da.dist[a.to]));
        }
    }
    return best;
}

} // namespace rtkit
