#include "rtkit/scc.hpp"

#include <algorithm>

namespace rtkit {

// Iterative Tarjan; explicit stack keeps deep graphs off the call stack.
SccDecomposition scc_decompose(const WeightedDigraph& g) {
    const std::uint32_t n = g.num_vertices();
    constexpr std::uint32_t kUnvisited = kNoVertex;

    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), raw(n, kUnvisited);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::uint32_t next_index = 0, comp_count = 0;

    struct Frame {
        std::uint32_t v;
        std::uint32_t arc;
    };
    std::vector<Frame> frames;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto arcs = g.out(f.v);
            if (f.arc < arcs.size()) {
                std::uint32_t w = arcs[f.arc++].to;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                std::uint32_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        std::uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        raw[w] = comp_count;
                        if (w == v) break;
                    }
                    ++comp_count;
                }
            }
        }
    }

    // Normalize ids: order components by their smallest vertex.
    SccDecomposition d;
    d.count = comp_count;
    d.comp.assign(n, 0);
    d.members.assign(comp_count, {});
    std::vector<std::uint32_t> relabel(comp_count, kNoVertex);
    std::uint32_t next_id = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (relabel[raw[v]] == kNoVertex) relabel[raw[v]] = next_id++;
        d.comp[v] = relabel[raw[v]];
        d.members[d.comp[v]].push_back(v);
    }
    return d;
}

} // namespace rtkit
