#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rtkit/graph.hpp"

namespace rtkit {

// Text format: first line "n m", then m lines "u v w" with 0-indexed
// vertices and non-negative integer weights. The serializer emits edges
// sorted by (u, v), so parse(serialize(g)) == g.

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

WeightedDigraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedDigraph& g);

WeightedDigraph load_graph_file(const std::string& path);
void save_graph_file(const WeightedDigraph& g, const std::string& path);

} // namespace rtkit
