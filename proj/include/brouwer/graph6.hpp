#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brouwer/graph.hpp"

namespace brouwer {

// Parse failure; byte_offset points into the input passed to parse_graph6.
struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    size_t byte_offset;
};

// One line of graph6 text. A leading ">>graph6<<" header and trailing
// CR/LF are tolerated.
Graph parse_graph6(std::string_view line);

// Canonical graph6 bytes (no trailing newline).
std::string write_graph6(const Graph& g);

}  // namespace brouwer
