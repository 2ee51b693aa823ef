#ifndef SQUAREWATCH_GRAPH6_HPP
#define SQUAREWATCH_GRAPH6_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "squarewatch/graph.hpp"

namespace squarewatch {

struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byteOffset(offset) {}
    std::size_t byteOffset;
};

/// McKay graph6: header-optional, column-major upper-triangle bits, 6 bits per
/// printable byte (+63). Rejects trailing bytes and nonzero padding bits.
Graph parseGraph6(std::string_view line);
std::string emitGraph6(const Graph& g);

/// Plain adjacency-list format: "n m" header then m lines "u v", 0-based.
Graph parseAdjacencyList(std::istream& in);
std::string emitAdjacencyList(const Graph& g);

/// Reads every graph in a file: a "n m" header line selects the adjacency-list
/// format (one graph per file); otherwise one graph6 line per graph.
/// Returns graphs with 1-based line numbers; parse failures are returned as
/// (lineNumber, message) without aborting the remaining lines.
struct LoadedGraph {
    Graph graph;
    int line = 0;
};
struct LoadResult {
    std::vector<LoadedGraph> graphs;
    std::vector<std::pair<int, std::string>> errors;
};
LoadResult loadGraphs(std::istream& in);

}  // namespace squarewatch

#endif
