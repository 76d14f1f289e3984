#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "iscount/graph.hpp"

namespace iscount {

enum class GraphFormat { edgelist, dimacs };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a graph from a character stream.
///
/// edgelist: first line "n m", then m lines "u v" with 1-based indices.
/// dimacs:   "p edge n m" header, "e u v" lines, comment lines "c ..." ignored.
///
/// Rejects malformed lines, self-loops, duplicate edges and out-of-range
/// indices with a line-numbered ParseError.
Graph parse_graph(std::istream& in, GraphFormat format);

Graph parse_graph(const std::string& text, GraphFormat format);

}  // namespace iscount
