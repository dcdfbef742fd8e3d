#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kbg/graph.hpp"

namespace kbg {

/// Raised on malformed textual graph input. `line` is 1-based within the
/// parsed text when known, -1 otherwise.
struct ParseError : std::runtime_error {
  int line;
  explicit ParseError(const std::string& what, int line_no = -1)
      : std::runtime_error(what), line(line_no) {}
};

/// Decode one graph6 record. The optional ">>graph6<<" header prefix is
/// tolerated. Accepts the 1-, 4- and 8-byte size fields.
Graph parse_graph6(std::string_view record);

/// Encode to graph6, bit-exact per the standard: size field N(n) followed by
/// the upper triangle of the adjacency matrix in column order
/// (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, each byte offset by 63.
std::string to_graph6(const Graph& g);

/// Plain edge-list format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);

}  // namespace kbg
