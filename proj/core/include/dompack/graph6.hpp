#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dompack/graph.hpp"

namespace dompack {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Decodes one graph6 line (an optional ">>graph6<<" prefix is skipped, a
// trailing newline is tolerated).  Only single-byte orders (1..62) are
// accepted; longer size prefixes raise Graph6Error.
Graph from_graph6(std::string_view line);

// Encodes a graph of order <= 62.
std::string to_graph6(const Graph& g);

}  // namespace dompack
