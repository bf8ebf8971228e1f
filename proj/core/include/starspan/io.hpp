#pragma once

#include <string>
#include <string_view>

#include "starspan/graph.hpp"

namespace starspan {

// Standard 6-bit graph6 encoding, bit-exact.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing newline.
Graph from_graph6(std::string_view s);

// One "u v" pair per line, 0-indexed; '#' starts a comment; blank lines ignored.
// Vertex count is max index + 1, so isolated trailing vertices are not representable.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace starspan
