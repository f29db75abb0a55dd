#pragma once

#include <string>
#include <string_view>

#include "graphrel/graph.hpp"

namespace graphrel {

// graph6: size byte n+63, then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, offset 63.
// An optional ">>graph6<<" header and trailing newline are accepted.
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

// Header "n m" followed by m lines "u v". Blank lines and '#' comments are
// skipped. Loops, duplicates and out-of-range labels are rejected.
SimpleGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

}  // namespace graphrel
