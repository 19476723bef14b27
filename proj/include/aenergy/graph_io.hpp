#pragma once

#include <string>
#include <string_view>

#include "aenergy/graph.hpp"

namespace aenergy {

// graph6: N(n) prefix followed by the upper-triangle bits x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed big-endian six to a byte, each byte offset by 63.
// Surrounding whitespace and an optional ">>graph6<<" header are accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge list: first line "n m", then m lines "u v" with 0-based vertices.
// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Family mini-language: name ":" int ("," int)*, e.g. "doublestar:12,21".
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

}  // namespace aenergy
