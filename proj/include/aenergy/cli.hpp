#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "aenergy/graph.hpp"

namespace aenergy {

// Exit codes of the aenergy tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitReproductionMismatch = 1;
inline constexpr int kExitTheoremViolation = 2;
inline constexpr int kExitUsage = 64;

// "g6:<text>", "file:<path>" (edge list, or graph6 if the file is a single
// graph6 token), or a family spec such as "doublestar:12,21".
Graph resolve_graph_spec(std::string_view spec);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aenergy
