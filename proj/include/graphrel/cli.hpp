#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphrel/graph.hpp"

namespace graphrel::cli {

enum ExitCode : int { kOk = 0, kVerdictNegative = 1, kUsage = 2, kBudget = 3 };

// Graph sources: "fixture:NAME[:args]", "g6:STRING", "file:PATH" (edge
// list), or a bare string read as a path when such a file exists and as
// graph6 otherwise.
SimpleGraph load_graph(const std::string& source);

// args excludes the program name. Results go to `out`; errors go to `err`
// as one line of JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphrel::cli
