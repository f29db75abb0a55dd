#pragma once

#include <string_view>
#include <vector>

#include "graphrel/graph.hpp"

namespace graphrel::fixtures {

SimpleGraph path(int n);
SimpleGraph cycle(int n);
SimpleGraph complete(int n);
SimpleGraph complete_bipartite(int a, int b);
// K_n with the matching (0,1), (2,3), ..., (2k-2, 2k-1) removed.
SimpleGraph complete_minus_matching(int n, int k);
// Triangle 0-1-2 with pendant vertex 3 attached to 0.
SimpleGraph paw();
// K_{4,4} on {0,1,2,3} / {4,5,6,7} plus (0,1) and (2,3).
SimpleGraph figure1_g();
// K_{4,4} on {0,1,2,3} / {4,5,6,7} plus (2,3) and (6,7).
SimpleGraph figure1_h();

// Resolves "figure1_G", "cycle:5", "complete_bipartite:2:3", ... Throws
// std::invalid_argument for unknown names or bad parameters.
SimpleGraph by_name(std::string_view spec);

}  // namespace graphrel::fixtures
