#pragma once

#include <utility>
#include <vector>

namespace eqshadow {

using Edge = std::pair<int, int>;

// Proper edge colouring with at most max_degree + 1 colours (Misra-Gries);
// complete graphs use the round-robin schedule. Returns one edge list per
// colour, empty colours dropped.
std::vector<std::vector<Edge>> edge_color_layers(int n, const std::vector<Edge>& edges);

}  // namespace eqshadow
