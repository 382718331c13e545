#pragma once

#include <initializer_list>

#include "ikg/graph.hpp"

namespace ikg {

SimpleGraph complete_graph(int n);
SimpleGraph complete_multipartite(std::initializer_list<int> parts);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph star_graph(int leaves);
SimpleGraph petersen_graph();
/// C_n x K_2.
SimpleGraph prism_graph(int n);
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace ikg
