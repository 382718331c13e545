#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
    std::string name;
    SimpleGraph graph;
    /// Edges with a role: the added edge of E9+e, and for the cousins and the
    /// U graphs an edge whose contraction is an 11-vertex descendant of K7.
    std::vector<Edge> marked_edges;
    std::string provenance;
};

/// Names: K7, K3311, N9, E9+e, Cousin29, Cousin97, Cousin99, U12, U'12.
const CatalogEntry& catalog_lookup(std::string_view name);
std::vector<std::string> catalog_names();

/// The five graphs the classification run must reproduce.
std::vector<std::string> expected_survivor_names();

}  // namespace ikg
