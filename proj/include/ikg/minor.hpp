#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

/// A model of `pattern` inside a host: pairwise disjoint connected branch
/// sets, one per pattern vertex, and a host edge realizing every pattern edge.
struct MinorWitness {
    std::string pattern_name;
    std::vector<std::vector<Vertex>> branch_sets;
    struct EdgeImage {
        Edge pattern;
        Edge host;
    };
    std::vector<EdgeImage> edge_assignment;
};

/// Exhaustive search for `pattern` as a minor of `host`. The search walks
/// contractions of the host (memoized by canonical form) and tests for the
/// pattern as a subgraph; for patterns of minimum degree >= 3 the host is kept
/// free of vertices of degree <= 2, which never changes the answer.
std::optional<MinorWitness> has_minor(const SimpleGraph& host, const SimpleGraph& pattern,
                                      std::string pattern_name = {});

/// Rechecks a witness against host and pattern from scratch.
bool verify_minor_witness(const SimpleGraph& host, const SimpleGraph& pattern,
                          const MinorWitness& w);

/// Injective map pattern -> host (map[p] = h) preserving adjacency, if any.
std::optional<std::vector<Vertex>> find_monomorphism(const SimpleGraph& pattern,
                                                     const SimpleGraph& host);

/// Merges the endpoints of e into the smaller label; loops and parallel edges
/// are dropped, labels above the larger endpoint shift down by one.
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);

void write_witness(std::ostream& out, const MinorWitness& w);

}  // namespace ikg
