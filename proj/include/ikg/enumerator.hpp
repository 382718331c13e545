#pragma once

#include <cstdint>
#include <vector>

#include "ikg/canonical.hpp"
#include "ikg/graph.hpp"

namespace ikg {

struct DegreeSpec {
    std::vector<int> degrees;  // one entry per vertex, any order
    bool triangle_free = true;
    bool connected = true;

    int order() const { return static_cast<int>(degrees.size()); }
    int degree_sum() const;
    /// Even degree sum, every degree in [0, order - 1].
    bool satisfiable_shape() const;
};

/// The four degree types {5, 4^k, 3^m} of the classification.
DegreeSpec classification_type(int fours, int threes);

struct EnumeratedGraph {
    CanonicalForm form;
    SimpleGraph graph;  // canonical representative
};

struct EnumerationStats {
    std::uint64_t nodes = 0;       // accepted intermediate graphs
    std::uint64_t candidates = 0;  // augmentations tried
};

/// One graph per isomorphism class matching the degree spec, sorted by canonical
/// form. Vertices are added in descending target degree; a child is kept only
/// when its newest vertex is the canonical deletion vertex. `jobs` workers
/// split the search tree; the result does not depend on it.
std::vector<EnumeratedGraph> enumerate(const DegreeSpec& spec, int jobs = 1,
                                       EnumerationStats* stats = nullptr);

/// Labeled backtracking over all edge sets meeting the degree targets, then
/// dedup by canonical form. Throws std::invalid_argument above order 8.
std::vector<EnumeratedGraph> naive_enumerate(const DegreeSpec& spec);

}  // namespace ikg
