#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ikg/canonical.hpp"
#include "ikg/graph.hpp"

namespace ikg {

using Triangle = std::array<Vertex, 3>;

/// Triangles as ascending vertex triples, in lexicographic order.
std::vector<Triangle> triangles(const SimpleGraph& g);

/// Degree-3 vertices whose neighbors are pairwise non-adjacent.
std::vector<Vertex> y_triangle_sites(const SimpleGraph& g);

/// Delta-to-wye: drop the triangle's edges, add vertex `order()` joined to its corners.
SimpleGraph triangle_y(const SimpleGraph& g, const Triangle& t);

/// Wye-to-delta at a degree-3 vertex with independent neighbors. v is removed
/// and higher labels shift down by one.
SimpleGraph y_triangle(const SimpleGraph& g, Vertex v);

struct FamilyMember {
    CanonicalForm form;
    SimpleGraph graph;  // canonical representative
};

/// A graph and every cousin reachable by triangle/wye exchanges.
struct Family {
    SimpleGraph seed;
    std::size_t seed_index = 0;
    std::vector<FamilyMember> members;                          // ascending form
    std::vector<std::pair<std::size_t, std::size_t>> move_edges;  // i < j, sorted

    std::optional<std::size_t> find(const SimpleGraph& g) const;
    std::optional<std::size_t> find(const CanonicalForm& f) const;
    bool contains(const SimpleGraph& g) const { return find(g).has_value(); }
    std::size_t size() const { return members.size(); }
};

struct ClosureOptions {
    /// Shuffle the frontier with this seed; the result must not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
    /// Only apply triangle-to-wye moves (descendants rather than cousins).
    bool triangle_y_only = false;
};

Family family_closure(const SimpleGraph& seed, const ClosureOptions& options = {});

}  // namespace ikg
