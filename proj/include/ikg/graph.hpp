#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ikg {

using Vertex = int;

/// Bitmask over vertex labels 0..63.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
std::vector<Vertex> members(VertexSet s);

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, normalized so that u <= v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loop-free, multiplicity-free undirected graph on vertices 0..order-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int order);

    static SimpleGraph from_edges(int order, std::span<const Edge> edges);
    static SimpleGraph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;

    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const { return popcount(adj_.at(v)); }
    VertexSet neighbors(Vertex v) const { return adj_.at(v); }
    VertexSet all_vertices() const;

    /// Edges sorted lexicographically.
    std::vector<Edge> edges() const;

    /// perm[old] = new label. perm must be a permutation of 0..order-1.
    SimpleGraph relabeled(std::span<const int> perm) const;

    /// Subgraph induced by `keep`, renumbered in ascending order of the kept labels.
    SimpleGraph induced(VertexSet keep) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
};

/// Undirected graph allowing loops and parallel edges. A loop adds 2 to the degree.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int order);
    explicit Multigraph(const SimpleGraph& g);

    int order() const { return n_; }
    int edge_count() const;

    /// Number of parallel edges between u and v (loops when u == v).
    int multiplicity(Vertex u, Vertex v) const { return m_[index(u, v)]; }
    void add_edge(Vertex u, Vertex v, int count = 1);
    void remove_edge(Vertex u, Vertex v, int count = 1);

    int degree(Vertex v) const;
    int loops(Vertex v) const { return multiplicity(v, v); }

    bool has_loop() const;
    bool has_parallel_edge() const;
    bool is_simple() const { return !has_loop() && !has_parallel_edge(); }

    /// Underlying simple graph: loops dropped, multiplicities collapsed to 1.
    SimpleGraph underlying() const;

    /// Distinct vertex pairs carrying at least one edge, with their multiplicity.
    struct EdgeClass {
        Vertex u;
        Vertex v;
        int count;
    };
    std::vector<EdgeClass> edge_classes() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const;

    int n_ = 0;
    std::vector<std::uint8_t> m_;
};

/// Per-vertex degrees, sorted descending.
std::vector<int> degree_sequence(const SimpleGraph& g);
std::vector<int> degree_sequence(const Multigraph& g);

bool is_triangle_free(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
int min_degree(const SimpleGraph& g);
int max_degree(const SimpleGraph& g);
int count_degree(const SimpleGraph& g, int degree);

/// Vertex sets around a vertex a (and optionally a partner b) used by the
/// pair-deletion edge count. V_n sets never contain a or b.
struct NeighborhoodProfile {
    Vertex a = 0;
    std::optional<Vertex> b;

    VertexSet adj_a = 0;                 // V(a)
    std::array<VertexSet, 3> deg_a{};    // V_3(a), V_4(a), V_5(a)
    VertexSet adj_b = 0;                 // V(b), empty without b
    std::array<VertexSet, 3> deg_b{};
    std::array<VertexSet, 3> deg_ab{};   // V_n(a) ∩ V_n(b)
    VertexSet y_ab = 0;                  // V_Y(a,b)
    VertexSet far_a = 0;                 // distance >= 2 from a
    std::vector<Edge> extra_edges_a;     // edges inside far_a

    VertexSet of_a(int n) const { return deg_a.at(n - 3); }
    VertexSet of_b(int n) const { return deg_b.at(n - 3); }
    VertexSet common(int n) const { return deg_ab.at(n - 3); }
};

NeighborhoodProfile neighborhood_profile(const SimpleGraph& g, Vertex a,
                                         std::optional<Vertex> b = std::nullopt);

/// Neighbors of v with degree n, excluding everything in `exclude`.
VertexSet neighbors_of_degree(const SimpleGraph& g, Vertex v, int n, VertexSet exclude = 0);

std::string to_string(const SimpleGraph& g);
std::string to_string(const Multigraph& g);

}  // namespace ikg
