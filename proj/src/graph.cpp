#include "ikg/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ikg {

std::vector<Vertex> members(VertexSet s)
{
    std::vector<Vertex> out;
    out.reserve(popcount(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

// ---------------------------------------------------------------- SimpleGraph

SimpleGraph::SimpleGraph(int order)
{
    if (order < 0 || order > kMaxOrder)
        throw GraphError("graph order " + std::to_string(order) + " outside 0.." +
                         std::to_string(kMaxOrder));
    adj_.assign(order, 0);
}

SimpleGraph SimpleGraph::from_edges(int order, std::span<const Edge> edges)
{
    SimpleGraph g(order);
    for (const Edge& e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges)
{
    SimpleGraph g(order);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void SimpleGraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(order()));
}

int SimpleGraph::edge_count() const
{
    int twice = 0;
    for (VertexSet row : adj_)
        twice += popcount(row);
    return twice / 2;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return contains(adj_[u], v);
}

void SimpleGraph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("loop at vertex " + std::to_string(u) + " in a simple graph");
    if (contains(adj_[u], v))
        throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (!contains(adj_[u], v))
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not present");
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

VertexSet SimpleGraph::all_vertices() const
{
    return order() == 64 ? ~VertexSet{0} : bit(order()) - 1;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : members(adj_[u] & ~(bit(u + 1) - 1)))
            out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != order())
        throw GraphError("relabeling size mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= order() || contains(seen, p))
            throw GraphError("relabeling is not a permutation");
        seen |= bit(p);
    }
    SimpleGraph out(order());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : members(adj_[u]))
            out.adj_[perm[u]] |= bit(perm[v]);
    return out;
}

SimpleGraph SimpleGraph::induced(VertexSet keep) const
{
    keep &= all_vertices();
    std::vector<Vertex> kept = members(keep);
    std::vector<int> pos(order(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        pos[kept[i]] = static_cast<int>(i);
    SimpleGraph out(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (Vertex v : members(adj_[kept[i]] & keep))
            out.adj_[i] |= bit(pos[v]);
    return out;
}

// ----------------------------------------------------------------- Multigraph

Multigraph::Multigraph(int order) : n_(order)
{
    if (order < 0 || order > kMaxOrder)
        throw GraphError("multigraph order " + std::to_string(order) + " outside 0.." +
                         std::to_string(kMaxOrder));
    m_.assign(static_cast<std::size_t>(order) * order, 0);
}

Multigraph::Multigraph(const SimpleGraph& g) : Multigraph(g.order())
{
    for (const Edge& e : g.edges())
        add_edge(e.u, e.v);
}

std::size_t Multigraph::index(Vertex u, Vertex v) const
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw GraphError("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for order " + std::to_string(n_));
    return static_cast<std::size_t>(u) * n_ + v;
}

int Multigraph::edge_count() const
{
    int total = 0;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u; v < n_; ++v)
            total += m_[static_cast<std::size_t>(u) * n_ + v];
    return total;
}

void Multigraph::add_edge(Vertex u, Vertex v, int count)
{
    if (count < 0)
        throw GraphError("negative edge count");
    const std::size_t uv = index(u, v);
    if (m_[uv] + count > 255)
        throw GraphError("edge multiplicity overflow");
    m_[uv] = static_cast<std::uint8_t>(m_[uv] + count);
    if (u != v)
        m_[index(v, u)] = m_[uv];
}

void Multigraph::remove_edge(Vertex u, Vertex v, int count)
{
    const std::size_t uv = index(u, v);
    if (count < 0 || m_[uv] < count)
        throw GraphError("removing more edges than present between " + std::to_string(u) +
                         " and " + std::to_string(v));
    m_[uv] = static_cast<std::uint8_t>(m_[uv] - count);
    if (u != v)
        m_[index(v, u)] = m_[uv];
}

int Multigraph::degree(Vertex v) const
{
    int d = 0;
    for (Vertex u = 0; u < n_; ++u)
        d += multiplicity(v, u);
    return d + loops(v);  // the loop was counted once above
}

bool Multigraph::has_loop() const
{
    for (Vertex v = 0; v < n_; ++v)
        if (loops(v) > 0)
            return true;
    return false;
}

bool Multigraph::has_parallel_edge() const
{
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (multiplicity(u, v) > 1)
                return true;
    return false;
}

SimpleGraph Multigraph::underlying() const
{
    SimpleGraph g(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (multiplicity(u, v) > 0)
                g.add_edge(u, v);
    return g;
}

std::vector<Multigraph::EdgeClass> Multigraph::edge_classes() const
{
    std::vector<EdgeClass> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u; v < n_; ++v)
            if (int k = multiplicity(u, v); k > 0)
                out.push_back({u, v, k});
    return out;
}

// ------------------------------------------------------------------- queries

std::vector<int> degree_sequence(const SimpleGraph& g)
{
    std::vector<int> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<int> degree_sequence(const Multigraph& g)
{
    std::vector<int> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool is_triangle_free(const SimpleGraph& g)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : members(g.neighbors(u) & ~(bit(u + 1) - 1)))
            if (g.neighbors(u) & g.neighbors(v))
                return false;
    return true;
}

bool is_connected(const SimpleGraph& g)
{
    if (g.order() == 0)
        return true;
    VertexSet seen = bit(0), frontier = bit(0);
    while (frontier) {
        VertexSet next = 0;
        for (Vertex v : members(frontier))
            next |= g.neighbors(v);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.all_vertices();
}

int min_degree(const SimpleGraph& g)
{
    int d = g.order() ? kMaxOrder : 0;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const SimpleGraph& g)
{
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

int count_degree(const SimpleGraph& g, int degree)
{
    int c = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        c += g.degree(v) == degree;
    return c;
}

VertexSet neighbors_of_degree(const SimpleGraph& g, Vertex v, int n, VertexSet exclude)
{
    VertexSet out = 0;
    for (Vertex u : members(g.neighbors(v) & ~exclude))
        if (g.degree(u) == n)
            out |= bit(u);
    return out;
}

NeighborhoodProfile neighborhood_profile(const SimpleGraph& g, Vertex a, std::optional<Vertex> b)
{
    if (a < 0 || a >= g.order())
        throw GraphError("vertex " + std::to_string(a) + " out of range");
    if (b && (*b < 0 || *b >= g.order()))
        throw GraphError("vertex " + std::to_string(*b) + " out of range");
    if (b && *b == a)
        throw GraphError("profile pair must be two distinct vertices");

    NeighborhoodProfile p;
    p.a = a;
    p.b = b;
    const VertexSet pair = bit(a) | (b ? bit(*b) : 0);

    p.adj_a = g.neighbors(a);
    for (int n = 3; n <= 5; ++n)
        p.deg_a[n - 3] = neighbors_of_degree(g, a, n, pair);

    if (b) {
        p.adj_b = g.neighbors(*b);
        for (int n = 3; n <= 5; ++n) {
            p.deg_b[n - 3] = neighbors_of_degree(g, *b, n, pair);
            p.deg_ab[n - 3] = p.deg_a[n - 3] & p.deg_b[n - 3];
        }
        for (Vertex d : members(p.common(3)))
            p.y_ab |= neighbors_of_degree(g, d, 3, pair);
    }

    p.far_a = g.all_vertices() & ~(bit(a) | p.adj_a);
    for (Vertex u : members(p.far_a))
        for (Vertex v : members(g.neighbors(u) & p.far_a))
            if (u < v)
                p.extra_edges_a.emplace_back(u, v);
    return p;
}

std::string to_string(const SimpleGraph& g)
{
    std::ostringstream os;
    os << "n=" << g.order() << " m=" << g.edge_count() << " :";
    for (const Edge& e : g.edges())
        os << ' ' << e.u << '-' << e.v;
    return os.str();
}

std::string to_string(const Multigraph& g)
{
    std::ostringstream os;
    os << "n=" << g.order() << " m=" << g.edge_count() << " :";
    for (const auto& c : g.edge_classes()) {
        os << ' ' << c.u << '-' << c.v;
        if (c.count > 1)
            os << 'x' << c.count;
    }
    return os.str();
}

}  // namespace ikg
