#include "ikg/reduction.hpp"

#include <ostream>

#include "ikg/builders.hpp"
#include "ikg/canonical.hpp"
#include "ikg/graph6.hpp"

namespace ikg {

namespace {

void check_pair(const SimpleGraph& g, Vertex a, Vertex b)
{
    if (a < 0 || a >= g.order() || b < 0 || b >= g.order())
        throw GraphError("vertex pair (" + std::to_string(a) + "," + std::to_string(b) +
                         ") out of range for order " + std::to_string(g.order()));
    if (a == b)
        throw GraphError("vertex pair must be two distinct vertices");
}

}  // namespace

PairDeletion delete_pair_mapped(const SimpleGraph& g, Vertex a, Vertex b)
{
    check_pair(g, a, b);
    const VertexSet gone = bit(a) | bit(b);
    VertexSet keep = 0;
    for (Vertex v : members(g.all_vertices() & ~gone))
        if (g.neighbors(v) & ~gone)
            keep |= bit(v);
    PairDeletion out;
    out.origin = members(keep);
    out.graph = Multigraph(g.induced(keep));
    return out;
}

Multigraph delete_pair(const SimpleGraph& g, Vertex a, Vertex b)
{
    return delete_pair_mapped(g, a, b).graph;
}

void reduce_in_place(Multigraph& g, std::vector<Vertex>& origin, VisitOrder order)
{
    const int n = g.order();
    std::vector<bool> alive(n, true);
    auto kill = [&](Vertex v) {
        for (Vertex u = 0; u < n; ++u)
            if (int k = g.multiplicity(v, u))
                g.remove_edge(v, u, k);
        alive[v] = false;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            const Vertex v = order == VisitOrder::ascending ? i : n - 1 - i;
            if (!alive[v])
                continue;
            const int d = g.degree(v);
            if (d <= 1 || (d == 2 && g.loops(v) == 1)) {
                kill(v);
                changed = true;
            } else if (d == 2) {
                Vertex ends[2];
                int found = 0;
                for (Vertex u = 0; u < n && found < 2; ++u)
                    for (int k = g.multiplicity(v, u); k > 0 && found < 2; --k)
                        ends[found++] = u;
                kill(v);
                g.add_edge(ends[0], ends[1]);
                changed = true;
            }
        }
    }

    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            kept.push_back(v);
    Multigraph compact(static_cast<int>(kept.size()));
    std::vector<Vertex> new_origin(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        new_origin[i] = origin.empty() ? kept[i] : origin[kept[i]];
        for (std::size_t j = i; j < kept.size(); ++j)
            if (int k = g.multiplicity(kept[i], kept[j]))
                compact.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), k);
    }
    g = std::move(compact);
    origin = std::move(new_origin);
}

CountTerms count_equation(const SimpleGraph& g, Vertex a, Vertex b)
{
    check_pair(g, a, b);
    const NeighborhoodProfile p = neighborhood_profile(g, a, b);
    CountTerms t;
    t.ne = g.degree(a) + g.degree(b) - (g.has_edge(a, b) ? 1 : 0);
    t.nv3 = popcount(p.of_a(3)) + popcount(p.of_b(3)) - popcount(p.common(3));
    t.v4ab = popcount(p.common(4));
    t.vy = popcount(p.y_ab);
    t.predicted_edges = g.edge_count() - t.ne - (t.nv3 + t.v4ab + t.vy);
    return t;
}

bool is_generic_pair(const SimpleGraph& g, Vertex a, Vertex b)
{
    check_pair(g, a, b);
    const NeighborhoodProfile p = neighborhood_profile(g, a, b);
    const VertexSet pair = bit(a) | bit(b);
    const VertexSet pendant = p.common(3);

    for (Vertex v : members(g.all_vertices() & ~pair))
        if (popcount(g.neighbors(v) & pendant) >= 2)
            return false;
    for (Vertex v : members(pendant))
        if (g.neighbors(v) & pendant)
            return false;

    const VertexSet charges[] = {p.of_a(3) & ~pendant, p.of_b(3) & ~pendant, p.common(4), p.y_ab};
    VertexSet charged = 0;
    for (VertexSet s : charges) {
        if (s & (charged | pendant))
            return false;
        charged |= s;
    }

    const VertexSet rest = g.all_vertices() & ~pair & ~pendant;
    for (Vertex v : members(g.all_vertices() & ~pair)) {
        const int after_pair = popcount(g.neighbors(v) & ~pair);
        if (after_pair <= 1 && !contains(pendant, v))
            return false;
    }
    for (Vertex v : members(rest)) {
        const int d = popcount(g.neighbors(v) & rest);
        if (d <= 1 || (d == 2) != contains(charged, v))
            return false;
    }

    // Every component of what remains must keep a vertex of degree >= 3.
    VertexSet unseen = rest;
    while (unseen) {
        VertexSet comp = unseen & (~unseen + 1), frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (Vertex v : members(frontier))
                next |= g.neighbors(v) & rest;
            frontier = next & ~comp;
            comp |= next;
        }
        if ((comp & ~charged) == 0)
            return false;
        unseen &= ~comp;
    }
    return true;
}

ReductionReport reduce(const SimpleGraph& g, Vertex a, Vertex b, VisitOrder order)
{
    PairDeletion del = delete_pair_mapped(g, a, b);
    ReductionReport r;
    r.a = a;
    r.b = b;
    r.reduced = std::move(del.graph);
    r.origin = std::move(del.origin);
    reduce_in_place(r.reduced, r.origin, order);
    r.actual_edges = r.reduced.edge_count();
    r.terms = count_equation(g, a, b);
    r.generic = is_generic_pair(g, a, b);
    return r;
}

bool is_reduction_k33(const SimpleGraph& g, Vertex a, Vertex b)
{
    const ReductionReport r = reduce(g, a, b);
    if (r.actual_edges != 9 || r.reduced.order() != 6 || !r.reduced.is_simple())
        return false;
    static const CanonicalForm k33 = canonical_form(complete_multipartite({3, 3}));
    return canonical_form(r.reduced.underlying()) == k33;
}

void write_multiplicity_sidecar(std::ostream& out, const Multigraph& g)
{
    for (const auto& c : g.edge_classes())
        if (c.u == c.v || c.count > 1)
            out << c.u << ' ' << c.v << ' ' << c.count << '\n';
}

void write_report(std::ostream& out, const ReductionReport& r)
{
    out << "a: " << r.a << '\n'
        << "b: " << r.b << '\n'
        << "ne: " << r.terms.ne << '\n'
        << "nv3: " << r.terms.nv3 << '\n'
        << "v4ab: " << r.terms.v4ab << '\n'
        << "vy: " << r.terms.vy << '\n'
        << "predicted_edges: " << r.terms.predicted_edges << '\n'
        << "actual_edges: " << r.actual_edges << '\n'
        << "generic: " << (r.generic ? "true" : "false") << '\n'
        << "reduced_order: " << r.reduced.order() << '\n'
        << "reduced_graph6: " << graph6_encode(r.reduced.underlying()) << '\n'
        << "reduced_origin:";
    for (Vertex v : r.origin)
        out << ' ' << v;
    out << '\n' << "multiplicities:\n";
    write_multiplicity_sidecar(out, r.reduced);
}

}  // namespace ikg
