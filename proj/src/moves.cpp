#include "ikg/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace ikg {

std::vector<Triangle> triangles(const SimpleGraph& g)
{
    std::vector<Triangle> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        const VertexSet higher = ~(bit(u + 1) - 1);
        for (Vertex v : members(g.neighbors(u) & higher))
            for (Vertex w : members(g.neighbors(u) & g.neighbors(v) & ~(bit(v + 1) - 1)))
                out.push_back({u, v, w});
    }
    return out;
}

std::vector<Vertex> y_triangle_sites(const SimpleGraph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3)
            continue;
        const VertexSet nb = g.neighbors(v);
        bool independent = true;
        for (Vertex u : members(nb))
            independent = independent && !(g.neighbors(u) & nb);
        if (independent)
            out.push_back(v);
    }
    return out;
}

SimpleGraph triangle_y(const SimpleGraph& g, const Triangle& t)
{
    const auto [x, y, z] = t;
    if (x == y || y == z || x == z || !g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z))
        throw GraphError("triangle_y: vertices " + std::to_string(x) + "," + std::to_string(y) +
                         "," + std::to_string(z) + " do not form a triangle");
    SimpleGraph out(g.order() + 1);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    out.remove_edge(x, y);
    out.remove_edge(y, z);
    out.remove_edge(x, z);
    const Vertex hub = g.order();
    out.add_edge(hub, x);
    out.add_edge(hub, y);
    out.add_edge(hub, z);
    return out;
}

SimpleGraph y_triangle(const SimpleGraph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw GraphError("y_triangle: vertex " + std::to_string(v) + " out of range");
    if (g.degree(v) != 3)
        throw GraphError("y_triangle: vertex " + std::to_string(v) + " has degree " +
                         std::to_string(g.degree(v)) + ", expected 3");
    const auto nb = members(g.neighbors(v));
    for (Vertex u : nb)
        if (g.neighbors(u) & g.neighbors(v))
            throw GraphError("y_triangle: neighbors of vertex " + std::to_string(v) +
                             " are not pairwise non-adjacent");
    SimpleGraph out(g.order() - 1);
    auto shift = [v](Vertex u) { return u > v ? u - 1 : u; };
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v)
            out.add_edge(shift(e.u), shift(e.v));
    out.add_edge(shift(nb[0]), shift(nb[1]));
    out.add_edge(shift(nb[1]), shift(nb[2]));
    out.add_edge(shift(nb[0]), shift(nb[2]));
    return out;
}

std::optional<std::size_t> Family::find(const CanonicalForm& f) const
{
    auto it = std::lower_bound(members.begin(), members.end(), f,
                               [](const FamilyMember& m, const CanonicalForm& x) { return m.form < x; });
    if (it == members.end() || it->form != f)
        return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
}

std::optional<std::size_t> Family::find(const SimpleGraph& g) const
{
    return find(canonical_form(g));
}

Family family_closure(const SimpleGraph& seed, const ClosureOptions& options)
{
    const int edge_count = seed.edge_count();
    std::map<CanonicalForm, SimpleGraph> found;
    std::set<std::pair<CanonicalForm, CanonicalForm>> moves;
    std::deque<CanonicalForm> frontier;
    std::mt19937_64 rng(options.shuffle_seed.value_or(0));

    const CanonicalForm seed_form = canonical_form(seed);
    found.emplace(seed_form, canonical_representative(seed));
    frontier.push_back(seed_form);

    auto visit = [&](const CanonicalForm& from, const SimpleGraph& next) {
        if (next.edge_count() != edge_count)
            throw std::logic_error("family closure changed the edge count");
        CanonicalLabeling lab = canonical_labeling(next);
        if (found.emplace(lab.form, next.relabeled(lab.position)).second)
            frontier.push_back(lab.form);
        auto key = from < lab.form ? std::pair{from, lab.form} : std::pair{lab.form, from};
        if (key.first != key.second)
            moves.insert(std::move(key));
    };

    while (!frontier.empty()) {
        if (options.shuffle_seed) {
            std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
            std::swap(frontier.front(), frontier[pick(rng)]);
        }
        const CanonicalForm form = frontier.front();
        frontier.pop_front();
        const SimpleGraph g = found.at(form);
        for (const Triangle& t : triangles(g))
            visit(form, triangle_y(g, t));
        if (!options.triangle_y_only)
            for (Vertex v : y_triangle_sites(g))
                visit(form, y_triangle(g, v));
    }

    Family fam;
    fam.seed = seed;
    fam.members.reserve(found.size());
    for (auto& [form, graph] : found)
        fam.members.push_back({form, std::move(graph)});
    fam.seed_index = *fam.find(seed_form);
    for (const auto& [x, y] : moves) {
        std::size_t i = *fam.find(x), j = *fam.find(y);
        fam.move_edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(fam.move_edges.begin(), fam.move_edges.end());
    return fam;
}

}  // namespace ikg
