#include "ikg/minor.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "ikg/canonical.hpp"

namespace ikg {

namespace {

// A contraction of the host: each vertex of g stands for a connected set of
// host vertices.
struct State {
    SimpleGraph g;
    std::vector<VertexSet> groups;
};

State merge(const State& s, Vertex keep, Vertex gone)
{
    const int n = s.g.order();
    auto shift = [gone](Vertex x) { return x > gone ? x - 1 : x; };
    State out{SimpleGraph(n - 1), std::vector<VertexSet>(n - 1)};
    for (Vertex v = 0; v < n; ++v)
        if (v != gone)
            out.groups[shift(v)] = s.groups[v];
    out.groups[shift(keep)] |= s.groups[gone];
    for (const Edge& e : s.g.edges()) {
        Vertex x = e.u == gone ? keep : e.u;
        Vertex y = e.v == gone ? keep : e.v;
        if (x != y && !out.g.has_edge(shift(x), shift(y)))
            out.g.add_edge(shift(x), shift(y));
    }
    return out;
}

State drop(const State& s, Vertex gone)
{
    State out{s.g.induced(s.g.all_vertices() & ~bit(gone)), {}};
    for (Vertex v = 0; v < s.g.order(); ++v)
        if (v != gone)
            out.groups.push_back(s.groups[v]);
    return out;
}

// Removes vertices of degree <= 1 and contracts degree-2 vertices; valid for
// patterns of minimum degree >= 3.
void strip_low_degree(State& s)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < s.g.order(); ++v) {
            const int d = s.g.degree(v);
            if (d <= 1) {
                s = drop(s, v);
                changed = true;
                break;
            }
            if (d == 2) {
                s = merge(s, std::countr_zero(s.g.neighbors(v)), v);
                changed = true;
                break;
            }
        }
    }
}

class MinorSearch {
public:
    MinorSearch(const SimpleGraph& pattern, bool spanning)
        : pattern_(pattern),
          spanning_(spanning),
          strip_(pattern.order() > 0 && min_degree(pattern) >= 3)
    {
    }

    std::optional<std::pair<State, std::vector<Vertex>>> run(State s)
    {
        if (strip_)
            strip_low_degree(s);
        if (s.g.order() < pattern_.order() || s.g.edge_count() < pattern_.edge_count())
            return std::nullopt;
        CanonicalForm form = canonical_form(s.g);
        if (failed_.count(form))
            return std::nullopt;

        if (!spanning_ || s.g.order() == pattern_.order()) {
            if (auto map = find_monomorphism(pattern_, s.g))
                return std::pair{std::move(s), std::move(*map)};
            if (spanning_) {
                failed_.insert(std::move(form));
                return std::nullopt;
            }
        }

        // Contract edges that lose the fewest edges first.
        struct Candidate {
            int loss;
            Edge e;
        };
        std::vector<Candidate> order;
        for (const Edge& e : s.g.edges())
            order.push_back({1 + popcount(s.g.neighbors(e.u) & s.g.neighbors(e.v)), e});
        std::stable_sort(order.begin(), order.end(),
                         [](const Candidate& x, const Candidate& y) { return x.loss < y.loss; });
        for (const Candidate& c : order) {
            if (s.g.edge_count() - c.loss < pattern_.edge_count())
                continue;
            if (auto hit = run(merge(s, c.e.u, c.e.v)))
                return hit;
        }
        failed_.insert(std::move(form));
        return std::nullopt;
    }

private:
    const SimpleGraph& pattern_;
    bool spanning_;
    bool strip_;
    std::unordered_set<CanonicalForm, CanonicalFormHash> failed_;
};

MinorWitness build_witness(const SimpleGraph& host, const SimpleGraph& pattern, const State& s,
                           const std::vector<Vertex>& map, std::string name)
{
    MinorWitness w;
    w.pattern_name = std::move(name);
    for (Vertex p = 0; p < pattern.order(); ++p)
        w.branch_sets.push_back(members(s.groups[map[p]]));
    for (const Edge& e : pattern.edges()) {
        const VertexSet from = s.groups[map[e.u]], to = s.groups[map[e.v]];
        for (Vertex u : members(from))
            if (VertexSet hit = host.neighbors(u) & to) {
                w.edge_assignment.push_back({e, Edge(u, std::countr_zero(hit))});
                break;
            }
    }
    return w;
}

std::vector<VertexSet> components(const SimpleGraph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.all_vertices();
    while (unseen) {
        VertexSet comp = unseen & (~unseen + 1), frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (Vertex v : members(frontier))
                next |= g.neighbors(v);
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

}  // namespace

std::optional<std::vector<Vertex>> find_monomorphism(const SimpleGraph& pattern,
                                                     const SimpleGraph& host)
{
    const int p = pattern.order();
    if (p > host.order() || pattern.edge_count() > host.edge_count())
        return std::nullopt;

    // Match order: each next vertex has the most already-placed neighbors.
    std::vector<Vertex> order;
    VertexSet placed = 0;
    for (int i = 0; i < p; ++i) {
        Vertex best = -1;
        int best_links = -1, best_deg = -1;
        for (Vertex v : members(pattern.all_vertices() & ~placed)) {
            int links = popcount(pattern.neighbors(v) & placed), deg = pattern.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed |= bit(best);
    }

    std::vector<Vertex> map(p, -1);
    VertexSet used = 0;
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == p)
            return true;
        const Vertex pv = order[depth];
        VertexSet cand = host.all_vertices() & ~used;
        for (Vertex u : members(pattern.neighbors(pv)))
            if (map[u] >= 0)
                cand &= host.neighbors(map[u]);
        for (Vertex h : members(cand)) {
            if (host.degree(h) < pattern.degree(pv))
                continue;
            map[pv] = h;
            used |= bit(h);
            if (self(self, depth + 1))
                return true;
            used &= ~bit(h);
            map[pv] = -1;
        }
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    return map;
}

std::optional<MinorWitness> has_minor(const SimpleGraph& host, const SimpleGraph& pattern,
                                      std::string pattern_name)
{
    if (pattern.order() == 0)
        return MinorWitness{std::move(pattern_name), {}, {}};
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count())
        return std::nullopt;

    auto start = [&](VertexSet keep) {
        State s{host.induced(keep), {}};
        for (Vertex v : members(keep))
            s.groups.push_back(bit(v));
        return s;
    };

    if (is_connected(pattern)) {
        // A connected pattern lives in one host component, and a model there can
        // be grown until it covers the component, so only contractions down to
        // exactly pattern.order() vertices need a subgraph test.
        MinorSearch search(pattern, /*spanning=*/true);
        for (VertexSet comp : components(host))
            if (auto hit = search.run(start(comp)))
                return build_witness(host, pattern, hit->first, hit->second, std::move(pattern_name));
        return std::nullopt;
    }
    MinorSearch search(pattern, /*spanning=*/false);
    if (auto hit = search.run(start(host.all_vertices())))
        return build_witness(host, pattern, hit->first, hit->second, std::move(pattern_name));
    return std::nullopt;
}

bool verify_minor_witness(const SimpleGraph& host, const SimpleGraph& pattern,
                          const MinorWitness& w)
{
    if (static_cast<int>(w.branch_sets.size()) != pattern.order())
        return false;
    std::vector<VertexSet> sets;
    VertexSet used = 0;
    for (const auto& b : w.branch_sets) {
        VertexSet s = 0;
        for (Vertex v : b) {
            if (v < 0 || v >= host.order() || contains(s, v))
                return false;
            s |= bit(v);
        }
        if (s == 0 || (s & used))
            return false;
        used |= s;
        // connected inside host
        VertexSet reach = s & (~s + 1), frontier = reach;
        while (frontier) {
            VertexSet next = 0;
            for (Vertex v : members(frontier))
                next |= host.neighbors(v) & s;
            frontier = next & ~reach;
            reach |= next;
        }
        if (reach != s)
            return false;
        sets.push_back(s);
    }
    std::vector<Edge> realized;
    for (const auto& img : w.edge_assignment) {
        if (!pattern.has_edge(img.pattern.u, img.pattern.v))
            return false;
        if (img.host.u == img.host.v || img.host.v >= host.order() || img.host.u < 0 ||
            !host.has_edge(img.host.u, img.host.v))
            return false;
        const VertexSet x = sets[img.pattern.u], y = sets[img.pattern.v];
        const bool forward = contains(x, img.host.u) && contains(y, img.host.v);
        const bool backward = contains(y, img.host.u) && contains(x, img.host.v);
        if (!forward && !backward)
            return false;
        realized.push_back(img.pattern);
    }
    std::sort(realized.begin(), realized.end());
    return realized == pattern.edges();
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e)
{
    if (e.u == e.v || !g.has_edge(e.u, e.v))
        throw GraphError("contract_edge: edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "} not present");
    State s{g, std::vector<VertexSet>(g.order(), 0)};
    return merge(s, e.u, e.v).g;
}

void write_witness(std::ostream& out, const MinorWitness& w)
{
    out << "pattern: " << w.pattern_name << '\n';
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i) {
        out << "branch " << i << ':';
        for (Vertex v : w.branch_sets[i])
            out << ' ' << v;
        out << '\n';
    }
    for (const auto& img : w.edge_assignment)
        out << "edge " << img.pattern.u << '-' << img.pattern.v << ": " << img.host.u << '-'
            << img.host.v << '\n';
}

}  // namespace ikg
