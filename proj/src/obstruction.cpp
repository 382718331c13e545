#include "ikg/obstruction.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "ikg/builders.hpp"
#include "ikg/moves.hpp"

namespace ikg {

bool is_planar(const SimpleGraph& g)
{
    const int n = g.order();
    const int m = g.edge_count();
    if (m <= 8 || n <= 4)
        return true;
    if (m > 3 * n - 6)
        return false;
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(n);
    for (const Edge& e : g.edges())
        boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar(const Multigraph& g)
{
    return is_planar(g.underlying());
}

bool is_planar_by_minors(const SimpleGraph& g)
{
    static const SimpleGraph k5 = complete_graph(5);
    static const SimpleGraph k33 = complete_multipartite({3, 3});
    return !has_minor(g, k5) && !has_minor(g, k33);
}

std::optional<ApexCertificate> is_2_apex(const SimpleGraph& g)
{
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (is_planar(delete_pair(g, a, b)))
                return ApexCertificate{a, b};
    return std::nullopt;
}

bool verify_apex_certificate(const SimpleGraph& g, const ApexCertificate& c)
{
    if (c.a < 0 || c.b < 0 || c.a >= g.order() || c.b >= g.order() || c.a == c.b)
        return false;
    return is_planar(g.induced(g.all_vertices() & ~bit(c.a) & ~bit(c.b)));
}

std::string_view to_string(PropCondition c)
{
    switch (c) {
    case PropCondition::C1: return "C1";
    case PropCondition::C2: return "C2";
    case PropCondition::C3: return "C3";
    }
    return "?";
}

std::optional<PropCondition> prop1_evaluate(const ReductionReport& r)
{
    static const SimpleGraph k33 = complete_multipartite({3, 3});
    if (r.actual_edges <= 8)
        return PropCondition::C1;
    if (r.actual_edges == 9) {
        const bool is_k33 = r.reduced.is_simple() && are_isomorphic(r.reduced.underlying(), k33);
        if (!is_k33)
            return PropCondition::C2;
        return std::nullopt;
    }
    if (r.actual_edges == 10 && r.reduced.has_parallel_edge() &&
        !has_minor(r.reduced.underlying(), k33))
        return PropCondition::C3;
    return std::nullopt;
}

void KnownIkSet::add(std::string name, const SimpleGraph& g)
{
    CanonicalForm f = canonical_form(g);
    if (index_.count(f))
        return;
    index_.emplace(f, entries_.size());
    entries_.push_back({std::move(name), g, std::move(f)});
}

const KnownIkGraph* KnownIkSet::find(const CanonicalForm& f) const
{
    auto it = index_.find(f);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

KnownIkSet standard_known_ik()
{
    KnownIkSet known;
    const SimpleGraph k7 = complete_graph(7);
    known.add("K7", k7);
    const Family descendants = family_closure(k7, {.shuffle_seed = {}, .triangle_y_only = true});
    std::map<int, int> per_order;
    for (const FamilyMember& m : descendants.members) {
        if (m.form == canonical_form(k7))
            continue;
        const int n = m.graph.order();
        known.add("K7-dY-" + std::to_string(n) + "v-" + std::to_string(per_order[n]++), m.graph);
    }
    const Family k3311 = family_closure(complete_multipartite({3, 3, 1, 1}));
    for (std::size_t i = 0; i < k3311.members.size(); ++i)
        known.add("K3311-family-" + std::to_string(i), k3311.members[i].graph);
    return known;
}

std::string_view to_string(IkCertificate::Route r)
{
    switch (r) {
    case IkCertificate::Route::isomorphism: return "isomorphism";
    case IkCertificate::Route::edge_contraction: return "edge_contraction";
    case IkCertificate::Route::minor_search: return "minor_search";
    }
    return "?";
}

namespace {

// Fills in the edge images for given branch sets; every pattern edge must be
// realizable.
MinorWitness witness_from_branch_sets(const SimpleGraph& host, const KnownIkGraph& known,
                                      std::vector<std::vector<Vertex>> sets)
{
    MinorWitness w;
    w.pattern_name = known.name;
    w.branch_sets = std::move(sets);
    for (const Edge& e : known.graph.edges()) {
        bool done = false;
        for (Vertex x : w.branch_sets[e.u]) {
            for (Vertex y : w.branch_sets[e.v])
                if (host.has_edge(x, y)) {
                    w.edge_assignment.push_back({e, Edge(x, y)});
                    done = true;
                    break;
                }
            if (done)
                break;
        }
        if (!done)
            throw std::logic_error("certify_ik: pattern edge without a host image");
    }
    return w;
}

}  // namespace

std::optional<IkCertificate> certify_ik(const SimpleGraph& g, const KnownIkSet& known,
                                        bool full_search)
{
    if (const KnownIkGraph* hit = known.find(canonical_form(g))) {
        auto iso = find_isomorphism(hit->graph, g);
        std::vector<std::vector<Vertex>> sets;
        for (Vertex v : *iso)
            sets.push_back({v});
        return IkCertificate{IkCertificate::Route::isomorphism, std::nullopt,
                             witness_from_branch_sets(g, *hit, std::move(sets))};
    }

    for (const Edge& e : g.edges()) {
        const SimpleGraph c = contract_edge(g, e);
        const KnownIkGraph* hit = known.find(canonical_form(c));
        if (!hit)
            continue;
        auto iso = find_isomorphism(hit->graph, c);
        std::vector<std::vector<Vertex>> sets;
        for (Vertex v : *iso) {
            // contract_edge keeps e.u and shifts labels above e.v down by one
            if (v == e.u)
                sets.push_back({e.u, e.v});
            else
                sets.push_back({v >= e.v ? v + 1 : v});
        }
        return IkCertificate{IkCertificate::Route::edge_contraction, e,
                             witness_from_branch_sets(g, *hit, std::move(sets))};
    }

    if (!full_search)
        return std::nullopt;
    for (const KnownIkGraph& k : known.entries()) {
        if (k.graph.order() > g.order() || k.graph.edge_count() > g.edge_count())
            continue;
        if (auto w = has_minor(g, k.graph, k.name))
            return IkCertificate{IkCertificate::Route::minor_search, std::nullopt, std::move(*w)};
    }
    return std::nullopt;
}

bool verify_ik_certificate(const SimpleGraph& g, const KnownIkSet& known, const IkCertificate& c)
{
    for (const KnownIkGraph& k : known.entries())
        if (k.name == c.witness.pattern_name)
            return verify_minor_witness(g, k.graph, c.witness);
    return false;
}

void write_apex_certificate(std::ostream& out, const ApexCertificate& c)
{
    out << "deleted_pair: " << c.a << ' ' << c.b << '\n';
}

void write_ik_certificate(std::ostream& out, const IkCertificate& c)
{
    out << "route: " << to_string(c.route) << '\n';
    if (c.contracted)
        out << "contracted_edge: " << c.contracted->u << ' ' << c.contracted->v << '\n';
    write_witness(out, c.witness);
}

}  // namespace ikg
