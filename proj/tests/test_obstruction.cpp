#include <doctest.h>

#include <random>
#include <sstream>

#include "ikg/builders.hpp"
#include "ikg/canonical.hpp"
#include "ikg/catalog.hpp"
#include "ikg/minor.hpp"
#include "ikg/obstruction.hpp"
#include "ikg/reduction.hpp"
#include "support/oracles.hpp"

using namespace ikg;

namespace {

const SimpleGraph& k33()
{
    static const SimpleGraph g = complete_multipartite({3, 3});
    return g;
}

SimpleGraph cube_graph()
{
    SimpleGraph g(8);
    for (Vertex v = 0; v < 8; ++v)
        for (int d = 0; d < 3; ++d)
            if (Vertex u = v ^ (1 << d); u > v)
                g.add_edge(v, u);
    return g;
}

}  // namespace

TEST_CASE("planarity of named graphs")
{
    CHECK(is_planar(SimpleGraph(0)));
    CHECK(is_planar(complete_graph(4)));
    CHECK(is_planar(cube_graph()));
    CHECK(is_planar(prism_graph(5)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(k33()));
    CHECK_FALSE(is_planar(petersen_graph()));

    // Loops and multiplicities do not matter.
    Multigraph doubled(k33());
    doubled.add_edge(0, 3);
    doubled.add_edge(1, 1);
    CHECK_FALSE(is_planar(doubled));
    Multigraph loopy(complete_graph(4));
    loopy.add_edge(2, 2, 3);
    CHECK(is_planar(loopy));
}

TEST_CASE("planar graphs respect the Euler edge bounds")
{
    std::mt19937_64 rng(31);
    int planar = 0;
    for (int i = 0; i < 400; ++i) {
        const int n = 3 + rng() % 12;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.15 + 0.05 * (rng() % 8));
        if (!is_planar(g))
            continue;
        ++planar;
        CHECK(g.edge_count() <= 3 * n - 6);
        if (is_triangle_free(g) && n >= 3)
            CHECK(g.edge_count() <= 2 * n - 4);
    }
    CHECK(planar > 100);
}

TEST_CASE("planarity agrees with Kuratowski minor exclusion")
{
    std::mt19937_64 rng(32);
    int nonplanar = 0;
    for (int i = 0; i < 300; ++i) {
        const int n = 5 + rng() % 6;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.35 + 0.05 * (rng() % 6));
        const bool p = is_planar(g);
        nonplanar += !p;
        CAPTURE(to_string(g));
        CHECK(p == is_planar_by_minors(g));
    }
    CHECK(nonplanar > 50);
}

TEST_CASE("minors of named graphs")
{
    CHECK(has_minor(petersen_graph(), complete_graph(5)));
    CHECK(has_minor(petersen_graph(), k33()));
    CHECK_FALSE(has_minor(k33(), complete_graph(5)));
    CHECK_FALSE(has_minor(cube_graph(), complete_graph(5)));
    CHECK_FALSE(has_minor(cube_graph(), k33()));
    CHECK(has_minor(cycle_graph(7), complete_graph(3)));
    CHECK_FALSE(has_minor(star_graph(5), complete_graph(3)));
    CHECK(has_minor(complete_graph(7), k33()));
    // A pattern larger than the host never fits.
    CHECK_FALSE(has_minor(complete_graph(4), complete_graph(5)));

    const auto w = has_minor(petersen_graph(), k33(), "K3,3");
    REQUIRE(w.has_value());
    CHECK(w->pattern_name == "K3,3");
    CHECK(w->branch_sets.size() == 6);
    CHECK(w->edge_assignment.size() == 9);
    CHECK(verify_minor_witness(petersen_graph(), k33(), *w));
}

TEST_CASE("minor search agrees with brute-force branch assignment")
{
    const std::vector<std::pair<const char*, SimpleGraph>> patterns{
        {"K4", complete_graph(4)},
        {"C4", cycle_graph(4)},
        {"K1,3", star_graph(3)},
        {"2K2", disjoint_union(complete_graph(2), complete_graph(2))},
        {"K2,3", complete_multipartite({2, 3})},
    };
    std::mt19937_64 rng(33);
    for (const auto& [name, pattern] : patterns) {
        int yes = 0, no = 0;
        for (int i = 0; i < 40; ++i) {
            const int n = 4 + rng() % 4;
            const SimpleGraph host = oracle::random_graph(rng, n, 0.2 + 0.1 * (rng() % 5));
            const auto w = has_minor(host, pattern);
            const bool expected = oracle::brute_force_minor(host, pattern);
            CAPTURE(name);
            CAPTURE(to_string(host));
            CHECK(w.has_value() == expected);
            if (w)
                CHECK(verify_minor_witness(host, pattern, *w));
            (expected ? yes : no)++;
        }
        CHECK(yes > 0);
        CHECK(no > 0);
    }
}

TEST_CASE("minor witnesses that break a rule are rejected")
{
    // A triangle inside a hexagon: pairs of consecutive vertices.
    const SimpleGraph c6 = cycle_graph(6);
    const SimpleGraph k3 = complete_graph(3);
    MinorWitness w{"K3",
                   {{0, 1}, {2, 3}, {4, 5}},
                   {{Edge(0, 1), Edge(1, 2)}, {Edge(0, 2), Edge(0, 5)}, {Edge(1, 2), Edge(3, 4)}}};
    REQUIRE(verify_minor_witness(c6, k3, w));

    SUBCASE("overlapping branch sets")
    {
        w.branch_sets[1].push_back(1);
        CHECK_FALSE(verify_minor_witness(c6, k3, w));
    }
    SUBCASE("an edge image that is not a host edge")
    {
        w.edge_assignment[0].host = Edge(0, 3);
        CHECK_FALSE(verify_minor_witness(c6, k3, w));
    }
    SUBCASE("an edge image between the wrong branch sets")
    {
        w.edge_assignment[0].host = Edge(3, 4);
        CHECK_FALSE(verify_minor_witness(c6, k3, w));
    }
    SUBCASE("a missing pattern edge")
    {
        w.edge_assignment.pop_back();
        CHECK_FALSE(verify_minor_witness(c6, k3, w));
    }
    SUBCASE("a disconnected branch set")
    {
        w.branch_sets = {{0, 2}, {3, 4}, {5}};
        w.edge_assignment = {{Edge(0, 1), Edge(2, 3)}, {Edge(0, 2), Edge(0, 5)},
                             {Edge(1, 2), Edge(4, 5)}};
        CHECK_FALSE(verify_minor_witness(c6, k3, w));
    }
    SUBCASE("an empty branch set")
    {
        w.branch_sets[2].clear();
        CHECK_FALSE(verify_minor_witness(c6, k3, w));
    }
}

TEST_CASE("edge contraction")
{
    CHECK(contract_edge(complete_graph(3), Edge(0, 1)) == complete_graph(2));
    CHECK(are_isomorphic(contract_edge(cycle_graph(4), Edge(0, 1)), cycle_graph(3)));
    CHECK(contract_edge(complete_graph(8), Edge(3, 6)) == complete_graph(7));
    CHECK_THROWS_AS(contract_edge(cycle_graph(4), Edge(0, 2)), GraphError);

    std::mt19937_64 rng(34);
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + rng() % 10;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.4);
        for (const Edge& e : g.edges()) {
            const SimpleGraph c = contract_edge(g, e);
            CHECK(c.order() == n - 1);
            // The merged vertex loses e and one edge per common neighbor.
            const int common = popcount(g.neighbors(e.u) & g.neighbors(e.v));
            CHECK(c.edge_count() == g.edge_count() - 1 - common);
        }
    }
}

TEST_CASE("monomorphisms")
{
    const auto m = find_monomorphism(cycle_graph(5), petersen_graph());
    REQUIRE(m.has_value());
    for (const Edge& e : cycle_graph(5).edges())
        CHECK(petersen_graph().has_edge((*m)[e.u], (*m)[e.v]));
    CHECK_FALSE(find_monomorphism(complete_graph(3), petersen_graph()));
    CHECK_FALSE(find_monomorphism(cycle_graph(4), petersen_graph()));
}

TEST_CASE("2-apex tests")
{
    CHECK(is_2_apex(complete_graph(6)));
    CHECK_FALSE(is_2_apex(complete_graph(7)));
    CHECK_FALSE(is_2_apex(complete_multipartite({3, 3, 1, 1})));

    const auto c = is_2_apex(petersen_graph());
    REQUIRE(c.has_value());
    CHECK(c->a == 0);
    CHECK(c->b == 1);
    CHECK(verify_apex_certificate(petersen_graph(), *c));
    CHECK_FALSE(verify_apex_certificate(complete_graph(7), {0, 1}));
    CHECK_FALSE(verify_apex_certificate(petersen_graph(), {3, 3}));
    CHECK_FALSE(verify_apex_certificate(petersen_graph(), {0, 10}));

    std::ostringstream out;
    write_apex_certificate(out, *c);
    CHECK(out.str() == "deleted_pair: 0 1\n");
}

TEST_CASE("the first planar pair is the lexicographically first one")
{
    std::mt19937_64 rng(35);
    for (int i = 0; i < 150; ++i) {
        const int n = 6 + rng() % 6;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.5 + 0.05 * (rng() % 6));
        const auto c = is_2_apex(g);
        std::optional<ApexCertificate> expected;
        for (Vertex a = 0; a < n && !expected; ++a)
            for (Vertex b = a + 1; b < n && !expected; ++b)
                if (is_planar_by_minors(g.induced(g.all_vertices() & ~bit(a) & ~bit(b))))
                    expected = ApexCertificate{a, b};
        REQUIRE(c.has_value() == expected.has_value());
        if (c) {
            CHECK(c->a == expected->a);
            CHECK(c->b == expected->b);
        }
    }
}

TEST_CASE("condition tags on named reductions")
{
    CHECK(prop1_evaluate(reduce(k33(), 0, 1)) == PropCondition::C1);
    CHECK_FALSE(prop1_evaluate(reduce(complete_graph(7), 0, 1)).has_value());
    CHECK(to_string(PropCondition::C2) == "C2");
}

TEST_CASE("a condition tag implies a planar pair deletion")
{
    std::mt19937_64 rng(36);
    int seen[3] = {0, 0, 0};
    for (int i = 0; i < 3000; ++i) {
        const int n = 7 + rng() % 6;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.35 + 0.05 * (rng() % 5));
        const Vertex a = rng() % n;
        const Vertex b = (a + 1 + rng() % (n - 1)) % n;
        const auto r = reduce(g, a, b);
        const auto tag = prop1_evaluate(r);
        if (!tag)
            continue;
        ++seen[static_cast<int>(*tag)];
        CAPTURE(to_string(g));
        CAPTURE(a);
        CAPTURE(b);
        CHECK(is_planar(delete_pair(g, a, b)));
        CHECK(is_planar_by_minors(delete_pair(g, a, b).underlying()));
    }
    MESSAGE("C1 " << seen[0] << ", C2 " << seen[1] << ", C3 " << seen[2]);
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
}

TEST_CASE("known intrinsically knotted set")
{
    const KnownIkSet known = standard_known_ik();
    CHECK(known.size() == 72);
    CHECK(known.entries().front().name == "K7");
    int descendants = 0, k3311_family = 0;
    for (const auto& k : known.entries()) {
        CHECK(k.graph.edge_count() == 21 + (k.name.rfind("K3311", 0) == 0));
        descendants += k.name.rfind("K7-dY-", 0) == 0;
        k3311_family += k.name.rfind("K3311-family-", 0) == 0;
        CHECK(known.find(k.form) == &k);
    }
    CHECK(descendants == 13);
    CHECK(k3311_family == 58);
    CHECK(known.find(canonical_form(petersen_graph())) == nullptr);
}

TEST_CASE("certification routes")
{
    const KnownIkSet known = standard_known_ik();

    SUBCASE("isomorphic to a known graph")
    {
        const SimpleGraph g = complete_multipartite({3, 3, 1, 1})
                                  .relabeled(std::vector<int>{7, 6, 5, 4, 3, 2, 1, 0});
        const auto c = certify_ik(g, known);
        REQUIRE(c.has_value());
        CHECK(c->route == IkCertificate::Route::isomorphism);
        CHECK(c->witness.pattern_name.rfind("K3311-family-", 0) == 0);
        CHECK(verify_ik_certificate(g, known, *c));
    }
    SUBCASE("one contraction away")
    {
        const auto c = certify_ik(complete_graph(8), known);
        REQUIRE(c.has_value());
        CHECK(c->route == IkCertificate::Route::edge_contraction);
        CHECK(c->contracted == Edge(0, 1));
        CHECK(c->witness.pattern_name == "K7");
        CHECK(verify_ik_certificate(complete_graph(8), known, *c));

        const SimpleGraph& u = catalog_lookup("U'12").graph;
        const auto cu = certify_ik(u, known);
        REQUIRE(cu.has_value());
        CHECK(cu->route == IkCertificate::Route::edge_contraction);
        CHECK(verify_ik_certificate(u, known, *cu));
    }
    SUBCASE("only a deeper minor")
    {
        // K7 with every edge at vertex 0 subdivided is IK but no single
        // contraction reaches a known graph.
        SimpleGraph g(13);
        for (Vertex u = 1; u < 7; ++u)
            for (Vertex v = u + 1; v < 7; ++v)
                g.add_edge(u, v);
        for (Vertex u = 1; u < 7; ++u) {
            g.add_edge(0, u + 6);
            g.add_edge(u + 6, u);
        }
        CHECK_FALSE(certify_ik(g, known, false).has_value());
        const auto c = certify_ik(g, known);
        REQUIRE(c.has_value());
        CHECK(c->route == IkCertificate::Route::minor_search);
        CHECK(verify_ik_certificate(g, known, *c));
    }
    SUBCASE("nothing to certify")
    {
        CHECK_FALSE(certify_ik(k33(), known).has_value());
        CHECK_FALSE(certify_ik(petersen_graph(), known).has_value());
        CHECK_FALSE(certify_ik(complete_graph(6), known).has_value());
    }
}

TEST_CASE("a certificate naming the wrong pattern fails verification")
{
    const KnownIkSet known = standard_known_ik();
    auto c = certify_ik(complete_graph(8), known);
    REQUIRE(c.has_value());
    c->witness.pattern_name = "K3311-family-0";
    CHECK_FALSE(verify_ik_certificate(complete_graph(8), known, *c));
    c->witness.pattern_name = "no such graph";
    CHECK_FALSE(verify_ik_certificate(complete_graph(8), known, *c));
}

TEST_CASE("certificate text")
{
    const KnownIkSet known = standard_known_ik();
    const auto c = certify_ik(complete_graph(8), known);
    REQUIRE(c.has_value());
    std::ostringstream out;
    write_ik_certificate(out, *c);
    const std::string s = out.str();
    CHECK(s.find("route: edge_contraction\ncontracted_edge: 0 1\npattern: K7\n") == 0);
    CHECK(s.find("branch 0: 0 1\n") != std::string::npos);
    CHECK(s.find("edge 5-6: ") != std::string::npos);
}
