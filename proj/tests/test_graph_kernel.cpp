#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "ikg/builders.hpp"
#include "ikg/canonical.hpp"
#include "ikg/graph.hpp"
#include "ikg/graph6.hpp"
#include "support/oracles.hpp"

using namespace ikg;

namespace {

std::vector<Vertex> sorted_members(VertexSet s)
{
    return members(s);
}

}  // namespace

TEST_CASE("simple graph rejects loops, duplicates and out-of-range endpoints")
{
    SimpleGraph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(1, 0), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
    CHECK(g.edge_count() == 1);
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("multigraph counts a loop twice toward the degree")
{
    Multigraph m(2);
    m.add_edge(0, 0);
    m.add_edge(0, 1, 2);
    CHECK(m.degree(0) == 4);
    CHECK(m.degree(1) == 2);
    CHECK(m.edge_count() == 3);
    CHECK(m.has_loop());
    CHECK(m.has_parallel_edge());
    CHECK_FALSE(m.is_simple());
    CHECK(m.underlying().edge_count() == 1);
}

TEST_CASE("degree sequences")
{
    CHECK(degree_sequence(complete_graph(7)) == std::vector<int>(7, 6));
    CHECK(degree_sequence(complete_multipartite({3, 3})) == std::vector<int>(6, 3));
    CHECK(degree_sequence(SimpleGraph(1)) == std::vector<int>{0});
    CHECK(degree_sequence(star_graph(3)) == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("triangle-freeness on named graphs")
{
    CHECK(is_triangle_free(complete_multipartite({3, 3})));
    CHECK_FALSE(is_triangle_free(complete_multipartite({3, 3, 1, 1})));

    // Petersen: no triple of vertices is pairwise adjacent.
    const SimpleGraph p = petersen_graph();
    bool found = false;
    for (Vertex x = 0; x < 10; ++x)
        for (Vertex y = x + 1; y < 10; ++y)
            for (Vertex z = y + 1; z < 10; ++z)
                found = found || (p.has_edge(x, y) && p.has_edge(y, z) && p.has_edge(x, z));
    CHECK_FALSE(found);
    CHECK(is_triangle_free(p));
}

TEST_CASE("triangle-freeness agrees with the common-neighbor check on random graphs")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const SimpleGraph g = oracle::random_graph(rng, 3 + rng() % 12, 0.1 + 0.05 * (rng() % 8));
        CHECK(is_triangle_free(g) == !oracle::has_triangle(g));
    }
}

TEST_CASE("neighborhood profile of K3,3")
{
    const SimpleGraph k33 = complete_multipartite({3, 3});  // parts {0,1,2}, {3,4,5}

    SUBCASE("same-part pair")
    {
        const auto p = neighborhood_profile(k33, 0, 1);
        CHECK(sorted_members(p.common(3)) == std::vector<Vertex>{3, 4, 5});
        CHECK(sorted_members(p.y_ab) == std::vector<Vertex>{2});
    }
    SUBCASE("adjacent pair")
    {
        const auto p = neighborhood_profile(k33, 0, 3);
        CHECK(p.common(3) == 0);
        CHECK(popcount(p.of_a(3)) == 2);  // b itself is excluded
        CHECK(popcount(p.of_b(3)) == 2);
    }
}

TEST_CASE("neighborhood profile far set of a path endpoint")
{
    const auto p = neighborhood_profile(path_graph(3), 0);
    CHECK(sorted_members(p.far_a) == std::vector<Vertex>{2});
    CHECK(p.extra_edges_a.empty());
    CHECK_FALSE(p.b.has_value());
}

TEST_CASE("neighborhood profile rejects bad vertices")
{
    CHECK_THROWS_AS(neighborhood_profile(path_graph(3), 3), GraphError);
    CHECK_THROWS_AS(neighborhood_profile(path_graph(3), 0, 0), GraphError);
}

TEST_CASE("neighborhood profile matches the set definitions on random graphs")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const int n = 4 + rng() % 11;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.3);
        const Vertex a = rng() % n;
        Vertex b = rng() % n;
        if (b == a)
            b = (a + 1) % n;
        const auto p = neighborhood_profile(g, a, b);

        CHECK(popcount(p.adj_a) == g.degree(a));
        CHECK((p.far_a & p.adj_a) == 0);
        CHECK_FALSE(contains(p.far_a, a));
        CHECK((p.far_a | p.adj_a | bit(a)) == g.all_vertices());
        for (int d = 3; d <= 5; ++d) {
            CHECK(sorted_members(p.of_a(d)) == oracle::degree_n_neighbors(g, a, d, a, b));
            CHECK(sorted_members(p.of_b(d)) == oracle::degree_n_neighbors(g, b, d, a, b));
            CHECK(p.common(d) == (p.of_a(d) & p.of_b(d)));
            CHECK((p.of_a(d) & ~p.adj_a) == 0);
        }
        CHECK(sorted_members(p.y_ab) == oracle::y_set(g, a, b));
        for (const Edge& e : p.extra_edges_a)
            CHECK((contains(p.far_a, e.u) && contains(p.far_a, e.v)));
        int inside = 0;
        for (const Edge& e : g.edges())
            inside += contains(p.far_a, e.u) && contains(p.far_a, e.v);
        CHECK(inside == static_cast<int>(p.extra_edges_a.size()));
    }
}

TEST_CASE("canonical form is invariant under random relabeling")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + rng() % 12;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (rng() % 6));
        const auto perm = oracle::random_permutation(rng, n);
        CHECK(canonical_form(g) == canonical_form(g.relabeled(perm)));
    }
}

TEST_CASE("canonical form separates K3,3 from the triangular prism")
{
    CHECK(canonical_form(complete_multipartite({3, 3})) != canonical_form(prism_graph(3)));
    CHECK_FALSE(are_isomorphic(complete_multipartite({3, 3}), prism_graph(3)));
}

TEST_CASE("two labelings of the Petersen graph have the same form")
{
    // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            subsets.emplace_back(i, j);
    SimpleGraph kneser(10);
    for (int x = 0; x < 10; ++x)
        for (int y = x + 1; y < 10; ++y) {
            auto [a, b] = subsets[x];
            auto [c, d] = subsets[y];
            if (a != c && a != d && b != c && b != d)
                kneser.add_edge(x, y);
        }
    CHECK(canonical_form(kneser) == canonical_form(petersen_graph()));
    auto iso = find_isomorphism(kneser, petersen_graph());
    REQUIRE(iso.has_value());
    for (const Edge& e : kneser.edges())
        CHECK(petersen_graph().has_edge((*iso)[e.u], (*iso)[e.v]));
}

TEST_CASE("isomorphism simple cases")
{
    const SimpleGraph p = petersen_graph();
    CHECK(are_isomorphic(p, p));
    CHECK_FALSE(are_isomorphic(star_graph(3), path_graph(4)));
    CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("isomorphism agrees with brute force on small random pairs")
{
    std::mt19937_64 rng(14);
    int positives = 0;
    for (int i = 0; i < 400; ++i) {
        const int n = 1 + rng() % 7;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.5);
        // Half the time compare against a relabeled copy with one edge toggled.
        SimpleGraph h = g.relabeled(oracle::random_permutation(rng, n));
        if (n >= 2 && rng() % 2) {
            const Vertex u = rng() % n, v = (u + 1 + rng() % (n - 1)) % n;
            if (h.has_edge(u, v))
                h.remove_edge(u, v);
            else
                h.add_edge(u, v);
        }
        const bool expected = oracle::brute_force_isomorphic(g, h);
        positives += expected;
        CHECK(are_isomorphic(g, h) == expected);
        CHECK((canonical_form(g) == canonical_form(h)) == expected);
    }
    CHECK(positives > 100);
}

TEST_CASE("colored canonical form respects colors")
{
    const SimpleGraph p = path_graph(3);
    const std::vector<int> end_marked{1, 0, 0}, other_end{0, 0, 1}, middle{0, 1, 0};
    CHECK(canonical_form(p, end_marked) == canonical_form(p, other_end));
    CHECK(canonical_form(p, end_marked) != canonical_form(p, middle));
    CHECK(same_orbit(p, {}, 0, 2));
    CHECK_FALSE(same_orbit(p, {}, 0, 1));
}

TEST_CASE("multigraph canonical form sees loops and multiplicities")
{
    Multigraph doubled(3), looped(3);
    for (auto* m : {&doubled, &looped}) {
        m->add_edge(0, 1);
        m->add_edge(1, 2);
        m->add_edge(0, 2);
    }
    doubled.add_edge(0, 1);
    looped.add_edge(2, 2);
    CHECK(canonical_form(doubled) != canonical_form(looped));
    CHECK(canonical_form(doubled) != canonical_form(Multigraph(complete_graph(3))));

    Multigraph shifted(3);
    shifted.add_edge(0, 1);
    shifted.add_edge(1, 2, 2);
    shifted.add_edge(0, 2);
    CHECK(are_isomorphic(doubled, shifted));
}

TEST_CASE("graph6 encodings of reference graphs")
{
    CHECK(graph6_encode(SimpleGraph(1)) == "@");
    CHECK(graph6_encode(SimpleGraph(0)) == "?");
    CHECK(graph6_encode(complete_graph(4)) == "C~");
    // The worked example of the format description: n = 5, edges 0-2 0-4 1-3 3-4.
    CHECK(graph6_encode(SimpleGraph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
    CHECK(graph6_decode("IheA@GUAo") == petersen_graph());
}

TEST_CASE("graph6 roundtrip including the long header")
{
    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
        const int n = rng() % 64;
        const SimpleGraph g = oracle::random_graph(rng, n, 0.3);
        const std::string line = graph6_encode(g);
        CHECK(graph6_decode(line) == g);
        if (n >= 63)
            CHECK(line[0] == '~');
    }
    const SimpleGraph k33 = complete_multipartite({3, 3});
    CHECK(graph6_decode(graph6_encode(k33)) == k33);
    CHECK(graph6_decode(">>graph6<<" + graph6_encode(k33)) == k33);
    CHECK(graph6_decode(graph6_encode(k33) + "\r\n") == k33);
}

TEST_CASE("graph6 decode errors carry an offset")
{
    CHECK_THROWS_AS(graph6_decode("garbage\x01"), Graph6Error);
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("C"), Graph6Error);
    try {
        graph6_decode("C~~");
        FAIL("expected an error");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() >= 1);
    }
}

TEST_CASE("graph6 streams")
{
    std::stringstream s;
    write_graph6(s, {complete_graph(3), cycle_graph(5)});
    const auto back = read_graph6(s);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == complete_graph(3));
    CHECK(back[1] == cycle_graph(5));
}
