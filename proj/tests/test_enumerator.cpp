#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ikg/builders.hpp"
#include "ikg/canonical.hpp"
#include "ikg/enumerator.hpp"
#include "support/oracles.hpp"

using namespace ikg;

namespace {

bool matches_spec(const SimpleGraph& g, const DegreeSpec& spec)
{
    std::vector<int> want = spec.degrees;
    std::sort(want.begin(), want.end(), std::greater<>());
    if (degree_sequence(g) != want)
        return false;
    if (spec.triangle_free && !is_triangle_free(g))
        return false;
    return !spec.connected || is_connected(g);
}

// Every class the oracle finds appears exactly once in `found`, and nothing else does.
void check_against_oracle(const DegreeSpec& spec, const std::vector<EnumeratedGraph>& found)
{
    const auto expected = oracle::graphs_with_degrees(spec.degrees, spec.triangle_free,
                                                      spec.connected);
    REQUIRE(found.size() == expected.size());
    for (const SimpleGraph& h : expected) {
        int hits = 0;
        for (const auto& e : found)
            hits += oracle::brute_force_isomorphic(e.graph, h);
        CHECK(hits == 1);
    }
}

DegreeSpec random_spec(std::mt19937_64& rng, int n)
{
    DegreeSpec spec;
    for (;;) {
        spec.degrees.assign(n, 0);
        for (int& d : spec.degrees)
            d = 1 + rng() % std::min(n - 1, 4);
        if (spec.satisfiable_shape())
            break;
    }
    spec.triangle_free = rng() % 3 != 0;
    spec.connected = rng() % 3 != 0;
    return spec;
}

}  // namespace

TEST_CASE("spec shape")
{
    CHECK(DegreeSpec{{3, 3, 3, 3}}.satisfiable_shape());
    CHECK_FALSE(DegreeSpec{{3, 3, 3}}.satisfiable_shape());
    CHECK_FALSE(DegreeSpec{{4, 1, 1}}.satisfiable_shape());
    CHECK(DegreeSpec{{3, 3, 3, 3}}.degree_sum() == 12);

    for (auto [fours, threes] : {std::pair{0, 13}, {3, 9}, {6, 5}, {9, 1}}) {
        const DegreeSpec s = classification_type(fours, threes);
        CHECK(s.order() == 1 + fours + threes);
        CHECK(s.degree_sum() == 44);
        CHECK(std::count(s.degrees.begin(), s.degrees.end(), 5) == 1);
        CHECK(std::count(s.degrees.begin(), s.degrees.end(), 4) == fours);
        CHECK(std::count(s.degrees.begin(), s.degrees.end(), 3) == threes);
        CHECK(s.triangle_free);
        CHECK(s.connected);
    }
}

TEST_CASE("small specs with known answers")
{
    SUBCASE("cubic on six vertices")
    {
        const auto tf = enumerate({{3, 3, 3, 3, 3, 3}});
        REQUIRE(tf.size() == 1);
        CHECK(are_isomorphic(tf[0].graph, complete_multipartite({3, 3})));

        const auto any = enumerate({{3, 3, 3, 3, 3, 3}, false});
        REQUIRE(any.size() == 2);
        bool prism = false;
        for (const auto& e : any)
            prism = prism || are_isomorphic(e.graph, prism_graph(3));
        CHECK(prism);
    }
    SUBCASE("2-regular")
    {
        const auto c4 = enumerate({{2, 2, 2, 2}});
        REQUIRE(c4.size() == 1);
        CHECK(are_isomorphic(c4[0].graph, cycle_graph(4)));
        CHECK(enumerate({{2, 2, 2}}).empty());
        CHECK(enumerate({{2, 2, 2}, false}).size() == 1);
        // C6 or two triangles; only C6 is triangle-free, only C6 is connected.
        CHECK(enumerate({std::vector<int>(6, 2), false, false}).size() == 2);
        CHECK(enumerate({std::vector<int>(6, 2), true, false}).size() == 1);
    }
    SUBCASE("specs with no graph")
    {
        CHECK(enumerate({{4, 4, 4, 4, 4}}).empty());
        CHECK(enumerate({{4, 4, 4, 4, 4}, false}).size() == 1);
        CHECK(enumerate({{3, 3, 3}}).empty());
        CHECK(enumerate({{1, 1, 1, 1}}).empty());
        CHECK(enumerate({{1, 1, 1, 1}, true, false}).size() == 1);
        CHECK(enumerate({{}}).empty());
    }
}

TEST_CASE("cubic triangle-free graphs on six vertices by exhaustive edge subsets")
{
    // All 2^15 edge sets of K6.
    std::vector<SimpleGraph> found;
    for (std::uint32_t mask = 0; mask < (1U << 15); ++mask) {
        SimpleGraph g(6);
        int bitpos = 0;
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v, ++bitpos)
                if (mask >> bitpos & 1U)
                    g.add_edge(u, v);
        if (degree_sequence(g) != std::vector<int>(6, 3) || oracle::has_triangle(g))
            continue;
        bool fresh = true;
        for (const auto& h : found)
            fresh = fresh && !oracle::brute_force_isomorphic(g, h);
        if (fresh)
            found.push_back(g);
    }
    const auto enumerated = enumerate({{3, 3, 3, 3, 3, 3}});
    REQUIRE(found.size() == enumerated.size());
    CHECK(oracle::brute_force_isomorphic(found[0], enumerated[0].graph));
}

TEST_CASE("enumeration agrees with the edge-subset oracle")
{
    std::mt19937_64 rng(41);
    int nonempty = 0;
    for (int i = 0; i < 120; ++i) {
        const DegreeSpec spec = random_spec(rng, 4 + rng() % 4);
        const auto found = enumerate(spec);
        CAPTURE(spec.degrees);
        CAPTURE(spec.triangle_free);
        CAPTURE(spec.connected);
        check_against_oracle(spec, found);
        nonempty += !found.empty();
    }
    CHECK(nonempty > 40);
}

TEST_CASE("enumeration agrees with labeled backtracking at order 8")
{
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        const DegreeSpec spec = random_spec(rng, 8);
        const auto fast = enumerate(spec);
        const auto slow = naive_enumerate(spec);
        CAPTURE(spec.degrees);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k < fast.size(); ++k)
            CHECK(fast[k].form == slow[k].form);
    }
    CHECK_THROWS_AS(naive_enumerate({std::vector<int>(9, 2)}), std::invalid_argument);
}

TEST_CASE("output is sorted, canonical and within spec")
{
    const DegreeSpec spec{{4, 4, 3, 3, 3, 3, 3, 3, 2, 2}};
    EnumerationStats stats;
    const auto found = enumerate(spec, 1, &stats);
    REQUIRE(found.size() > 10);
    CHECK(stats.nodes > 0);
    CHECK(stats.candidates >= stats.nodes);
    for (std::size_t k = 0; k < found.size(); ++k) {
        if (k)
            CHECK(found[k - 1].form < found[k].form);
        CHECK(matches_spec(found[k].graph, spec));
        CHECK(canonical_form(found[k].graph) == found[k].form);
        CHECK(canonical_representative(found[k].graph) == found[k].graph);
    }
}

TEST_CASE("worker count does not change the result")
{
    for (const DegreeSpec& spec : {classification_type(9, 1), classification_type(6, 5),
                                   DegreeSpec{{3, 3, 3, 3, 3, 3, 3, 3, 3, 3}, false}}) {
        const auto one = enumerate(spec, 1);
        for (int jobs : {2, 5}) {
            const auto many = enumerate(spec, jobs);
            REQUIRE(one.size() == many.size());
            bool same = true;
            for (std::size_t k = 0; k < one.size(); ++k)
                same = same && one[k].form == many[k].form && one[k].graph == many[k].graph;
            CHECK(same);
        }
    }
}

TEST_CASE("classification types hold only triangle-free connected graphs")
{
    const DegreeSpec spec = classification_type(9, 1);
    const auto found = enumerate(spec);
    CHECK_FALSE(found.empty());
    for (const auto& e : found) {
        CHECK(matches_spec(e.graph, spec));
        CHECK(e.graph.edge_count() == 22);
    }
}
