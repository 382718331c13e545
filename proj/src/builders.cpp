#include "ikg/builders.hpp"

#include <vector>

namespace ikg {

SimpleGraph complete_graph(int n)
{
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

SimpleGraph complete_multipartite(std::initializer_list<int> parts)
{
    std::vector<int> part_of;
    int p = 0;
    for (int size : parts) {
        part_of.insert(part_of.end(), size, p);
        ++p;
    }
    const int n = static_cast<int>(part_of.size());
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j])
                g.add_edge(i, j);
    return g;
}

SimpleGraph cycle_graph(int n)
{
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph path_graph(int n)
{
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

SimpleGraph star_graph(int leaves)
{
    SimpleGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

SimpleGraph petersen_graph()
{
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

SimpleGraph prism_graph(int n)
{
    SimpleGraph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
    }
    return g;
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h)
{
    SimpleGraph out(g.order() + h.order());
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    for (const Edge& e : h.edges())
        out.add_edge(g.order() + e.u, g.order() + e.v);
    return out;
}

}  // namespace ikg
