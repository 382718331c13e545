#include "ikg/catalog.hpp"

#include <algorithm>

#include "ikg/builders.hpp"
#include "ikg/graph6.hpp"

namespace ikg {

namespace {

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> c;
    c.push_back({"K7", complete_graph(7), {}, "complete graph on 7 vertices"});
    c.push_back({"K3311", complete_multipartite({3, 3, 1, 1}), {},
                 "complete 4-partite graph with parts 3,3,1,1"});

    // N9: the 21-edge, 9-vertex member of the K7 family that is not reachable
    // from K7 by triangle-to-Y moves alone. E9+e adds the edge 0-3; the other
    // non-edge orbit gives a family of 125 rather than 110.
    const SimpleGraph n9 = graph6_decode("HxHYs}]");
    SimpleGraph e9 = n9;
    e9.add_edge(0, 3);
    c.push_back({"N9", n9, {}, "9-vertex K7-family member outside the triangle-to-Y descendants"});
    c.push_back({"E9+e", e9, {Edge(0, 3)}, "N9 plus the edge 0-3"});

    // The triangle-free members with one degree-5 vertex, told apart by how
    // many degree-4 neighbors the degree-5 vertex has.
    c.push_back({"Cousin29", graph6_decode("L??haPO_sHR?WF"), {},
                 "only triangle-free K3311-family member with one degree-5 vertex; type (3,9)"});
    c.push_back({"Cousin97", graph6_decode("K?CPQPchUKQ["), {Edge(3, 5)},
                 "triangle-free E9+e-family member, one degree-5 vertex with 3 degree-4 neighbors"});
    c.push_back({"Cousin99", graph6_decode("K?CHaadpbOOx"), {Edge(4, 5)},
                 "triangle-free E9+e-family member, one degree-5 vertex with 4 degree-4 neighbors"});

    // Survivors of type (6,5) outside both families.
    c.push_back({"U12", graph6_decode("K??XP`HcnGWw"), {Edge(0, 9)},
                 "type (6,5), degree-5 vertex with 3 degree-4 neighbors, not in the E9+e family"});
    c.push_back({"U'12", graph6_decode("K??XQQR[FGOy"), {Edge(1, 7)},
                 "type (6,5), degree-5 vertex with 4 degree-4 neighbors, not in the E9+e family"});
    return c;
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

}  // namespace

const CatalogEntry& catalog_lookup(std::string_view name)
{
    const auto& entries = catalog();
    auto it = std::find_if(entries.begin(), entries.end(),
                           [name](const CatalogEntry& e) { return e.name == name; });
    if (it == entries.end())
        throw CatalogError("unknown catalog graph '" + std::string(name) + "'");
    return *it;
}

std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const auto& e : catalog())
        out.push_back(e.name);
    return out;
}

std::vector<std::string> expected_survivor_names()
{
    return {"Cousin29", "Cousin97", "Cousin99", "U12", "U'12"};
}

}  // namespace ikg
