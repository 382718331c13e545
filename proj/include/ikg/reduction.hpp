#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

/// Result of deleting two vertices: the remaining graph with isolated vertices
/// dropped. origin[i] is the label in the input of vertex i.
struct PairDeletion {
    Multigraph graph;
    std::vector<Vertex> origin;
};

PairDeletion delete_pair_mapped(const SimpleGraph& g, Vertex a, Vertex b);
Multigraph delete_pair(const SimpleGraph& g, Vertex a, Vertex b);

/// Order in which the prune/smooth fixpoint visits vertices. The fixpoint is
/// the same for both; the choice exists so that can be checked.
enum class VisitOrder { ascending, descending };

/// Prune vertices of degree <= 1 and smooth degree-2 vertices until neither
/// applies. A degree-2 vertex whose only incidence is its own loop is removed.
/// origin is updated alongside the renumbering.
void reduce_in_place(Multigraph& g, std::vector<Vertex>& origin,
                     VisitOrder order = VisitOrder::ascending);

/// Terms of the edge-count prediction for the reduced graph after deleting a, b.
struct CountTerms {
    int ne = 0;     // |E(a) ∪ E(b)|
    int nv3 = 0;    // |V3(a)| + |V3(b)| - |V3(a,b)|
    int v4ab = 0;   // |V4(a,b)|
    int vy = 0;     // |V_Y(a,b)|
    int predicted_edges = 0;  // |E| - ne - (nv3 + v4ab + vy), never clamped
};

CountTerms count_equation(const SimpleGraph& g, Vertex a, Vertex b);

struct ReductionReport {
    Vertex a = 0;
    Vertex b = 0;
    Multigraph reduced;
    std::vector<Vertex> origin;  // reduced vertex -> input vertex
    int actual_edges = 0;
    CountTerms terms;
    /// The configuration is one the count prediction describes exactly; see
    /// is_generic_pair(). generic implies terms.predicted_edges == actual_edges.
    bool generic = false;
};

ReductionReport reduce(const SimpleGraph& g, Vertex a, Vertex b,
                       VisitOrder order = VisitOrder::ascending);

/// A pair is generic when
///  (i) no vertex has two or more neighbors among the common degree-3 neighbors,
///  (ii) the charge sets V3(a)\V3(a,b), V3(b)\V3(a,b), V4(a,b), V_Y(a,b) are
///       pairwise disjoint and disjoint from V3(a,b), and
///  (iii) after deleting a, b and the pendant V3(a,b) vertices, the degree-2
///       vertices are exactly the charge sets, nothing else has degree <= 2,
///       and no component consists of degree-2 vertices only.
bool is_generic_pair(const SimpleGraph& g, Vertex a, Vertex b);

/// reduce(g,a,b).reduced is simple and isomorphic to K_{3,3}.
bool is_reduction_k33(const SimpleGraph& g, Vertex a, Vertex b);

/// key: value block followed by the multiplicity sidecar ("u v k" lines).
void write_report(std::ostream& out, const ReductionReport& r);
void write_multiplicity_sidecar(std::ostream& out, const Multigraph& g);

}  // namespace ikg
