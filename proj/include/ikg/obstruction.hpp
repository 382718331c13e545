#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ikg/canonical.hpp"
#include "ikg/graph.hpp"
#include "ikg/minor.hpp"
#include "ikg/reduction.hpp"

namespace ikg {

/// Planarity of the underlying simple graph; loops and multiplicities are ignored.
bool is_planar(const SimpleGraph& g);
bool is_planar(const Multigraph& g);

/// Planarity decided only through K5 / K3,3 minor exclusion. Slow; kept as
/// an independent check on is_planar.
bool is_planar_by_minors(const SimpleGraph& g);

/// Deleting a and b leaves a planar graph.
struct ApexCertificate {
    Vertex a = 0;
    Vertex b = 0;
};

/// First pair (a < b, lexicographic) whose deletion is planar.
std::optional<ApexCertificate> is_2_apex(const SimpleGraph& g);
bool verify_apex_certificate(const SimpleGraph& g, const ApexCertificate& c);

enum class PropCondition { C1, C2, C3 };
std::string_view to_string(PropCondition c);

/// C1: at most 8 edges remain. C2: exactly 9 and not a simple K3,3.
/// C3: exactly 10 with a parallel pair and no K3,3 minor.
std::optional<PropCondition> prop1_evaluate(const ReductionReport& r);

struct KnownIkGraph {
    std::string name;
    SimpleGraph graph;
    CanonicalForm form;
};

class KnownIkSet {
public:
    void add(std::string name, const SimpleGraph& g);
    const std::vector<KnownIkGraph>& entries() const { return entries_; }
    const KnownIkGraph* find(const CanonicalForm& f) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<KnownIkGraph> entries_;
    std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index_;
};

/// K7 with its triangle-to-Y descendants, then every member of the K3,3,1,1 family.
KnownIkSet standard_known_ik();

struct IkCertificate {
    enum class Route { isomorphism, edge_contraction, minor_search };
    Route route = Route::isomorphism;
    std::optional<Edge> contracted;  // set for edge_contraction
    MinorWitness witness;            // pattern_name is the known graph's name
};

std::string_view to_string(IkCertificate::Route r);

/// Tries, in order: g is a known graph; contracting one edge (lexicographic)
/// gives a known graph; some known graph is a minor of g. The last step is
/// skipped when full_search is false.
std::optional<IkCertificate> certify_ik(const SimpleGraph& g, const KnownIkSet& known,
                                        bool full_search = true);

/// Checks the witness against g and the named known graph.
bool verify_ik_certificate(const SimpleGraph& g, const KnownIkSet& known, const IkCertificate& c);

void write_apex_certificate(std::ostream& out, const ApexCertificate& c);
void write_ik_certificate(std::ostream& out, const IkCertificate& c);

}  // namespace ikg
