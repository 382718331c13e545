#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ikg/enumerator.hpp"
#include "ikg/moves.hpp"
#include "ikg/obstruction.hpp"

namespace ikg {

/// Degree type {5, 4^fours, 3^threes}.
struct TypeTag {
    int fours = 0;
    int threes = 0;

    std::string label() const;      // "(6,5)"
    std::string file_stem() const;  // "t6_5"
    std::string cli_name() const;   // "6-5"
    DegreeSpec spec() const { return classification_type(fours, threes); }
    friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

/// (0,13), (3,9), (6,5), (9,1).
std::vector<TypeTag> classification_types();
/// Parses "6-5" style names; nullopt for anything else.
std::optional<TypeTag> parse_type(std::string_view s);
/// Catalog names of the non-2-apex graphs expected for a type.
std::vector<std::string> expected_survivors(const TypeTag& t);

enum class Classification { not_ik, ik, unresolved };
std::string_view to_string(Classification c);

struct Verdict {
    CanonicalForm form;
    SimpleGraph graph;
    TypeTag type;
    std::optional<ApexCertificate> apex;
    std::optional<IkCertificate> ik;
    Classification classification = Classification::unresolved;
};

/// 2-apex test first; IK certification only for graphs that are not 2-apex.
/// For 2-apex graphs the cheap certification steps still run; a certificate
/// found there is kept so the caller can report the contradiction.
Verdict classify(const SimpleGraph& g, const TypeTag& type, const KnownIkSet& known);

struct RunConfig {
    enum class Mode { families_only, enumerate_only, full };
    std::vector<TypeTag> types = classification_types();
    int jobs = 1;
    std::filesystem::path out_dir = ".";
    std::uint64_t seed = 0;  // frontier shuffle for family closures; results do not depend on it
    Mode mode = Mode::full;
};

struct FamilyReport {
    std::string name;
    Family family;
    int triangle_free = 0;
    /// Triangle-free members by number of degree-5 vertices.
    std::map<int, int> degree5_histogram;
    int triangle_free_max_degree4 = 0;
};

/// Closes K7, K3311 and E9+e, writes <name>.g6 and index.tsv under out_dir
/// and prints the counts to log.
std::vector<FamilyReport> cmd_families(const RunConfig& config, std::ostream& log);

/// Enumerates one type, writes <stem>.g6, prints the count.
std::vector<EnumeratedGraph> cmd_enumerate(const TypeTag& type, const RunConfig& config,
                                           std::ostream& log);

struct TypeOutcome {
    TypeTag type;
    std::size_t enumerated = 0;
    std::size_t two_apex = 0;
    std::vector<Verdict> survivors;  // not 2-apex
    std::vector<std::string> matched;  // catalog name per survivor, "" if none
};

struct TheoremOutcome {
    std::vector<TypeOutcome> types;
    std::vector<std::string> problems;
    bool success() const { return problems.empty(); }
};

/// enumerate -> 2-apex filter -> IK certification for every selected type.
/// Writes <stem>.g6, verdicts.tsv and summary.json under out_dir. Success means
/// the survivors are exactly the expected catalog graphs, all certified.
TheoremOutcome cmd_verify_theorem(const RunConfig& config, std::ostream& log);

/// Prints the reduction report and the planarity condition tag ("prop1: C1" or "prop1: none").
void cmd_reduce(std::string_view graph6, Vertex a, Vertex b, std::ostream& out);

/// Prints an IK certificate, or "none". Returns whether one was found.
bool cmd_certify(std::string_view graph6, std::ostream& out);

/// One verdicts.tsv row per graph; header first.
void write_verdict_header(std::ostream& out);
void write_verdict_row(std::ostream& out, const Verdict& v);

/// Re-checks the certificate columns of a verdicts.tsv row from its graph6
/// field alone. Returns an error message, or nullopt when the row checks out.
std::optional<std::string> replay_verdict_row(std::string_view row, const KnownIkSet& known);

}  // namespace ikg
