#include "ikg/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ikg/builders.hpp"
#include "ikg/catalog.hpp"
#include "ikg/graph6.hpp"
#include "ikg/reduction.hpp"

namespace ikg {

std::string TypeTag::label() const
{
    return "(" + std::to_string(fours) + "," + std::to_string(threes) + ")";
}

std::string TypeTag::file_stem() const
{
    return "t" + std::to_string(fours) + "_" + std::to_string(threes);
}

std::string TypeTag::cli_name() const
{
    return std::to_string(fours) + "-" + std::to_string(threes);
}

std::vector<TypeTag> classification_types()
{
    return {{0, 13}, {3, 9}, {6, 5}, {9, 1}};
}

std::optional<TypeTag> parse_type(std::string_view s)
{
    for (const TypeTag& t : classification_types())
        if (t.cli_name() == s)
            return t;
    return std::nullopt;
}

std::vector<std::string> expected_survivors(const TypeTag& t)
{
    if (t == TypeTag{3, 9})
        return {"Cousin29"};
    if (t == TypeTag{6, 5})
        return {"Cousin97", "Cousin99", "U12", "U'12"};
    return {};
}

std::string_view to_string(Classification c)
{
    switch (c) {
    case Classification::not_ik: return "not-IK";
    case Classification::ik: return "IK";
    case Classification::unresolved: return "unresolved";
    }
    return "?";
}

Verdict classify(const SimpleGraph& g, const TypeTag& type, const KnownIkSet& known)
{
    Verdict v;
    v.form = canonical_form(g);
    v.graph = g;
    v.type = type;
    v.apex = is_2_apex(g);
    if (v.apex) {
        v.ik = certify_ik(g, known, /*full_search=*/false);
        v.classification = Classification::not_ik;
        return v;
    }
    v.ik = certify_ik(g, known);
    v.classification = v.ik ? Classification::ik : Classification::unresolved;
    return v;
}

namespace {

void ensure_dir(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                                 ec.message());
}

std::ofstream open_out(const std::filesystem::path& p)
{
    std::ofstream out(p);
    if (!out)
        throw std::runtime_error("cannot open " + p.string() + " for writing");
    return out;
}

std::string join_degrees(const std::vector<int>& d)
{
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s;
}

FamilyReport summarize(std::string name, Family fam)
{
    FamilyReport r;
    r.name = std::move(name);
    r.family = std::move(fam);
    for (const auto& m : r.family.members) {
        if (!is_triangle_free(m.graph))
            continue;
        ++r.triangle_free;
        ++r.degree5_histogram[count_degree(m.graph, 5)];
        if (max_degree(m.graph) == 4)
            ++r.triangle_free_max_degree4;
    }
    return r;
}

std::string file_name(const std::string& family_name)
{
    std::string s;
    for (char c : family_name)
        if (c != '+')
            s += c;
    return s + "-family";
}

std::string branch_sets_field(const MinorWitness& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i) {
        if (i)
            s += ';';
        for (std::size_t j = 0; j < w.branch_sets[i].size(); ++j)
            s += (j ? "," : "") + std::to_string(w.branch_sets[i][j]);
    }
    return s;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::string degree_data(const SimpleGraph& g)
{
    std::ostringstream s;
    s << "order " << g.order() << ", edges " << g.edge_count() << ", degrees "
      << join_degrees(degree_sequence(g)) << ", triangle-free "
      << (is_triangle_free(g) ? "yes" : "no");
    return s.str();
}

}  // namespace

std::vector<FamilyReport> cmd_families(const RunConfig& config, std::ostream& log)
{
    ensure_dir(config.out_dir);
    std::vector<FamilyReport> reports;
    for (const char* name : {"K7", "K3311", "E9+e"})
        reports.push_back(summarize(
            name, family_closure(catalog_lookup(name).graph, {.shuffle_seed = config.seed})));

    auto index = open_out(config.out_dir / "index.tsv");
    index << "family\tindex\tform_hash\torder\tdegree_sequence\ttriangle_free\n";
    for (const FamilyReport& r : reports) {
        auto g6 = open_out(config.out_dir / (file_name(r.name) + ".g6"));
        for (std::size_t i = 0; i < r.family.members.size(); ++i) {
            const auto& m = r.family.members[i];
            g6 << graph6_encode(m.graph) << '\n';
            index << r.name << '\t' << i << '\t' << m.form.hex_hash() << '\t' << m.graph.order()
                  << '\t' << join_degrees(degree_sequence(m.graph)) << '\t'
                  << (is_triangle_free(m.graph) ? 1 : 0) << '\n';
        }
        log << r.name << " family: " << r.family.size() << " members, "
            << r.family.move_edges.size() << " move edges, " << r.triangle_free
            << " triangle-free\n";
        log << "  triangle-free by number of degree-5 vertices:";
        for (const auto& [k, count] : r.degree5_histogram)
            log << ' ' << k << ':' << count;
        log << "\n  triangle-free with maximum degree 4: " << r.triangle_free_max_degree4 << '\n';
    }

    std::set<CanonicalForm> size22;
    for (const FamilyReport& r : reports)
        if (r.name != "K7")
            for (const auto& m : r.family.members)
                size22.insert(m.form);
    log << "distinct members of the K3311 and E9+e families: " << size22.size() << '\n';
    return reports;
}

std::vector<EnumeratedGraph> cmd_enumerate(const TypeTag& type, const RunConfig& config,
                                           std::ostream& log)
{
    ensure_dir(config.out_dir);
    const auto start = std::chrono::steady_clock::now();
    EnumerationStats stats;
    auto graphs = enumerate(type.spec(), config.jobs, &stats);
    auto out = open_out(config.out_dir / (type.file_stem() + ".g6"));
    for (const auto& g : graphs)
        out << graph6_encode(g.graph) << '\n';
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    log << type.label() << ": " << graphs.size() << " graphs (" << stats.nodes
        << " search nodes, " << ms << " ms) -> " << type.file_stem() << ".g6\n";
    return graphs;
}

void write_verdict_header(std::ostream& out)
{
    out << "type\tgraph6\tform_hash\tclassification\tapex_pair\tik_route\tik_pattern\t"
           "contracted_edge\tbranch_sets\n";
}

void write_verdict_row(std::ostream& out, const Verdict& v)
{
    out << v.type.label() << '\t' << graph6_encode(v.graph) << '\t' << v.form.hex_hash() << '\t'
        << to_string(v.classification) << '\t';
    if (v.apex)
        out << v.apex->a << ',' << v.apex->b;
    else
        out << '-';
    if (v.ik) {
        out << '\t' << to_string(v.ik->route) << '\t' << v.ik->witness.pattern_name << '\t';
        if (v.ik->contracted)
            out << v.ik->contracted->u << ',' << v.ik->contracted->v;
        else
            out << '-';
        out << '\t' << branch_sets_field(v.ik->witness);
    } else {
        out << "\t-\t-\t-\t-";
    }
    out << '\n';
}

std::optional<std::string> replay_verdict_row(std::string_view row, const KnownIkSet& known)
{
    const auto f = split(row, '\t');
    if (f.size() != 9)
        return "expected 9 fields, got " + std::to_string(f.size());
    SimpleGraph g;
    try {
        g = graph6_decode(f[1]);
    } catch (const Graph6Error& e) {
        return std::string("bad graph6: ") + e.what();
    }
    const bool has_apex = f[4] != "-";
    const bool has_ik = f[5] != "-";
    if (has_apex && has_ik)
        return "row carries both a 2-apex and an IK certificate";
    const std::string expected = std::string(to_string(
        has_apex ? Classification::not_ik : has_ik ? Classification::ik : Classification::unresolved));
    if (f[3] != expected)
        return "classification " + f[3] + " does not match certificates";
    if (has_apex) {
        const auto pair = split(f[4], ',');
        if (pair.size() != 2)
            return "bad apex pair " + f[4];
        if (!verify_apex_certificate(g, {std::stoi(pair[0]), std::stoi(pair[1])}))
            return "apex pair " + f[4] + " does not leave a planar graph";
    }
    if (has_ik) {
        const KnownIkGraph* pattern = nullptr;
        for (const auto& k : known.entries())
            if (k.name == f[6])
                pattern = &k;
        if (!pattern)
            return "unknown IK pattern " + f[6];
        MinorWitness w;
        w.pattern_name = f[6];
        for (const std::string& set : split(f[8], ';')) {
            std::vector<Vertex> b;
            for (const std::string& v : split(set, ','))
                b.push_back(std::stoi(v));
            w.branch_sets.push_back(std::move(b));
        }
        if (static_cast<int>(w.branch_sets.size()) != pattern->graph.order())
            return "branch set count does not match pattern " + f[6];
        for (const Edge& e : pattern->graph.edges()) {
            std::optional<Edge> image;
            for (Vertex x : w.branch_sets[e.u])
                for (Vertex y : w.branch_sets[e.v])
                    if (!image && x >= 0 && y >= 0 && x < g.order() && y < g.order() &&
                        x != y && g.has_edge(x, y))
                        image = Edge(x, y);
            if (!image)
                return "pattern edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has no host edge";
            w.edge_assignment.push_back({e, *image});
        }
        if (!verify_minor_witness(g, pattern->graph, w))
            return "minor witness for " + f[6] + " does not verify";
    }
    return std::nullopt;
}

TheoremOutcome cmd_verify_theorem(const RunConfig& config, std::ostream& log)
{
    ensure_dir(config.out_dir);
    const KnownIkSet known = standard_known_ik();
    log << "known IK graphs: " << known.size() << '\n';

    TheoremOutcome outcome;
    auto verdicts_file = open_out(config.out_dir / "verdicts.tsv");
    write_verdict_header(verdicts_file);
    nlohmann::json summary;
    summary["types"] = nlohmann::json::array();

    for (const TypeTag& type : config.types) {
        const auto graphs = cmd_enumerate(type, config, log);
        std::vector<Verdict> verdicts(graphs.size());
        auto work = [&](int id) {
            for (std::size_t i = id; i < graphs.size(); i += config.jobs)
                verdicts[i] = classify(graphs[i].graph, type, known);
        };
        if (config.jobs == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (int id = 0; id < config.jobs; ++id)
                pool.emplace_back(work, id);
        }

        TypeOutcome t;
        t.type = type;
        t.enumerated = graphs.size();
        for (Verdict& v : verdicts) {
            write_verdict_row(verdicts_file, v);
            if (v.apex) {
                ++t.two_apex;
                if (v.ik)
                    outcome.problems.push_back("2-apex graph with an IK certificate: " +
                                               graph6_encode(v.graph));
                if (!verify_apex_certificate(v.graph, *v.apex))
                    outcome.problems.push_back("apex certificate fails for " + graph6_encode(v.graph));
                continue;
            }
            if (v.classification == Classification::unresolved)
                outcome.problems.push_back("unresolved " + type.label() + " " + graph6_encode(v.graph));
            else if (!verify_ik_certificate(v.graph, known, *v.ik))
                outcome.problems.push_back("IK certificate fails for " + graph6_encode(v.graph));
            t.survivors.push_back(std::move(v));
        }

        // Match survivors against the catalog.
        std::vector<std::string> expected = expected_survivors(type);
        std::multiset<std::string> wanted(expected.begin(), expected.end());
        for (const Verdict& v : t.survivors) {
            const SimpleGraph& g = v.graph;
            std::string name;
            for (const std::string& candidate : catalog_names())
                if (canonical_form(catalog_lookup(candidate).graph) == v.form)
                    name = candidate;
            t.matched.push_back(name);
            const bool shape = g.edge_count() == 22 && count_degree(g, 5) == 1 &&
                               min_degree(g) == 3 && is_triangle_free(g) && is_connected(g);
            if (!shape)
                outcome.problems.push_back("survivor " + graph6_encode(g) +
                                           " violates the degree type: " + degree_data(g));
            if (auto it = wanted.find(name); !name.empty() && it != wanted.end()) {
                wanted.erase(it);
            } else {
                std::string msg = "unexpected survivor " + type.label() + " " + graph6_encode(g) +
                                  " (" + degree_data(g) + ")";
                for (const std::string& e : expected)
                    msg += "; expected " + e + ": " + degree_data(catalog_lookup(e).graph);
                outcome.problems.push_back(msg);
            }
        }
        for (const std::string& missing : wanted)
            outcome.problems.push_back("expected survivor " + missing + " not found in " +
                                       type.label() + " (" +
                                       degree_data(catalog_lookup(missing).graph) + ")");

        log << type.label() << ": " << t.two_apex << " 2-apex, " << t.survivors.size()
            << " survivors";
        for (std::size_t i = 0; i < t.survivors.size(); ++i)
            log << ' ' << (t.matched[i].empty() ? "?" : t.matched[i]) << '['
                << to_string(t.survivors[i].classification) << ']';
        log << '\n';

        nlohmann::json jt;
        jt["type"] = type.label();
        jt["enumerated"] = t.enumerated;
        jt["two_apex"] = t.two_apex;
        jt["survivors"] = nlohmann::json::array();
        for (std::size_t i = 0; i < t.survivors.size(); ++i) {
            const Verdict& v = t.survivors[i];
            nlohmann::json js;
            js["graph6"] = graph6_encode(v.graph);
            js["matched"] = t.matched[i];
            js["classification"] = std::string(to_string(v.classification));
            if (v.ik) {
                js["ik_route"] = std::string(to_string(v.ik->route));
                js["ik_pattern"] = v.ik->witness.pattern_name;
            }
            jt["survivors"].push_back(js);
        }
        summary["types"].push_back(jt);
        outcome.types.push_back(std::move(t));
    }

    summary["success"] = outcome.success();
    summary["problems"] = outcome.problems;
    auto summary_file = open_out(config.out_dir / "summary.json");
    summary_file << summary.dump(2) << '\n';
    for (const std::string& p : outcome.problems)
        log << "problem: " << p << '\n';
    log << (outcome.success() ? "verify-theorem: success\n" : "verify-theorem: FAILED\n");
    return outcome;
}

void cmd_reduce(std::string_view graph6, Vertex a, Vertex b, std::ostream& out)
{
    const SimpleGraph g = graph6_decode(graph6);
    const ReductionReport r = reduce(g, a, b);
    write_report(out, r);
    const auto tag = prop1_evaluate(r);
    out << "prop1: " << (tag ? to_string(*tag) : "none") << '\n';
}

bool cmd_certify(std::string_view graph6, std::ostream& out)
{
    const SimpleGraph g = graph6_decode(graph6);
    const KnownIkSet known = standard_known_ik();
    const auto cert = certify_ik(g, known);
    if (!cert) {
        out << "none\n";
        return false;
    }
    write_ik_certificate(out, *cert);
    return true;
}

}  // namespace ikg
