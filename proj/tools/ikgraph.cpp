// Command-line front end: family generation, enumeration, the full
// classification run, and single-graph diagnostics.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ikg/graph6.hpp"
#include "ikg/pipeline.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Obstruction toolkit for triangle-free intrinsically knotted graphs"};
    app.require_subcommand(1);

    ikg::RunConfig config;
    app.add_option("--jobs,-j", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out,-o", config.out_dir, "Output directory");
    app.add_option("--seed", config.seed, "Shuffle seed for family closures");

    auto* families = app.add_subcommand("families", "Close the K7, K3311 and E9+e families");

    std::string type_name;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate one degree type");
    enumerate->add_option("--type", type_name, "Degree type")
        ->required()
        ->check(CLI::IsMember({"0-13", "3-9", "6-5", "9-1"}));

    auto* verify = app.add_subcommand("verify-theorem", "Run the full classification");
    std::vector<std::string> selected;
    verify->add_option("--type", selected, "Restrict to these degree types")
        ->check(CLI::IsMember({"0-13", "3-9", "6-5", "9-1"}));

    std::string line;
    int a = 0, b = 0;
    auto* reduce = app.add_subcommand("reduce", "Reduction report for one vertex pair");
    reduce->add_option("graph6", line)->required();
    reduce->add_option("a", a)->required();
    reduce->add_option("b", b)->required();

    auto* certify = app.add_subcommand("certify", "Search for an IK certificate");
    certify->add_option("graph6", line)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*families) {
            ikg::cmd_families(config, std::cout);
        } else if (*enumerate) {
            ikg::cmd_enumerate(*ikg::parse_type(type_name), config, std::cout);
        } else if (*verify) {
            if (!selected.empty()) {
                config.types.clear();
                for (const auto& s : selected)
                    config.types.push_back(*ikg::parse_type(s));
            }
            return ikg::cmd_verify_theorem(config, std::cout).success() ? 0 : 1;
        } else if (*reduce) {
            ikg::cmd_reduce(line, a, b, std::cout);
        } else if (*certify) {
            return ikg::cmd_certify(line, std::cout) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
