#include "CLI11.hpp"
#include "ainf/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Exact A-infinity algebra workbench"};
    app.require_subcommand(1);

    ainf::cli::Options opt;
    std::string degrees;
    int stabilize = -1;
    std::string spec;
    std::string check;

    auto common = [&](CLI::App* sub) {
        sub->add_option("spec", spec, "Algebra spec file (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--max-weight", opt.max_weight, "Longest tensor word in the truncation window")->capture_default_str();
        sub->add_option("--max-degree", opt.max_degree, "Highest internal degree the algebra may occupy")->capture_default_str();
        sub->add_option("--degrees", degrees, "Degree range n..m");
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();
        sub->add_option("--stabilize", stabilize, "Cap on the HP ladder length");
    };

    for (const char* name : {"validate", "hh", "hc", "hp", "traces", "bracket", "cohomology", "deform"}) common(app.add_subcommand(name));
    CLI::App* verify = app.add_subcommand("verify", "Theorem checks");
    verify->add_option("check", check, "prop23, thm44, thm45, cor42, sbi or quasi-iso")
        ->required()
        ->check(CLI::IsMember({"prop23", "thm44", "thm45", "cor42", "sbi", "quasi-iso"}));
    common(verify);
    verify->add_flag("--conjecture-check", opt.conjecture, "prop23: run the 1-connected experiment instead (never asserted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : ainf::cli::kViolation;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (!degrees.empty()) opt.degrees = ainf::cli::parse_degrees(degrees);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ainf::cli::kViolation;
    }
    if (stabilize >= 0) opt.stabilize = stabilize;

    ainf::cli::Report r = ainf::cli::run(command, check, spec, opt);
    std::cout << r.render(opt.format);
    return r.exit_code;
}
