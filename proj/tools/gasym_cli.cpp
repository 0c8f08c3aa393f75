#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gasym/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"infinity branches and generalized asymptotes of implicit space curves"};
    app.require_subcommand(1);

    gasym::cli::JobConfig cfg;
    std::vector<CLI::App*> subs;
    for (const char* name : {"project", "branches", "asymptotes", "plotdata"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--f1", cfg.f1_text, "first defining polynomial in x1,x2,x3");
        sub->add_option("--f2", cfg.f2_text, "second defining polynomial in x1,x2,x3");
        sub->add_option("--input", cfg.input_file, "file with the two polynomials, one per line");
        sub->add_option("--method", cfg.method, "basic | improved | both")
            ->check(CLI::IsMember({"basic", "improved", "both"}));
        sub->add_option("--depth", cfg.depth, "series display depth (terms down to z^-depth)");
        sub->add_option("--samples", cfg.samples, "sample magnitudes for numeric checks")
            ->delimiter(',');
        sub->add_option("--format", cfg.format, "text | structured")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--seed", cfg.seed, "seed for the projection-direction retries");
        sub->add_flag("--deterministic", cfg.deterministic, "force deterministic output ordering");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);
    for (CLI::App* sub : subs)
        if (sub->parsed()) cfg.command = sub->get_name();
    return gasym::cli::run_job(cfg, std::cout, std::cerr);
}
