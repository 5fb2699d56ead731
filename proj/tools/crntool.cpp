#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "crn/cli.hpp"

namespace {

int emit(const crn::RunResult& result, const std::string& output_path) {
    if (result.exit_code != 0 && result.output.rfind("error:", 0) == 0) {
        std::cerr << result.output;
        return result.exit_code;
    }
    if (output_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << output_path << "\n";
            return 2;
        }
        out << result.output;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mass-action reaction network analysis: translations, tree constants, "
                 "toric steady-state bases"};
    app.require_subcommand(1);

    crn::RunConfig cfg;
    std::string format = "text";

    auto add_common = [&](CLI::App* cmd, bool needs_scheme) {
        cmd->add_option("network", cfg.network_path, "network file (.crn)")->required();
        if (needs_scheme)
            cmd->add_option("scheme", cfg.scheme_path, "translation scheme file")->required();
        cmd->add_option("--format", format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", cfg.output, "write the report to a file instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "structural report (deficiency, ranks)");
    analyze->add_option("network", cfg.network_path, "network file (.crn)")->required();
    analyze->add_option("scheme", cfg.scheme_path,
                        "optional scheme; adds the translated network's report");
    analyze->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--output", cfg.output, "write the report to a file instead of stdout");

    CLI::App* translate =
        app.add_subcommand("translate", "apply a translation scheme, dump nodes and kinetic map");
    add_common(translate, true);

    CLI::App* basis =
        app.add_subcommand("basis", "binomial basis of the steady-state ideal via tree constants");
    add_common(basis, true);

    CLI::App* verify =
        app.add_subcommand("verify", "numeric check: basis vanishes at ODE steady states");
    add_common(verify, true);
    verify->add_option("--trials", cfg.trials, "number of random trials")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--tol", cfg.tol, "relative residual tolerance for binomials");

    CLI::App* oracle =
        app.add_subcommand("oracle", "compare Matrix-Tree constants against tree enumeration");
    add_common(oracle, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (analyze->parsed()) cfg.command = crn::RunConfig::Command::analyze;
    if (translate->parsed()) cfg.command = crn::RunConfig::Command::translate;
    if (basis->parsed()) cfg.command = crn::RunConfig::Command::basis;
    if (verify->parsed()) cfg.command = crn::RunConfig::Command::verify;
    if (oracle->parsed()) cfg.command = crn::RunConfig::Command::oracle;
    cfg.format = format == "json" ? crn::RunConfig::Format::json : crn::RunConfig::Format::text;

    return emit(crn::run(cfg), cfg.output);
}
