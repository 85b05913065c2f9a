#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramkill/cli.hpp"

namespace {

void add_input_options(CLI::App* cmd, ramkill::cli::RunConfig& config, bool allow_random) {
    cmd->add_option("-i,--input", config.input_path, "arrangement file");
    cmd->add_option("-n,--dim", config.dimension,
                    "ambient dimension (overrides the file's dim line)");
    if (allow_random) {
        cmd->add_flag("--random", config.random,
                      "generate a random arrangement instead of reading one");
        cmd->add_option("--seed", config.seed, "seed for --random and --symbolic-check");
        cmd->add_option("--vertices", config.random_vertices,
                        "vertex count for --random");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SNC arrangement coloring and ramification-killing certificates"};
    app.require_subcommand(1);

    ramkill::cli::RunConfig config;

    CLI::App* validate = app.add_subcommand("validate", "check arrangement invariants");
    add_input_options(validate, config, false);

    CLI::App* color = app.add_subcommand(
        "color", "blow up edges until the dual graph is properly n-colored");
    add_input_options(color, config, false);

    CLI::App* verify = app.add_subcommand(
        "verify", "certify that a function scheme kills all ramification mod r");
    add_input_options(verify, config, true);
    verify->add_option("-s,--scheme", config.scheme, "square, remark4 or remark3")
        ->check(CLI::IsMember({"square", "remark4", "remark3"}));
    verify->add_option("-r,--r", config.r, "modulus (>= 2)")->check(CLI::Range(2ll, 1ll << 40));
    verify->add_flag("--symbolic-check", config.symbolic_check,
                     "run the residue-symbol substitution pass on every scenario");
    verify->add_flag("--json", config.json, "machine-readable report");
    verify->add_flag("--serial", config.serial, "disable the parallel scenario loop");

    CLI::App* export_dot = app.add_subcommand("export-dot", "write the colored dual graph");
    add_input_options(export_dot, config, false);
    export_dot->add_option("-o,--output", config.output_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    return ramkill::cli::run(config, std::cout, std::cerr);
}
