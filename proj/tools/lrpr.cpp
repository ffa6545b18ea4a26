#include "lrpr/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"lrpr: phaseless low-rank recovery toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string outdir = ".";
    int workers = 1;
    bool quiet = false;
    app.add_option("--config", config_path, "JSON config file")->required();
    app.add_option("--out", outdir, "output directory (default: current)");
    app.add_option("--workers", workers, "parallel workers for grid cells")
        ->check(CLI::PositiveNumber);
    app.add_flag("--quiet", quiet, "suppress progress output");

    for (const char* name : {"simulate", "anchor", "solve", "deconv", "bench-pt", "noise-sweep",
                             "init-sweep", "verify-moments"})
        app.add_subcommand(name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lrpr::cli::kExitUsage;
    }

    lrpr::json config;
    try {
        config = lrpr::read_json_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lrpr::cli::kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    return lrpr::cli::run_command(command, config, outdir, workers, quiet);
}
