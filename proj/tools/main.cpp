#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ionspin/commands.hpp"
#include "ionspin/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "ionspin: electric-field control of a single J=1 ion pseudospin\n"
        "(Stark spectra, driven dynamics, initialization/readout protocol,\n"
        "two-ion coupling estimates)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_path;
    int points = 0;
    app.add_option("--config", config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--points", points, "grid points for sweeps")
        ->check(CLI::PositiveNumber);

    app.add_subcommand("multiplet",
                       "clustered 36-level spectrum of the core-spin/hole complex");
    app.add_subcommand("spectrum-sweep",
                       "field-split triplet energies and mixing angle vs theta");
    app.add_subcommand("coupling-sweep",
                       "pseudospin drive coupling and resonant Rabi rate vs theta");
    app.add_subcommand("rabi", "time-domain populations under a resonant drive");
    app.add_subcommand("calibrate", "optimize a pi pulse (carrier and duration)");
    app.add_subcommand("protocol", "initialize, drive, and read out once");
    app.add_subcommand("ldos-sweep", "scaled readout weights vs theta");
    app.add_subcommand("pair", "two-ion coupling and entangling time vs separation");

    CLI11_PARSE(app, argc, argv);

    ionspin::cli::RunConfig config;
    try {
        if (!config_path.empty())
            config = ionspin::cli::load_config_file(config_path);
    } catch (const ionspin::cli::ConfigError& e) {
        std::cerr << "error: config_error: " << e.what() << "\n";
        return 2;
    }
    if (!out_path.empty()) config.output_path = out_path;
    if (points > 0) config.grid_points = points;

    const std::string name = app.get_subcommands().front()->get_name();
    return ionspin::cli::run(name, config, std::cout, std::cerr);
}
