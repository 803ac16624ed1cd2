// Command-line front end: run experiments, render stored tables, and run
// grid-refinement studies.
//
// Exit codes: 0 success, 1 usage or I/O problem, 2 invalid configuration,
// 3 the simulation diverged.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "vcfb/errors.hpp"
#include "vcfb/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDiverged = 3;

struct RunFlags {
    std::optional<int> example;
    std::optional<double> dx;
    std::optional<double> dt;
    std::optional<double> t_end;
    std::optional<double> eta;
    std::optional<std::string> bc;
    std::optional<std::string> out;
    std::optional<int> refine;
    std::optional<std::string> scaling;
    std::string config;
    bool oracle = false;
    bool no_header = false;
};

vcfb::ExperimentConfig resolve(const RunFlags& flags) {
    vcfb::ExperimentConfig cfg;
    if (!flags.config.empty()) cfg = vcfb::load_config(flags.config, cfg);
    if (flags.example) cfg.example = *flags.example;
    if (flags.dx) cfg.dx = *flags.dx;
    if (flags.dt) cfg.dt = *flags.dt;
    if (flags.t_end) cfg.t_end = *flags.t_end;
    if (flags.eta) cfg.eta = *flags.eta;
    if (flags.bc) cfg.boundary_scheme = vcfb::parse_boundary_scheme(*flags.bc);
    if (flags.out) cfg.outputs = *flags.out;
    if (flags.refine) cfg.refinement_levels = *flags.refine;
    if (flags.scaling) cfg.scaling = vcfb::parse_scaling(*flags.scaling);
    if (flags.oracle) cfg.run_oracle = true;
    if (flags.no_header) cfg.write_header = false;
    return cfg;
}

void add_discretization(CLI::App* cmd, RunFlags& flags) {
    cmd->add_option("--example", flags.example, "Preset example 1-4 (0 = [custom] section of --config)");
    cmd->add_option("--dx", flags.dx, "Lattice spacing");
    cmd->add_option("--dt", flags.dt, "Time step");
    cmd->add_option("--eta", flags.eta, "Rest-population weight parameter in (0, 1]");
    cmd->add_option("--bc", flags.bc, "Boundary scheme: equilibrium | extrapolation");
    cmd->add_option("--config", flags.config, "INI file with [experiment] and [custom] sections")
        ->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice Boltzmann solver for the variable-coefficient forced Burgers equation"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto* run = app.add_subcommand("run", "Run one experiment and write its tables");
    add_discretization(run, run_flags);
    run->add_option("--t-end", run_flags.t_end, "Final time");
    run->add_flag("--oracle", run_flags.oracle, "Also run the finite-difference cross-check");
    run->add_option("--refine", run_flags.refine, "Extra refinement levels to append to the run");
    run->add_option("--scaling", run_flags.scaling, "Refinement scaling: acoustic | diffusive");
    run->add_option("--out", run_flags.out, "Output directory");
    run->add_flag("--no-header", run_flags.no_header, "Omit the provenance line from output files");

    std::string table_dir;
    auto* table = app.add_subcommand("table", "Print the tables stored in an output directory");
    table->add_option("--in", table_dir, "Output directory of a previous run")->required();

    RunFlags conv_flags;
    int levels = 4;
    double at_time = 0.2;
    auto* conv = app.add_subcommand("convergence", "Grid-refinement study at a fixed time");
    add_discretization(conv, conv_flags);
    conv->add_option("--levels", levels, "Number of grids (2 dx, dx, dx/2, ...)")->check(CLI::Range(2, 12));
    conv->add_option("--scaling", conv_flags.scaling, "acoustic (c fixed) | diffusive (tau fixed)");
    conv->add_option("--time", at_time, "Time at which the error is measured");
    conv->add_option("--out", conv_flags.out, "Also write convergence.csv to this directory");
    conv->add_flag("--no-header", conv_flags.no_header, "Omit the provenance line from output files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const vcfb::ExperimentConfig cfg = resolve(run_flags);
            const auto result = vcfb::run_experiment(cfg);
            vcfb::render_result(result, std::cout);
            fmt::print("\nwrote {}\n", cfg.outputs.string());
        } else if (*table) {
            vcfb::render_tables(table_dir, std::cout);
        } else if (*conv) {
            vcfb::ExperimentConfig cfg = resolve(conv_flags);
            cfg.refinement_time = at_time;
            cfg.t_end = std::max(cfg.t_end, at_time);
            cfg.validate();
            vcfb::ExperimentResult result;
            result.refinement = vcfb::refinement_study(cfg, levels);
            if (conv_flags.out) vcfb::write_refinement(cfg, *result.refinement);
            vcfb::render_result(result, std::cout);
        }
    } catch (const vcfb::NonFiniteError& e) {
        fmt::print(std::cerr, "diverged: {}\n", e.what());
        return kExitDiverged;
    } catch (const vcfb::CflViolation& e) {
        fmt::print(std::cerr, "diverged: {}\n", e.what());
        return kExitDiverged;
    } catch (const vcfb::ConfigInvalid& e) {
        fmt::print(std::cerr, "invalid configuration: {}\n", e.what());
        return kExitConfig;
    } catch (const vcfb::UnknownExample& e) {
        fmt::print(std::cerr, "invalid configuration: {}\n", e.what());
        return kExitConfig;
    } catch (const vcfb::TauOutOfRange& e) {
        fmt::print(std::cerr, "invalid configuration: {}\n", e.what());
        return kExitConfig;
    } catch (const vcfb::SingularDenominator& e) {
        fmt::print(std::cerr, "invalid configuration: {}\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return 1;
    }
    return 0;
}
