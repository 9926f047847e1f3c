#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

namespace {

// exit codes: 0 success, 2 usage/domain error, 3 internal consistency failure
constexpr int kUsageError = 2;
constexpr int kConsistencyError = 3;

int env_grid_steps()
{
    const char* raw = std::getenv("QSG_DEFAULT_STEPS");
    if (raw == nullptr || *raw == '\0') {
        return 2000;
    }
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0') {
        throw std::invalid_argument("QSG_DEFAULT_STEPS is not an integer: " +
                                    std::string(raw));
    }
    return int(value);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geometry of two-level analog quantum search evolutions"};
    app.require_subcommand(1);

    qsg::cli::CommonOptions common;
    qsg::cli::Fig1Options fig1;
    qsg::cli::ProbeOptions probe;
    qsg::cli::AppendixBOptions appendix;

    auto add_common = [&common](CLI::App* sub, bool with_format = true) {
        sub->add_option("--out", common.out_path, "Write the data payload to a file");
        if (with_format) {
            sub->add_option("--format", common.format, "Output format")
                ->check(CLI::IsMember({"csv", "json"}));
        }
    };

    CLI::App* fig1_cmd = app.add_subcommand(
        "fig1", "Efficiency and uncertainty curves over the overlap grid");
    fig1_cmd->add_option("--gammas", fig1.gammas, "Energy ratios, comma separated")
        ->delimiter(',');
    fig1_cmd->add_option("--x-min", fig1.x_min, "Smallest overlap");
    fig1_cmd->add_option("--x-max", fig1.x_max, "Largest overlap");
    fig1_cmd->add_option("--points", fig1.points, "Grid size");
    add_common(fig1_cmd);

    CLI::App* table1_cmd =
        app.add_subcommand("table1", "Two-row verdict table for both schemes");
    add_common(table1_cmd);

    CLI::App* probe_cmd =
        app.add_subcommand("probe", "Full JSON report for one scenario");
    probe_cmd->add_option("--scheme", probe.scheme, "fg or mfg")
        ->check(CLI::IsMember({"fg", "mfg"}));
    probe_cmd->add_option("--x", probe.x, "Quantum overlap")->required();
    probe_cmd->add_option("--gamma", probe.gamma, "Energy ratio (mfg only)");
    probe_cmd->add_flag("--emit-trajectory", probe.emit_trajectory,
                        "Include trajectory samples");
    add_common(probe_cmd, false);

    CLI::App* appendix_cmd =
        app.add_subcommand("appendix-b", "Feasibility windows of the solvability condition");
    appendix_cmd->add_option("--n-max", appendix.n_max, "Largest window index");
    add_common(appendix_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help / --version
        }
        std::cerr << e.what() << "\n";
        return kUsageError;
    }

    try {
        common.grid_steps = env_grid_steps();
        if (fig1_cmd->parsed()) {
            return qsg::cli::cmd_fig1(fig1, common, std::cerr);
        }
        if (table1_cmd->parsed()) {
            return qsg::cli::cmd_table1(common, std::cerr);
        }
        if (probe_cmd->parsed()) {
            return qsg::cli::cmd_probe(probe, common, std::cerr);
        }
        if (appendix_cmd->parsed()) {
            return qsg::cli::cmd_appendix_b(appendix, common, std::cerr);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kConsistencyError;
    }
    return kUsageError;
}
