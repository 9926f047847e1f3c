#pragma once

// Subcommand implementations behind the qsgeo binary. Every command writes
// one deterministic data payload (CSV or JSON) to the chosen sink and a
// one-line JSON run manifest (command, parameters, version, payload
// checksum) to the manifest stream.

#include <ostream>
#include <string>
#include <vector>

namespace qsg::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct CommonOptions {
    std::string format = "csv";  // csv | json
    std::string out_path;        // empty -> stdout
    int grid_steps = 2000;       // numeric-trajectory resolution (QSG_DEFAULT_STEPS)
};

struct Fig1Options {
    std::vector<double> gammas{1.0, 1.1, 2.0};
    double x_min = 0.01;
    double x_max = 0.99;
    int points = 99;
};

struct ProbeOptions {
    std::string scheme = "fg";  // fg | mfg
    double x = 0.25;
    double gamma = 1.0;
    bool emit_trajectory = false;
};

struct AppendixBOptions {
    int n_max = 10;
};

int cmd_fig1(const Fig1Options& opt, const CommonOptions& common, std::ostream& manifest);
int cmd_table1(const CommonOptions& common, std::ostream& manifest);
int cmd_probe(const ProbeOptions& opt, const CommonOptions& common, std::ostream& manifest);
int cmd_appendix_b(const AppendixBOptions& opt, const CommonOptions& common,
                   std::ostream& manifest);

}  // namespace qsg::cli
