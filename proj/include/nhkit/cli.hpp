#ifndef NHKIT_CLI_HPP
#define NHKIT_CLI_HPP

#include "nhkit/model.hpp"

#include <string>
#include <vector>

namespace nhkit::cli {

// Parsed invocation: one subcommand plus every knob it may need. Flags
// override config-file values; unknown keys are rejected.
struct RunConfig {
    std::string command;
    model::ModelParams params{1.0, 1.0, 1.0, 0.0, 4, model::Boundary::periodic};

    // fixed-line-drive
    double zeta = 0.0;
    double dt = 1e-3;
    double horizon = 2.0;

    // quench-scan
    std::string scan_parameter = "mu";  // "mu" or "ratio"
    std::vector<double> scan_values = {0.0, 0.001, 0.01};
    double t_max = 50.0;
    int t_steps = 500;
    double threshold = 0.5;

    // zero-modes
    std::string branch = "minus";  // "minus" or "plus"

    // spin-check / heisenberg-check
    int sites = 8;
    std::vector<double> imbalances = {0.0, 0.5, 1.0, 2.0};

    std::string output_dir = ".";
};

// Thrown when parsing already settled the outcome (help text, usage error).
struct ExitRequest {
    int code;
};

// Throws ExitRequest for help/usage outcomes, std::invalid_argument for
// constraint violations; both carry one-line actionable messages.
RunConfig parse_config(int argc, const char* const* argv);

// Executes the configured subcommand, writing a CSV table and a JSON
// metadata sidecar into output_dir. Returns the process exit code:
// 0 success, 3 when a verification-style command finds a failing identity.
int run(const RunConfig& config);

// parse_config + run with the documented exit-code contract:
// 0 success, 2 configuration error, 3 computation error.
int main_entry(int argc, const char* const* argv);

}  // namespace nhkit::cli

#endif
