#pragma once

#include <string>

namespace bsq {

enum class Command { forward, invert, gradcheck, asymptotics, oracle };

struct RunConfig {
    Command command = Command::forward;
    int modes = 8;
    double tol = 1e-10;        // inversion tolerance / check threshold
    double rtol = 1e-13;       // ODE relative tolerance
    double ball_radius = 0.1;
    int grid = 257;            // quadrature node count
    std::uint64_t seed = 1;
    int jobs = 1;              // accepted for interface stability; execution is serial
    bool full_newton = false;  // invert --mode full
    bool diagnostics = false;
    std::string input_path;
    std::string output_path;
    std::string report_path;   // eigenvalue CSV (forward) / convergence CSV (invert)
};

// Executes one subcommand; returns the process exit code:
// 0 = pass, 1 = numeric failure / threshold violation, 2 = usage or I/O error.
int run(const RunConfig& config);

} // namespace bsq
