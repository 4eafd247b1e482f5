#include <CLI11.hpp>

#include "bsq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bsq: forward and inverse spectral maps for the third-order "
                 "periodic operator of the good Boussinesq equation"};
    app.require_subcommand(1);

    bsq::RunConfig cfg;
    std::string mode = "quasi";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--modes", cfg.modes, "number of modes N")->check(CLI::PositiveNumber);
        sub->add_option("--rtol", cfg.rtol, "ODE relative tolerance");
        sub->add_option("--grid", cfg.grid, "quadrature node count")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--jobs", cfg.jobs, "worker count (execution is serial)");
        sub->add_flag("--diagnostics", cfg.diagnostics, "print extra diagnostics");
    };

    CLI::App* fwd = app.add_subcommand("forward", "compute spectral data of a coefficient file");
    fwd->add_option("--input", cfg.input_path, "coefficient JSON")->required();
    fwd->add_option("--output", cfg.output_path, "spectral-data JSON")->required();
    fwd->add_option("--eigs", cfg.report_path, "eigenvalue CSV");
    add_common(fwd);

    CLI::App* inv = app.add_subcommand("invert", "recover coefficients from spectral data");
    inv->add_option("--input", cfg.input_path, "spectral-data JSON")->required();
    inv->add_option("--output", cfg.output_path, "coefficient JSON")->required();
    inv->add_option("--report", cfg.report_path, "convergence CSV");
    inv->add_option("--mode", mode, "quasi|full")
        ->check(CLI::IsMember({"quasi", "full"}));
    inv->add_option("--tol", cfg.tol, "residual tolerance (default 1e-10)");
    inv->add_option("--ball-radius", cfg.ball_radius, "damping ball radius");
    add_common(inv);

    CLI::App* grd = app.add_subcommand("gradcheck", "analytic gradients vs finite differences");
    grd->add_option("--tol", cfg.tol, "relative-error threshold (default 1e-4)");
    add_common(grd);

    CLI::App* asy = app.add_subcommand("asymptotics", "quadratic-residual fits for the linearization");
    add_common(asy);

    CLI::App* orc = app.add_subcommand("oracle", "closed-form comparisons at u = 0");
    orc->add_option("--tol", cfg.tol, "relative-deviation threshold (default 1e-8)");
    add_common(orc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return (code == 0) ? 0 : 2;
    }

    if (fwd->parsed()) cfg.command = bsq::Command::forward;
    if (inv->parsed()) cfg.command = bsq::Command::invert;
    if (grd->parsed()) {
        cfg.command = bsq::Command::gradcheck;
        if (grd->count("--tol") == 0) cfg.tol = 1e-4;
    }
    if (asy->parsed()) cfg.command = bsq::Command::asymptotics;
    if (orc->parsed()) {
        cfg.command = bsq::Command::oracle;
        if (orc->count("--tol") == 0) cfg.tol = 1e-8;
    }
    cfg.full_newton = (mode == "full");

    return bsq::run(cfg);
}
