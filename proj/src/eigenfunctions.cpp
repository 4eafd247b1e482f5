#include "bsq/eigenfunctions.hpp"

#include <cmath>

namespace bsq {
namespace {

void check_grid(const std::vector<double>& grid, const char* where) {
    for (double x : grid)
        if (x < 0.0 || x > 2.0)
            throw UsageError(std::string(where) + ": grid points must lie in [0, 2]");
}

} // namespace

SampledFunction psi(const CoefficientPair& u, double mu,
                    const std::vector<double>& grid, const OdeOptions& opts) {
    check_grid(grid, "psi");
    Mat3 M = fundamental_matrix(u, cd(mu), {1.0}, opts)[0].value;
    std::vector<CauchySample> samples;
    if (mu > 0.0) {
        // Anchor at x = 1: the data (0, -Mt13, -Mt23) is free of the forward-
        // growing mode, so backward integration over [0, 1] is stable; at an
        // eigenvalue it reproduces the normalization psi'(0) = y_3(1).
        Mat3 Mt = transposed_fundamental_matrix(u, cd(mu), {1.0}, opts)[0].value;
        Vec3 data(cd(0.0), -Mt(0, 2), -Mt(1, 2));
        samples = integrate_cauchy(u, cd(mu), false, 1.0, data, grid, opts);
    } else {
        Vec3 data(cd(0.0), M(0, 2), -M(0, 1));
        samples = integrate_cauchy(u, cd(mu), false, 0.0, data, grid, opts);
    }
    SampledFunction f;
    f.grid = grid;
    f.values.reserve(grid.size());
    f.derivative_values.reserve(grid.size());
    for (const auto& s : samples) {
        f.values.push_back(s.y(0).real());
        f.derivative_values.push_back(s.y(1).real());
    }
    return f;
}

SampledFunction phi(const CoefficientPair& u, double mu,
                    const std::vector<double>& grid, const OdeOptions& opts) {
    check_grid(grid, "phi");
    Mat3 M = fundamental_matrix(u, cd(mu), {1.0}, opts)[0].value;
    Mat3 Mt = transposed_fundamental_matrix(u, cd(mu), {1.0}, opts)[0].value;
    // phi^{[2]}(0) = M12 Mt11 + M13 Mt21; at an eigenvalue phi = -c psi with
    // c = phi^{[2]}(0) / y_2(1).
    cd y2_1 = M(0, 1);
    if (y2_1 == cd(0.0)) throw NumericError("phi: y_2(1) vanishes");
    cd c = (M(0, 1) * Mt(0, 0) + M(0, 2) * Mt(1, 0)) / y2_1;
    SampledFunction f = psi(u, mu, grid, opts);
    double scale = -c.real();
    for (double& v : f.values) v *= scale;
    for (double& v : f.derivative_values) v *= scale;
    return f;
}

SampledFunction chi(const CoefficientPair& u, double mu,
                    const std::vector<double>& grid, const OdeOptions& opts) {
    check_grid(grid, "chi");
    std::vector<double> mapped(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        mapped[i] = (grid[i] <= 1.0) ? grid[i] : grid[i] - 2.0;
    auto fm = transposed_fundamental_matrix(u, cd(mu), mapped, opts);
    SampledFunction f;
    f.grid = grid;
    f.values.reserve(grid.size());
    f.derivative_values.reserve(grid.size());
    for (const auto& m : fm) {
        f.values.push_back(m.value(0, 2).real());
        f.derivative_values.push_back(m.value(1, 2).real());
    }
    return f;
}

std::vector<double> bracket(const SampledFunction& f, const SampledFunction& g) {
    if (f.grid != g.grid)
        throw UsageError("bracket: sampled functions must share the same grid");
    std::vector<double> out(f.grid.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.derivative_values[i] * g.values[i] - f.values[i] * g.derivative_values[i];
    return out;
}

} // namespace bsq
