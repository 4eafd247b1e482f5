#pragma once

#include <vector>

#include "bsq/ode.hpp"
#include "bsq/trig.hpp"
#include "bsq/types.hpp"

namespace bsq {

// Real-valued function sampled on a grid together with its first derivative.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> derivative_values;
};

// Three-point eigenfunction psi (Cauchy data (0, y_3(1), -y_2(1)) at x = 0,
// equivalently (0, -Phi~_13(1), -Phi~_23(1)) at x = 1); grid inside [0, 2].
SampledFunction psi(const CoefficientPair& u, double mu,
                    const std::vector<double>& grid, const OdeOptions& opts = {});

// Eigenfunction phi normalized by phi'(0) = -Phi(1)_12 Phi~(1)_12 - Phi(1)_13 Phi~(1)_22;
// at an eigenvalue phi = -c psi with c = phi^{[2]}(0) / y_2(1).
SampledFunction phi(const CoefficientPair& u, double mu,
                    const std::vector<double>& grid, const OdeOptions& opts = {});

// Transposed eigenfunction chi: chi(x) = Phi~_13(x) on [0, 1] and
// Phi~_13(x - 2) on (1, 2] (the coefficients are 1-periodic, so the shifted
// branch solves the same equation); grid inside [0, 2].
SampledFunction chi(const CoefficientPair& u, double mu,
                    const std::vector<double>& grid, const OdeOptions& opts = {});

// Pointwise Wronskian bracket {f, g} = f' g - f g' on a shared grid.
std::vector<double> bracket(const SampledFunction& f, const SampledFunction& g);

} // namespace bsq
