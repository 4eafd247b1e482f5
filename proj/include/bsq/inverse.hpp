#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bsq/forward_map.hpp"
#include "bsq/gradients.hpp"
#include "bsq/quadrature.hpp"
#include "bsq/trig.hpp"

namespace bsq {

enum class InvertMode { quasi, full };

struct InvertOptions {
    InvertMode mode = InvertMode::quasi;
    double tol = 1e-10;
    int max_iters = 50;
    double ball_radius = 0.1; // damping kicks in when ||u||_1 exceeds this
    QuadGrid quad = QuadGrid::uniform_open();
    OdeOptions ode;
};

struct InversionReport {
    bool converged = false;
    int iterations = 0;
    std::vector<double> residual_history;
    CoefficientPair final_u;
    int ball_violations = 0;
};

// Recover u from spectral data by the F-preconditioned quasi-Newton iteration
// u_{k+1} = u_k - F^{-1}(h(u_k) - data) (mode quasi), or with the full
// Jacobian in Fourier coordinates (mode full).
InversionReport invert(const SpectralData& data, const InvertOptions& opts = {});

// Jacobian of the forward map in the block coordinates used by F: rows are
// (h_c(m), h_s(m), h_c(-m), h_s(-m)), columns (p'_cm, p'_sm, q_cm, q_sm),
// m = 1..N.  At u = 0 this equals F_matrix(N).
Eigen::MatrixXd jacobian(const CoefficientPair& u, int N,
                         const QuadGrid& quad = QuadGrid::uniform_open(),
                         const OdeOptions& opts = {});

// The matrix of the linear map F in the same coordinates (block diagonal).
Eigen::MatrixXd F_matrix(int N);

// Packing helpers shared by the Jacobian and the full-mode iteration.
Eigen::VectorXd pack_spectral(const SpectralData& d);
Eigen::VectorXd pack_coefficients(const CoefficientPair& u, int N);
CoefficientPair unpack_coefficients(const Eigen::VectorXd& x);

} // namespace bsq
