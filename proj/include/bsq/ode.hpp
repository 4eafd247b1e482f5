#pragma once

#include <vector>

#include "bsq/trig.hpp"
#include "bsq/types.hpp"

namespace bsq {

struct OdeOptions {
    double rtol = 1e-13;
    double atol = 1e-300; // pure relative control by default
    bool with_lambda_derivative = false;
};

struct FundamentalMatrix {
    double x = 0.0;
    Mat3 value = Mat3::Identity();
    Mat3 lambda_derivative = Mat3::Zero();
};

// Fundamental matrix Phi(x, lambda, u) with Phi_{jk} = y_k^{[j-1]} in the
// quasi-derivative frame (y, y', y'' + p y), Phi(0) = I.  x_points may lie
// anywhere in [-1, 2]; backward integration is used for negative abscissae.
std::vector<FundamentalMatrix>
fundamental_matrix(const CoefficientPair& u, cd lambda,
                   const std::vector<double>& x_points, const OdeOptions& opts = {});

// Transposed family Phi~(x, lambda, u) = Phi(x, -lambda, u_*).
std::vector<FundamentalMatrix>
transposed_fundamental_matrix(const CoefficientPair& u, cd lambda,
                              const std::vector<double>& x_points,
                              const OdeOptions& opts = {});

// Fundamental matrix of the coefficient-shifted equation (coefficients
// evaluated at x + t), integrated directly from 0 to x.  For x = 1 this is
// the monodromy-type factor Phi(1 + t, lambda, u) Phi(t, lambda, u)^{-1},
// computed without the catastrophic cancellation of the literal product.
Mat3 shifted_fundamental_matrix(const CoefficientPair& u, cd lambda, double x,
                                double t, bool transposed = false,
                                const OdeOptions& opts = {});

// Scalar solution in the frame (y, y', y^{[2]}) with Cauchy data at x0.
struct CauchySample {
    double x = 0.0;
    Vec3 y = Vec3::Zero();
};
std::vector<CauchySample>
integrate_cauchy(const CoefficientPair& u, cd lambda, bool transposed, double x0,
                 const Vec3& data, const std::vector<double>& x_points,
                 const OdeOptions& opts = {});

// Adjoint row r(t) = e_1^T Phi(1) Phi(t)^{-1}, integrated backward from
// r(1) = e_1^T; r' = -r A(t).  Samples are returned as column vectors.
std::vector<CauchySample>
adjoint_row(const CoefficientPair& u, cd lambda, bool transposed,
            const std::vector<double>& t_points, const OdeOptions& opts = {});

} // namespace bsq
