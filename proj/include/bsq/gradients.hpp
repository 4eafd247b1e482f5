#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bsq/ode.hpp"
#include "bsq/quadrature.hpp"
#include "bsq/trig.hpp"
#include "bsq/types.hpp"

namespace bsq {

// Variational derivative of a real-valued spectral quantity with respect to
// the coefficients, sampled on a grid in [0, 1]:
//   d F(u)(delta u) = int_0^1 ( d_p(t) delta p(t) + d_q(t) delta q(t) ) dt,
// for zero-mean directions (the samples are defined up to additive constants).
struct GradientPair {
    std::vector<double> grid;
    std::vector<double> d_p;
    std::vector<double> d_q;
};

// Gradient of Delta(mu, .) at fixed mu (mu must be an eigenvalue of u).
GradientPair grad_delta(const CoefficientPair& u, double mu,
                        const std::vector<double>& grid, const OdeOptions& opts = {});

// Gradient of the eigenvalue branch mu_n (signed n) and of mu~_n.
GradientPair grad_mu(const CoefficientPair& u, int n,
                     const std::vector<double>& grid, const OdeOptions& opts = {});
GradientPair grad_mu_tilde(const CoefficientPair& u, int n,
                           const std::vector<double>& grid,
                           const OdeOptions& opts = {});

// Gradients of the traces T = tr Phi(1) and T~ = tr Phi~(1) (lambda real).
std::pair<GradientPair, GradientPair>
grad_traces(const CoefficientPair& u, double lambda, const std::vector<double>& grid,
            const OdeOptions& opts = {});

// Gradient of tau3 (lambda real, inside the domain D).
GradientPair grad_tau3(const CoefficientPair& u, double lambda,
                       const std::vector<double>& grid, const OdeOptions& opts = {});

// Gradient of y_3(1, lambda) (or y~_3(1, lambda) when transposed).
GradientPair grad_y3_at_1(const CoefficientPair& u, double lambda,
                          const std::vector<double>& grid, bool transposed,
                          const OdeOptions& opts = {});

// Gradient of the norming constant h_sn (signed n).
GradientPair grad_hs(const CoefficientPair& u, int n,
                     const std::vector<double>& grid, const OdeOptions& opts = {});

// <grad, du> for a gradient sampled on the nodes of a quadrature grid.
double pair_with(const GradientPair& g, const QuadGrid& quad,
                 const CoefficientPair& du);

// Central finite difference of f along the direction du.
double fd_directional(const std::function<double(const CoefficientPair&)>& f,
                      const CoefficientPair& u, const CoefficientPair& du,
                      double step);

} // namespace bsq
