#pragma once

#include <array>
#include <utility>

#include "bsq/types.hpp"

namespace bsq::oracle {

// Unperturbed three-point eigenvalues iota_n = (2 nu n)^3, nu = pi/sqrt(3).
double mu0(int n);

// zeta_n = 1 - (-1)^n exp(-3 nu n)
double zeta(int n);

// Trig helper quartet at (n, x):
//   c = cos(pi n x), s = sin(pi n x), a = sqrt(3) s - c, b = sqrt(3) c + s.
struct TrigHelpers {
    double c, s, a, b;
};
TrigHelpers trig_helpers(int n, double x);

// Fundamental solutions of y''' = lambda y with y_j^{(k)}(0) = delta_{j,k+1},
// and the transposed family y~_j(x, lambda) = y_j(x, -lambda); prime rows.
cd y0(int j, double x, cd lambda);
cd y0_prime(int j, double x, cd lambda);
cd y0_second(int j, double x, cd lambda);
cd y0t(int j, double x, cd lambda);
cd y0t_prime(int j, double x, cd lambda);

// Closed-form values at lambda = iota_n, x = 1.
double y0n_1(int j, int n);  // y_j(1, iota_n)
double y0tn_1(int j, int n); // y~_j(1, iota_n)
// Lambda-derivatives of the third solution at x = 1, lambda = iota_n.
double y0n_dot3_1(int n);
double y0tn_dot3_1(int n);

// Unperturbed characteristic function and its lambda-derivative.
cd delta0(cd lambda);
cd delta0_dot(cd lambda);
// Closed-form derivative at the eigenvalue iota_n:
//   (-1)^n sqrt(3) e^{3 nu n} zeta_n^2 / (2 pi n)^5.
double delta0_dot_at(int n);

// Floquet multipliers of the unperturbed operator: (e^{omega z}, e^{omega^2 z}, e^z).
std::array<cd, 3> multipliers0(cd lambda);
double tau3_0(int n);     // e^{2 nu n} at iota_n
double tau3_dot_0(int n); // e^{2 nu n} / (2 pi n)^2

// Unperturbed eigenfunctions at lambda = iota_n, n >= 1 (real-valued).
double phi0(int n, double x);
double phi0_prime(int n, double x);
double psi0(int n, double x); // normalized: psi = (-1)^{n+1} e^{-nu n} phi
double psi0_prime(int n, double x);
double chi0(int n, double x); // transposed eigenfunction on [0, 2], piecewise
double chi0_prime(int n, double x);

// Zero-point gradients (value at t, pair (d/dp, d/dq)); signed n.
std::pair<double, double> grad_delta0(int n, double t);
std::pair<double, double> grad_mu0(int n, double t);
std::pair<double, double> grad_hs0(int n, double t);
// Zero-point gradients of y_3(1, iota_n) and y~_3(1, iota_n), n >= 1.
std::pair<double, double> grad_y3_0(int n, double t);
std::pair<double, double> grad_y3t_0(int n, double t);
// Coefficients in grad h_s = 8 (pi n)^2 (A_n grad mu~_n + B_n).
double hs_A0(int n);
std::pair<double, double> hs_B0(int n, double t);

} // namespace bsq::oracle
