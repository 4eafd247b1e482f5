#include "bsq/oracle.hpp"

#include <cmath>

namespace bsq::oracle {
namespace {

const double sqrt3 = std::sqrt(3.0);

void require_positive(int n, const char* where) {
    if (n < 1) throw UsageError(std::string(where) + ": index must be >= 1");
}

void require_nonzero(int n, const char* where) {
    if (n == 0) throw UsageError(std::string(where) + ": index must be nonzero");
}

} // namespace

double mu0(int n) {
    require_nonzero(n, "mu0");
    double s = 2.0 * nu * n;
    return s * s * s;
}

double zeta(int n) {
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    return 1.0 - sgn * std::exp(-3.0 * nu * n);
}

TrigHelpers trig_helpers(int n, double x) {
    double c = std::cos(pi * n * x);
    double s = std::sin(pi * n * x);
    return {c, s, sqrt3 * s - c, sqrt3 * c + s};
}

cd y0(int j, double x, cd lambda) {
    if (lambda == cd(0.0)) {
        switch (j) {
        case 1: return cd(1.0);
        case 2: return cd(x);
        case 3: return cd(0.5 * x * x);
        }
        throw UsageError("y0: solution index must be 1, 2 or 3");
    }
    cd z = SpectralParameter::from_lambda(lambda).z;
    cd e1 = std::exp(omega * z * x), e2 = std::exp(omega2 * z * x), e3 = std::exp(z * x);
    switch (j) {
    case 1: return (e1 + e2 + e3) / 3.0;
    case 2: return (omega2 * e1 + omega * e2 + e3) / (3.0 * z);
    case 3: return (omega * e1 + omega2 * e2 + e3) / (3.0 * z * z);
    }
    throw UsageError("y0: solution index must be 1, 2 or 3");
}

cd y0_prime(int j, double x, cd lambda) {
    switch (j) {
    case 1: return lambda * y0(3, x, lambda);
    case 2: return y0(1, x, lambda);
    case 3: return y0(2, x, lambda);
    }
    throw UsageError("y0_prime: solution index must be 1, 2 or 3");
}

cd y0_second(int j, double x, cd lambda) {
    switch (j) {
    case 1: return lambda * y0(2, x, lambda);
    case 2: return lambda * y0(3, x, lambda);
    case 3: return y0(1, x, lambda);
    }
    throw UsageError("y0_second: solution index must be 1, 2 or 3");
}

cd y0t(int j, double x, cd lambda) { return y0(j, x, -lambda); }
cd y0t_prime(int j, double x, cd lambda) { return y0_prime(j, x, -lambda); }

double y0n_1(int j, int n) {
    require_positive(n, "y0n_1");
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    double pn = pi * n;
    switch (j) {
    case 1: return (2.0 * sgn * std::exp(-nu * n) + std::exp(2.0 * nu * n)) / 3.0;
    case 2: return std::exp(2.0 * nu * n) * zeta(n) / (2.0 * sqrt3 * pn);
    case 3: return std::exp(2.0 * nu * n) * zeta(n) / (4.0 * pn * pn);
    }
    throw UsageError("y0n_1: solution index must be 1, 2 or 3");
}

double y0tn_1(int j, int n) {
    require_positive(n, "y0tn_1");
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    double pn = pi * n;
    switch (j) {
    case 1: return (std::exp(-2.0 * nu * n) + 2.0 * sgn * std::exp(nu * n)) / 3.0;
    case 2: return sgn * std::exp(nu * n) * zeta(n) / (2.0 * sqrt3 * pn);
    case 3: return -sgn * std::exp(nu * n) * zeta(n) / (4.0 * pn * pn);
    }
    throw UsageError("y0tn_1: solution index must be 1, 2 or 3");
}

double y0n_dot3_1(int n) {
    require_positive(n, "y0n_dot3_1");
    double pn = pi * n;
    return std::exp(2.0 * nu * n) * zeta(n) * (1.0 - sqrt3 / pn) / std::pow(2.0 * pn, 4);
}

double y0tn_dot3_1(int n) {
    require_positive(n, "y0tn_dot3_1");
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    double pn = pi * n;
    return sgn * std::exp(nu * n) * zeta(n) * (1.0 + sqrt3 / pn) / std::pow(2.0 * pn, 4);
}

cd delta0(cd lambda) {
    if (lambda == cd(0.0)) return cd(1.0);
    cd z = SpectralParameter::from_lambda(lambda).z;
    cd s1 = std::sin(sqrt3 * z / 2.0);
    cd s2 = std::sin(sqrt3 * omega * z / 2.0);
    cd s3 = std::sin(sqrt3 * omega2 * z / 2.0);
    return (8.0 / (3.0 * sqrt3)) * s1 * s2 * s3 / lambda;
}

cd delta0_dot(cd lambda) {
    if (lambda == cd(0.0)) throw UsageError("delta0_dot: lambda = 0 not supported");
    cd z = SpectralParameter::from_lambda(lambda).z;
    cd a1 = sqrt3 * z / 2.0, a2 = sqrt3 * omega * z / 2.0, a3 = sqrt3 * omega2 * z / 2.0;
    cd s1 = std::sin(a1), s2 = std::sin(a2), s3 = std::sin(a3);
    cd c1 = std::cos(a1), c2 = std::cos(a2), c3 = std::cos(a3);
    cd S = s1 * s2 * s3;
    cd Sp = (sqrt3 / 2.0) * (c1 * s2 * s3 + omega * s1 * c2 * s3 + omega2 * s1 * s2 * c3);
    cd dz = 1.0 / (3.0 * z * z);
    return (8.0 / (3.0 * sqrt3)) * (Sp * dz / lambda - S / (lambda * lambda));
}

double delta0_dot_at(int n) {
    require_positive(n, "delta0_dot_at");
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    double zn = zeta(n);
    return sgn * sqrt3 * std::exp(3.0 * nu * n) * zn * zn / std::pow(2.0 * pi * n, 5);
}

std::array<cd, 3> multipliers0(cd lambda) {
    cd z = SpectralParameter::from_lambda(lambda).z;
    return {std::exp(omega * z), std::exp(omega2 * z), std::exp(z)};
}

double tau3_0(int n) {
    require_positive(n, "tau3_0");
    return std::exp(2.0 * nu * n);
}

double tau3_dot_0(int n) {
    require_positive(n, "tau3_dot_0");
    return std::exp(2.0 * nu * n) / std::pow(2.0 * pi * n, 2);
}

namespace {
// kappa_n(x) = (-1)^{n+1} zeta_n e^{(3-x) nu n}; phi = kappa s_n / (4 (pi n)^3).
double kappa(int n, double x) {
    double sgn = (n % 2 == 0) ? -1.0 : 1.0;
    return sgn * zeta(n) * std::exp((3.0 - x) * nu * n);
}
} // namespace

double phi0(int n, double x) {
    require_positive(n, "phi0");
    return kappa(n, x) * trig_helpers(n, x).s / (4.0 * std::pow(pi * n, 3));
}

double phi0_prime(int n, double x) {
    require_positive(n, "phi0_prime");
    return kappa(n, x) * trig_helpers(-n, x).b / (sqrt3 * std::pow(2.0 * pi * n, 2));
}

double psi0(int n, double x) {
    require_positive(n, "psi0");
    double sgn = (n % 2 == 0) ? -1.0 : 1.0;
    return sgn * std::exp(-nu * n) * phi0(n, x);
}

double psi0_prime(int n, double x) {
    require_positive(n, "psi0_prime");
    double sgn = (n % 2 == 0) ? -1.0 : 1.0;
    return sgn * std::exp(-nu * n) * phi0_prime(n, x);
}

double chi0(int n, double x) {
    require_positive(n, "chi0");
    if (x <= 1.0) {
        double E = std::exp(-3.0 * nu * n * x);
        return std::exp(nu * n * x) * (trig_helpers(n, x).a + E) / std::pow(2.0 * pi * n, 2);
    }
    return std::real(y0(3, 2.0 - x, cd(mu0(n))));
}

double chi0_prime(int n, double x) {
    require_positive(n, "chi0_prime");
    if (x <= 1.0) {
        double E = std::exp(-3.0 * nu * n * x);
        return -std::exp(nu * n * x) * (trig_helpers(-n, x).a + E) / (2.0 * sqrt3 * pi * n);
    }
    return -std::real(y0(2, 2.0 - x, cd(mu0(n))));
}

std::pair<double, double> grad_delta0(int n, double t) {
    require_nonzero(n, "grad_delta0");
    auto g = grad_mu0(n, t);
    // grad mu = -grad Delta / Delta'(mu), so grad Delta = -Delta'(mu) grad mu.
    double dd = (n > 0) ? delta0_dot_at(n)
                        : std::real(delta0_dot(cd(-mu0(-n))));
    return {-g.first * dd, -g.second * dd};
}

std::pair<double, double> grad_mu0(int n, double t) {
    require_nonzero(n, "grad_mu0");
    double b2n = trig_helpers(2 * n, t).b;
    return {b2n * 2.0 * pi * n / 3.0, -b2n / sqrt3};
}

std::pair<double, double> grad_hs0(int n, double t) {
    require_nonzero(n, "grad_hs0");
    double am = trig_helpers(-2 * n, t).a;
    return {sqrt3 * am * 2.0 * pi * n / 3.0, -am};
}

std::pair<double, double> grad_y3_0(int n, double t) {
    require_positive(n, "grad_y3_0");
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    double pn = pi * n;
    double el = std::exp(-3.0 * nu * n * t), er = std::exp(-3.0 * nu * n * (1.0 - t));
    TrigHelpers h = trig_helpers(n, t);
    double c2n = trig_helpers(2 * n, t).c;
    double alpha = -h.c * (el + sgn * er);
    double beta = trig_helpers(-n, t).a * el + sgn * h.a * er;
    double pref = -std::exp(2.0 * nu * n) / (4.0 * sqrt3 * pn * pn * pn);
    double e3 = std::exp(-3.0 * nu * n);
    return {pref * (alpha - sgn * c2n * e3),
            pref * (sqrt3 / (4.0 * pn)) * (beta + 2.0 * sgn * c2n * e3)};
}

std::pair<double, double> grad_y3t_0(int n, double t) {
    require_positive(n, "grad_y3t_0");
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    double pn = pi * n;
    double el = std::exp(-3.0 * nu * n * t), er = std::exp(-3.0 * nu * n * (1.0 - t));
    TrigHelpers h = trig_helpers(n, t);
    double c2n = trig_helpers(2 * n, t).c;
    double alpha = -h.c * (el + sgn * er);
    double beta = trig_helpers(-n, t).a * el + sgn * h.a * er;
    double pref = sgn * std::exp(nu * n) / (4.0 * sqrt3 * pn * pn * pn);
    return {pref * (alpha - c2n), pref * (sqrt3 / (4.0 * pn)) * (beta + 2.0 * c2n)};
}

double hs_A0(int n) {
    require_positive(n, "hs_A0");
    return 3.0 / (8.0 * pi * pi * n * n);
}

std::pair<double, double> hs_B0(int n, double t) {
    require_positive(n, "hs_B0");
    double c2n = trig_helpers(2 * n, t).c;
    double pref = -sqrt3 * c2n / (2.0 * pi * pi * n * n);
    return {pref * 2.0 * pi * n / 3.0, -pref / sqrt3};
}

} // namespace bsq::oracle
