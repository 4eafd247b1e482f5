#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bsq {

using cd = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// nu = pi/sqrt(3); the unperturbed eigenvalues are iota_n = (2 nu n)^3.
inline constexpr double nu = 1.81379936423421785059407160506;

// omega = exp(2 pi i/3)
inline const cd omega{-0.5, 0.86602540378443864676372317075294};
inline const cd omega2{-0.5, -0.86602540378443864676372317075294};

// Numerical failure inside a validated-regime computation (exit code 1 territory).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Input/usage violations (exit code 2 territory).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Spectral parameter: lambda together with its principal cube root,
// arg z in (-pi/3, pi/3].
struct SpectralParameter {
    cd lambda;
    cd z;

    static SpectralParameter from_lambda(cd lambda) {
        if (lambda == cd(0.0)) return {lambda, cd(0.0)};
        return {lambda, std::exp(std::log(lambda) / 3.0)};
    }
    static SpectralParameter from_z(cd z) { return {z * z * z, z}; }
};

// lambda in D = C minus the union over n >= 0 of the closed discs -D_n,
// where D_n = {z^3 : |z - 2 nu n| < 1} (discs round in the z coordinate).
inline bool in_domain_D(cd lambda) {
    cd w = SpectralParameter::from_lambda(-lambda).z;
    int n0 = (int)std::lround(w.real() / (2.0 * nu));
    for (int n = n0 - 1; n <= n0 + 1; ++n) {
        if (n < 0) continue;
        if (std::abs(w - cd(2.0 * nu * n, 0.0)) <= 1.0) return false;
    }
    return true;
}

} // namespace bsq
