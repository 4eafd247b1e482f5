#include "bsq/monodromy.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace bsq {
namespace {

cd cubic(cd tau, cd T, cd Tt) { return ((tau - T) * tau + Tt) * tau - 1.0; }
cd cubic_prime(cd tau, cd T, cd Tt) { return (3.0 * tau - 2.0 * T) * tau + Tt; }

} // namespace

Mat3 monodromy(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    return fundamental_matrix(u, lambda, {1.0}, opts)[0].value;
}

Mat3 transposed_monodromy(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    return transposed_fundamental_matrix(u, lambda, {1.0}, opts)[0].value;
}

Traces traces(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    auto fm = fundamental_matrix(u, lambda, {1.0}, opts)[0];
    auto ft = transposed_fundamental_matrix(u, lambda, {1.0}, opts)[0];
    Traces tr;
    tr.T = fm.value.trace();
    tr.Tt = ft.value.trace();
    if (opts.with_lambda_derivative) {
        tr.T_dot = fm.lambda_derivative.trace();
        tr.Tt_dot = ft.lambda_derivative.trace();
    }
    return tr;
}

MultiplierTriple multipliers_from_traces(cd T, cd Tt, cd z) {
    // Companion matrix of tau^3 - T tau^2 + Tt tau - 1.
    Mat3 C = Mat3::Zero();
    C(0, 2) = 1.0;
    C(1, 0) = 1.0;
    C(1, 2) = -Tt;
    C(2, 1) = 1.0;
    C(2, 2) = T;
    Eigen::ComplexEigenSolver<Mat3> es(C, false);
    if (es.info() != Eigen::Success)
        throw NumericError("multipliers: companion eigensolver failed");
    Vec3 roots = es.eigenvalues();

    // Dominant branch: the root nearest to the unperturbed multiplier e^z.
    cd ez = std::exp(z);
    int i3 = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(roots(i) - ez) < std::abs(roots(i3) - ez)) i3 = i;
    cd tau3 = roots(i3);

    // Newton polish; the dominant root is well conditioned in (T, Tt).
    for (int it = 0; it < 3; ++it) {
        cd dp = cubic_prime(tau3, T, Tt);
        if (std::abs(dp) < 1e-12 * (std::abs(tau3) * std::abs(tau3) + 1.0)) break;
        cd step = cubic(tau3, T, Tt) / dp;
        tau3 -= step;
        if (std::abs(step) <= 1e-16 * std::abs(tau3)) break;
    }

    // Small pair from the elementary symmetric functions; this avoids the
    // O(eps |T|) absolute noise of the companion's subdominant eigenvalues.
    cd s1 = (Tt - 1.0 / tau3) / tau3; // tau1 + tau2
    cd s2 = 1.0 / tau3;               // tau1 * tau2
    cd sq = std::sqrt(s1 * s1 - 4.0 * s2);
    if (std::norm(s1 + sq) < std::norm(s1 - sq)) sq = -sq;
    cd r1 = 0.5 * (s1 + sq);
    cd r2 = (r1 != cd(0.0)) ? s2 / r1 : 0.5 * (s1 - sq);
    if (std::abs(r1 - std::exp(omega * z)) > std::abs(r2 - std::exp(omega * z)))
        std::swap(r1, r2);
    return {r1, r2, tau3};
}

MultiplierTriple multipliers(const CoefficientPair& u, cd lambda,
                             const OdeOptions& opts) {
    Traces tr = traces(u, lambda, opts);
    return multipliers_from_traces(tr.T, tr.Tt, SpectralParameter::from_lambda(lambda).z);
}

cd tau3_from_traces(cd T, cd Tt, cd z) {
    MultiplierTriple m = multipliers_from_traces(T, Tt, z);
    cd ez = std::exp(z);
    double d3 = std::abs(m.tau3 - ez);
    if (std::abs(m.tau1 - ez) <= d3 * (1.0 + 1e-9) ||
        std::abs(m.tau2 - ez) <= d3 * (1.0 + 1e-9))
        throw NumericError("tau3: dominant multiplier branch is ambiguous here");
    return m.tau3;
}

cd tau3(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    if (!in_domain_D(lambda))
        throw UsageError("tau3: lambda lies outside the domain of analyticity D");
    Traces tr = traces(u, lambda, opts);
    return tau3_from_traces(tr.T, tr.Tt, SpectralParameter::from_lambda(lambda).z);
}

cd tau3_dot_from_traces(const Traces& tr, cd tau3) {
    cd s1 = (tr.Tt - 1.0 / tau3) / tau3;
    cd den = tau3 * tau3 - 2.0 * s1 * tau3 + tr.Tt; // = D'(tau3), cancellation-free
    if (den == cd(0.0)) throw NumericError("tau3_dot: multiple root");
    return (tr.T_dot * tau3 - tr.Tt_dot) * tau3 / den;
}

cd tau3_lambda_derivative(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    if (!in_domain_D(lambda))
        throw UsageError("tau3_lambda_derivative: lambda lies outside D");
    OdeOptions o = opts;
    o.with_lambda_derivative = true;
    Traces tr = traces(u, lambda, o);
    cd t3 = tau3_from_traces(tr.T, tr.Tt, SpectralParameter::from_lambda(lambda).z);
    return tau3_dot_from_traces(tr, t3);
}

} // namespace bsq
