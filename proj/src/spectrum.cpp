#include "bsq/spectrum.hpp"

#include <cmath>

namespace bsq {
namespace {

const double sqrt3 = std::sqrt(3.0);

// First-order approximation of h_cn = mu_n - iota_n (signed n) used to seed
// the Newton iteration; this is the linear map F acting on u.
double hc_linear(const CoefficientPair& u, int n) {
    double pc = u.p.derivative().fourier_cos(n), ps = u.p.derivative().fourier_sin(n);
    double qc = u.q.fourier_cos(n), qs = u.q.fourier_sin(n);
    return -qc - ps / sqrt3 + pc / 3.0 - qs / sqrt3;
}

} // namespace

DeltaValue delta_with_dot(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    auto fm = fundamental_matrix(u, lambda, {1.0}, opts)[0];
    auto ft = transposed_fundamental_matrix(u, lambda, {1.0}, opts)[0];
    const Mat3 &M = fm.value, &Mt = ft.value;
    DeltaValue d;
    d.value = M(0, 1) * Mt(0, 2) + M(0, 2) * Mt(1, 2);
    if (opts.with_lambda_derivative) {
        const Mat3 &Md = fm.lambda_derivative, &Mtd = ft.lambda_derivative;
        d.dot = Md(0, 1) * Mt(0, 2) + M(0, 1) * Mtd(0, 2) + Md(0, 2) * Mt(1, 2) +
                M(0, 2) * Mtd(1, 2);
    }
    return d;
}

cd delta(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    return delta_with_dot(u, lambda, opts).value;
}

cd delta_dot(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    OdeOptions o = opts;
    o.with_lambda_derivative = true;
    return delta_with_dot(u, lambda, o).dot;
}

cd delta_determinant_form(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    auto fm = fundamental_matrix(u, lambda, {1.0, 2.0}, opts);
    const Mat3 &M1 = fm[0].value, &M2 = fm[1].value;
    return M1(0, 1) * M2(0, 2) - M1(0, 2) * M2(0, 1);
}

cd transposed_delta(const CoefficientPair& u, cd lambda, const OdeOptions& opts) {
    Mat3 M = fundamental_matrix(u, lambda, {1.0}, opts)[0].value;
    Mat3 Mt = transposed_fundamental_matrix(u, lambda, {1.0}, opts)[0].value;
    return Mt(0, 1) * M(0, 2) + Mt(0, 2) * M(1, 2);
}

EigenvalueRecord eigenvalue(const CoefficientPair& u, int n, const OdeOptions& opts) {
    if (n == 0) throw UsageError("eigenvalue: index must be nonzero");
    OdeOptions o = opts;
    o.with_lambda_derivative = true;

    // Newton iteration in the local cube-root coordinate: for n > 0 the
    // variable is z = lambda^{1/3} near 2 nu n; for n < 0 it is s = (-lambda)^{1/3}
    // near 2 nu |n|, so both branches run through an independent code path.
    int m = std::abs(n);
    double center = 2.0 * nu * m;
    double iota = (n > 0 ? 1.0 : -1.0) * center * center * center;
    double guess = iota + hc_linear(u, n);
    double v = std::cbrt(n > 0 ? guess : -guess);
    if (std::abs(v - center) > 0.9) v = center;

    EigenvalueRecord rec;
    rec.n = n;
    for (int it = 1; it <= 25; ++it) {
        rec.newton_iters = it;
        double lambda = (n > 0 ? 1.0 : -1.0) * v * v * v;
        DeltaValue d = delta_with_dot(u, cd(lambda), o);
        double f = d.value.real();
        double dldv = (n > 0 ? 3.0 : -3.0) * v * v;
        double fp = d.dot.real() * dldv;
        if (fp == 0.0) throw NumericError("eigenvalue: vanishing Newton derivative");
        double step = -f / fp;
        rec.residual = std::abs(f) / (std::abs(d.dot.real()) * (1.0 + std::abs(lambda)));
        // Apply the Newton correction before testing convergence: once the
        // residual criterion is met the applied step squares the error down
        // to the integration noise floor.
        double vnew = v + step;
        if (std::abs(vnew - center) > 1.2)
            vnew = center + 1.2 * ((vnew > center) ? 1.0 : -1.0);
        bool tiny = std::abs(vnew - v) < 4e-15 * (1.0 + std::abs(v));
        v = vnew;
        rec.mu = (n > 0 ? 1.0 : -1.0) * v * v * v;
        if (tiny || rec.residual <= 1e-12) break;
        if (it == 25)
            throw NumericError("eigenvalue: Newton iteration did not converge");
    }
    rec.disc_margin = 1.0 - std::abs(v - center);
    if (rec.disc_margin < 0.0)
        throw NumericError("eigenvalue: root escaped the localization disc");
    return rec;
}

EigenvalueRecord transposed_eigenvalue(const CoefficientPair& u, int n,
                                       const OdeOptions& opts) {
    if (n == 0) throw UsageError("transposed_eigenvalue: index must be nonzero");
    EigenvalueRecord rec = eigenvalue(u.star(), -n, opts);
    rec.n = n;
    rec.mu = -rec.mu;
    return rec;
}

std::vector<EigenvalueRecord> eigenvalue_sweep(const CoefficientPair& u, int N,
                                               const OdeOptions& opts) {
    if (N < 1) throw UsageError("eigenvalue_sweep: need N >= 1");
    std::vector<EigenvalueRecord> out;
    out.reserve(2 * N);
    for (int n = -N; n <= N; ++n) {
        if (n == 0) continue;
        out.push_back(eigenvalue(u, n, opts));
    }
    return out;
}

} // namespace bsq
