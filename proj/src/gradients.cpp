#include "bsq/gradients.hpp"

#include <cmath>

#include "bsq/monodromy.hpp"
#include "bsq/spectrum.hpp"

namespace bsq {
namespace {

void check_unit_grid(const std::vector<double>& grid, const char* where) {
    for (double t : grid)
        if (t < 0.0 || t > 1.0)
            throw UsageError(std::string(where) + ": grid points must lie in [0, 1]");
}

std::vector<double> reflected(const std::vector<double>& grid) {
    std::vector<double> r(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) r[i] = 1.0 - grid[i];
    return r;
}

// Gradient of a quantity under u -> u_*^- = (p(1-x), -q(1-x)): if
// F(u) = s G(u_*^-), then dF/dp(t) = s dG/dp(1-t), dF/dq(t) = -s dG/dq(1-t).
GradientPair pull_back_star_reflect(const std::vector<double>& grid, GradientPair g,
                                    double s) {
    GradientPair out;
    out.grid = grid;
    out.d_p.resize(grid.size());
    out.d_q.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.d_p[i] = s * g.d_p[i];
        out.d_q[i] = -s * g.d_q[i];
    }
    return out;
}

} // namespace

GradientPair grad_delta(const CoefficientPair& u, double mu,
                        const std::vector<double>& grid, const OdeOptions& opts) {
    check_unit_grid(grid, "grad_delta");
    cd lam(mu);
    Mat3 M = fundamental_matrix(u, lam, {1.0}, opts)[0].value;
    Mat3 Mt = transposed_fundamental_matrix(u, lam, {1.0}, opts)[0].value;
    if (M(0, 1) == cd(0.0)) throw NumericError("grad_delta: y_2(1) vanishes");
    cd c = (M(0, 1) * Mt(0, 0) + M(0, 2) * Mt(1, 0)) / M(0, 1);

    // psi on grid and grid + 1, anchored as in the eigenfunction module.
    std::vector<double> both(grid);
    for (double t : grid) both.push_back(t + 1.0);
    std::vector<CauchySample> ps;
    if (mu > 0.0) {
        Vec3 data(cd(0.0), -Mt(0, 2), -Mt(1, 2));
        ps = integrate_cauchy(u, lam, false, 1.0, data, both, opts);
    } else {
        Vec3 data(cd(0.0), M(0, 2), -M(0, 1));
        ps = integrate_cauchy(u, lam, false, 0.0, data, both, opts);
    }

    // chi on grid (left branch) and on grid - 1 (right branch at grid + 1).
    std::vector<double> mapped(grid);
    for (double t : grid) mapped.push_back(t - 1.0);
    auto ch = transposed_fundamental_matrix(u, lam, mapped, opts);

    std::size_t m = grid.size();
    GradientPair out;
    out.grid = grid;
    out.d_p.resize(m);
    out.d_q.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        cd psi_l = ps[i].y(0), dpsi_l = ps[i].y(1);
        cd psi_r = ps[m + i].y(0), dpsi_r = ps[m + i].y(1);
        cd chi_l = ch[i].value(0, 2), dchi_l = ch[i].value(1, 2);
        cd chi_r = ch[m + i].value(0, 2), dchi_r = ch[m + i].value(1, 2);
        cd br_l = dpsi_l * chi_l - psi_l * dchi_l;
        cd br_r = dpsi_r * chi_r - psi_r * dchi_r;
        out.d_p[i] = (-c * br_l + br_r).real();
        out.d_q[i] = (-c * psi_l * chi_l + psi_r * chi_r).real();
    }
    return out;
}

GradientPair grad_mu(const CoefficientPair& u, int n,
                     const std::vector<double>& grid, const OdeOptions& opts) {
    if (n == 0) throw UsageError("grad_mu: index must be nonzero");
    check_unit_grid(grid, "grad_mu");
    if (n < 0) {
        // mu_{-m}(u) = -mu_m(u_*^-)
        GradientPair g = grad_mu(u.star_reflect(), -n, reflected(grid), opts);
        return pull_back_star_reflect(grid, std::move(g), -1.0);
    }
    EigenvalueRecord rec = eigenvalue(u, n, opts);
    OdeOptions o = opts;
    o.with_lambda_derivative = true;
    DeltaValue d = delta_with_dot(u, cd(rec.mu), o);
    double dd = d.dot.real();
    if (dd == 0.0) throw NumericError("grad_mu: Delta'(mu) vanishes");
    GradientPair g = grad_delta(u, rec.mu, grid, opts);
    for (double& v : g.d_p) v /= -dd;
    for (double& v : g.d_q) v /= -dd;
    return g;
}

GradientPair grad_mu_tilde(const CoefficientPair& u, int n,
                           const std::vector<double>& grid, const OdeOptions& opts) {
    if (n == 0) throw UsageError("grad_mu_tilde: index must be nonzero");
    check_unit_grid(grid, "grad_mu_tilde");
    // mu~_n(u) = mu_n(u^-), so the gradient is the reflected gradient.
    GradientPair g = grad_mu(u.reflect(), n, reflected(grid), opts);
    GradientPair out;
    out.grid = grid;
    out.d_p = std::move(g.d_p);
    out.d_q = std::move(g.d_q);
    return out;
}

std::pair<GradientPair, GradientPair>
grad_traces(const CoefficientPair& u, double lambda, const std::vector<double>& grid,
            const OdeOptions& opts) {
    check_unit_grid(grid, "grad_traces");
    GradientPair gT, gTt;
    gT.grid = gTt.grid = grid;
    gT.d_p.resize(grid.size());
    gT.d_q.resize(grid.size());
    gTt.d_p.resize(grid.size());
    gTt.d_q.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        // K(t) = Phi(1 + t) Phi(t)^{-1}, computed as the monodromy of the
        // t-shifted equation (the literal product cancels catastrophically).
        Mat3 K = shifted_fundamental_matrix(u, cd(lambda), 1.0, grid[i], false, opts);
        Mat3 Kt = shifted_fundamental_matrix(u, cd(lambda), 1.0, grid[i], true, opts);
        gT.d_p[i] = -(K(0, 1) + K(1, 2)).real();
        gT.d_q[i] = -K(0, 2).real();
        gTt.d_p[i] = -(Kt(0, 1) + Kt(1, 2)).real();
        gTt.d_q[i] = Kt(0, 2).real();
    }
    return {gT, gTt};
}

GradientPair grad_tau3(const CoefficientPair& u, double lambda,
                       const std::vector<double>& grid, const OdeOptions& opts) {
    check_unit_grid(grid, "grad_tau3");
    if (!in_domain_D(cd(lambda)))
        throw UsageError("grad_tau3: lambda lies outside the domain D");
    Traces tr = traces(u, cd(lambda), opts);
    cd t3 = tau3_from_traces(tr.T, tr.Tt, SpectralParameter::from_lambda(cd(lambda)).z);
    cd s1 = (tr.Tt - 1.0 / t3) / t3;
    cd den = t3 * t3 - 2.0 * s1 * t3 + tr.Tt;
    auto [gT, gTt] = grad_traces(u, lambda, grid, opts);
    GradientPair out;
    out.grid = grid;
    out.d_p.resize(grid.size());
    out.d_q.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.d_p[i] = ((gT.d_p[i] * t3 - gTt.d_p[i]) * t3 / den).real();
        out.d_q[i] = ((gT.d_q[i] * t3 - gTt.d_q[i]) * t3 / den).real();
    }
    return out;
}

GradientPair grad_y3_at_1(const CoefficientPair& u, double lambda,
                          const std::vector<double>& grid, bool transposed,
                          const OdeOptions& opts) {
    check_unit_grid(grid, "grad_y3_at_1");
    cd lam(lambda);
    auto rows = adjoint_row(u, lam, transposed, grid, opts);
    auto fm = transposed ? transposed_fundamental_matrix(u, lam, grid, opts)
                         : fundamental_matrix(u, lam, grid, opts);
    GradientPair out;
    out.grid = grid;
    out.d_p.resize(grid.size());
    out.d_q.resize(grid.size());
    double qsign = transposed ? 1.0 : -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Vec3& r = rows[i].y;
        const Mat3& F = fm[i].value;
        out.d_p[i] = -(r(1) * F(0, 2) + r(2) * F(1, 2)).real();
        out.d_q[i] = qsign * (r(2) * F(0, 2)).real();
    }
    return out;
}

GradientPair grad_hs(const CoefficientPair& u, int n,
                     const std::vector<double>& grid, const OdeOptions& opts) {
    if (n == 0) throw UsageError("grad_hs: index must be nonzero");
    check_unit_grid(grid, "grad_hs");
    if (n < 0) {
        // h_{s,-m}(u) = -h_{s,m}(u_*^-)
        GradientPair g = grad_hs(u.star_reflect(), -n, reflected(grid), opts);
        return pull_back_star_reflect(grid, std::move(g), -1.0);
    }

    double mt = transposed_eigenvalue(u, n, opts).mu;
    OdeOptions o = opts;
    o.with_lambda_derivative = true;
    auto fm = fundamental_matrix(u, cd(mt), {1.0}, o)[0];
    auto ft = transposed_fundamental_matrix(u, cd(mt), {1.0}, o)[0];
    cd y3 = fm.value(0, 2), y3t = ft.value(0, 2);
    if (y3 == cd(0.0) || y3t == cd(0.0))
        throw NumericError("grad_hs: y_3(1) or y~_3(1) vanishes at mu~_n");

    Traces tr;
    tr.T = fm.value.trace();
    tr.Tt = ft.value.trace();
    tr.T_dot = fm.lambda_derivative.trace();
    tr.Tt_dot = ft.lambda_derivative.trace();
    cd t3 = tau3_from_traces(tr.T, tr.Tt, SpectralParameter::from_lambda(cd(mt)).z);
    cd t3dot = tau3_dot_from_traces(tr, t3);

    cd A = fm.lambda_derivative(0, 2) / y3 - ft.lambda_derivative(0, 2) / y3t -
           t3dot / (2.0 * t3);

    GradientPair gm = grad_mu_tilde(u, n, grid, opts);
    GradientPair gy = grad_y3_at_1(u, mt, grid, false, opts);
    GradientPair gyt = grad_y3_at_1(u, mt, grid, true, opts);
    GradientPair gt3 = grad_tau3(u, mt, grid, opts);

    double pref = 8.0 * pi * pi * n * n;
    GradientPair out;
    out.grid = grid;
    out.d_p.resize(grid.size());
    out.d_q.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double Bp = gy.d_p[i] / y3.real() - gyt.d_p[i] / y3t.real() -
                    gt3.d_p[i] / (2.0 * t3.real());
        double Bq = gy.d_q[i] / y3.real() - gyt.d_q[i] / y3t.real() -
                    gt3.d_q[i] / (2.0 * t3.real());
        out.d_p[i] = pref * (A.real() * gm.d_p[i] + Bp);
        out.d_q[i] = pref * (A.real() * gm.d_q[i] + Bq);
    }
    return out;
}

double pair_with(const GradientPair& g, const QuadGrid& quad,
                 const CoefficientPair& du) {
    if (g.grid != quad.t)
        throw UsageError("pair_with: gradient grid does not match quadrature nodes");
    double s = 0.0;
    for (std::size_t i = 0; i < g.grid.size(); ++i)
        s += quad.w[i] * (g.d_p[i] * du.p(g.grid[i]) + g.d_q[i] * du.q(g.grid[i]));
    return s;
}

double fd_directional(const std::function<double(const CoefficientPair&)>& f,
                      const CoefficientPair& u, const CoefficientPair& du,
                      double step) {
    if (step <= 0.0) throw UsageError("fd_directional: step must be positive");
    return (f(u.plus_scaled(du, step)) - f(u.plus_scaled(du, -step))) / (2.0 * step);
}

} // namespace bsq
