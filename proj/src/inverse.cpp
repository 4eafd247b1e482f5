#include "bsq/inverse.hpp"

#include <cmath>

namespace bsq {
namespace {

int hc_row(int n) { return (n > 0) ? 4 * (n - 1) : 4 * (-n - 1) + 2; }

} // namespace

Eigen::VectorXd pack_spectral(const SpectralData& d) {
    Eigen::VectorXd v(4 * d.N);
    for (int m = 1; m <= d.N; ++m) {
        v(4 * (m - 1)) = d.at(m).h_c;
        v(4 * (m - 1) + 1) = d.at(m).h_s;
        v(4 * (m - 1) + 2) = d.at(-m).h_c;
        v(4 * (m - 1) + 3) = d.at(-m).h_s;
    }
    return v;
}

Eigen::VectorXd pack_coefficients(const CoefficientPair& u, int N) {
    Eigen::VectorXd x(4 * N);
    TrigSeries dp = u.p.derivative();
    for (int m = 1; m <= N; ++m) {
        x(4 * (m - 1)) = dp.fourier_cos(m);
        x(4 * (m - 1) + 1) = dp.fourier_sin(m);
        x(4 * (m - 1) + 2) = u.q.fourier_cos(m);
        x(4 * (m - 1) + 3) = u.q.fourier_sin(m);
    }
    return x;
}

CoefficientPair unpack_coefficients(const Eigen::VectorXd& x) {
    if (x.size() % 4 != 0)
        throw UsageError("unpack_coefficients: length must be a multiple of 4");
    int N = static_cast<int>(x.size() / 4);
    std::vector<double> pa(N), pb(N), qa(N), qb(N);
    for (int m = 1; m <= N; ++m) {
        pa[m - 1] = -x(4 * (m - 1) + 1) / (pi * m);
        pb[m - 1] = x(4 * (m - 1)) / (pi * m);
        qa[m - 1] = 2.0 * x(4 * (m - 1) + 2);
        qb[m - 1] = 2.0 * x(4 * (m - 1) + 3);
    }
    return {TrigSeries(pa, pb), TrigSeries(qa, qb)};
}

Eigen::MatrixXd F_matrix(int N) {
    if (N < 1) throw UsageError("F_matrix: need N >= 1");
    Eigen::MatrixXd F(4 * N, 4 * N);
    for (int j = 0; j < 4 * N; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(4 * N);
        e(j) = 1.0;
        F.col(j) = pack_spectral(F_apply(unpack_coefficients(e), N));
    }
    return F;
}

Eigen::MatrixXd jacobian(const CoefficientPair& u, int N, const QuadGrid& quad,
                         const OdeOptions& opts) {
    if (N < 1) throw UsageError("jacobian: need N >= 1");
    // Basis coefficient responses for each Fourier coordinate.
    std::vector<CoefficientPair> basis(4 * N);
    for (int j = 0; j < 4 * N; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(4 * N);
        e(j) = 1.0;
        basis[j] = unpack_coefficients(e);
    }
    Eigen::MatrixXd J(4 * N, 4 * N);
    for (int n = -N; n <= N; ++n) {
        if (n == 0) continue;
        GradientPair gc = grad_mu(u, n, quad.t, opts);
        GradientPair gs = grad_hs(u, n, quad.t, opts);
        for (int j = 0; j < 4 * N; ++j) {
            J(hc_row(n), j) = pair_with(gc, quad, basis[j]);
            J(hc_row(n) + 1, j) = pair_with(gs, quad, basis[j]);
        }
    }
    return J;
}

InversionReport invert(const SpectralData& data, const InvertOptions& opts) {
    int N = data.N;
    InversionReport rep;
    CoefficientPair u = F_inverse(data);

    for (int k = 0; k < opts.max_iters; ++k) {
        SpectralData h = forward(u, N, opts.ode);
        SpectralData r = h - data;
        double res = r.norm();
        rep.residual_history.push_back(res);
        if (res <= opts.tol) {
            rep.converged = true;
            break;
        }
        // Divergence guard: three consecutive residual increases.
        std::size_t m = rep.residual_history.size();
        if (m >= 4 && rep.residual_history[m - 1] > rep.residual_history[m - 2] &&
            rep.residual_history[m - 2] > rep.residual_history[m - 3] &&
            rep.residual_history[m - 3] > rep.residual_history[m - 4])
            break;

        CoefficientPair step;
        if (opts.mode == InvertMode::quasi) {
            step = F_inverse(r);
        } else {
            Eigen::MatrixXd J = jacobian(u, N, opts.quad, opts.ode);
            step = unpack_coefficients(J.fullPivLu().solve(pack_spectral(r)).eval());
        }

        // Damp the step by halving while it would leave the ball (never below
        // the current norm, so an iterate that starts outside cannot deadlock).
        double cap = std::max(opts.ball_radius, u.norm1());
        double factor = 1.0;
        CoefficientPair next = u.plus_scaled(step, -factor);
        if (next.norm1() > cap) {
            ++rep.ball_violations;
            for (int d = 0; d < 30 && next.norm1() > cap; ++d) {
                factor *= 0.5;
                next = u.plus_scaled(step, -factor);
            }
        }
        u = next;
        rep.iterations = k + 1;
    }
    rep.final_u = u;
    return rep;
}

} // namespace bsq
