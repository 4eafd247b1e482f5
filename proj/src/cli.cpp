#include "bsq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <vector>

#include "bsq/forward_map.hpp"
#include "bsq/gradients.hpp"
#include "bsq/inverse.hpp"
#include "bsq/io.hpp"
#include "bsq/monodromy.hpp"
#include "bsq/oracle.hpp"
#include "bsq/eigenfunctions.hpp"
#include "bsq/spectrum.hpp"

namespace bsq {
namespace {

OdeOptions ode_options(const RunConfig& c) {
    OdeOptions o;
    o.rtol = c.rtol;
    return o;
}

void subtract_mean(std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    for (double& x : v) x -= m;
}

// Relative deviation between two samples of a gradient component, compared
// modulo additive constants (the natural identification for zero-mean pairings).
double rel_dev_mod_const(std::vector<double> a, std::vector<double> b) {
    subtract_mean(a);
    subtract_mean(b);
    double scale = 0.0, dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        scale = std::max(scale, std::abs(b[i]));
        dev = std::max(dev, std::abs(a[i] - b[i]));
    }
    return dev / std::max(scale, 1e-300);
}

int run_forward(const RunConfig& c) {
    if (c.input_path.empty() || c.output_path.empty())
        throw UsageError("forward: --input and --output are required");
    CoefficientPair u = read_coefficients(c.input_path);
    OdeOptions o = ode_options(c);
    SpectralData d = forward(u, c.modes, o);
    write_spectral_data(c.output_path, d);
    if (!c.report_path.empty())
        write_eigenvalue_csv(c.report_path, eigenvalue_sweep(u, c.modes, o));
    std::cout << std::setprecision(17);
    for (const auto& e : d.entries)
        std::cout << "n=" << e.n << " h_c=" << e.h_c << " h_s=" << e.h_s << '\n';
    return 0;
}

int run_invert(const RunConfig& c) {
    if (c.input_path.empty() || c.output_path.empty())
        throw UsageError("invert: --input and --output are required");
    SpectralData d = read_spectral_data(c.input_path);
    InvertOptions opts;
    opts.mode = c.full_newton ? InvertMode::full : InvertMode::quasi;
    opts.tol = c.tol;
    opts.ball_radius = c.ball_radius;
    opts.quad = QuadGrid::uniform_open(c.grid);
    opts.ode = ode_options(c);
    InversionReport rep = invert(d, opts);
    write_coefficients(c.output_path, rep.final_u);
    if (!c.report_path.empty()) write_convergence_csv(c.report_path, rep);
    std::cout << std::setprecision(17) << "converged=" << (rep.converged ? 1 : 0)
              << " iterations=" << rep.iterations
              << " ball_violations=" << rep.ball_violations << " residual="
              << (rep.residual_history.empty() ? 0.0 : rep.residual_history.back())
              << '\n';
    return rep.converged ? 0 : 1;
}

int run_gradcheck(const RunConfig& c) {
    OdeOptions o = ode_options(c);
    CoefficientPair u = random_in_ball(0.05, c.modes, c.seed);
    // Gauss-Legendre panels: several gradients (notably d y3(1)/du) are not
    // periodic in t, where the midpoint rule would lose five digits.
    QuadGrid quad = QuadGrid::gauss_panels(32, 8);
    const std::vector<int> ns = {1, -1, 2, -2, 4, -4};
    double worst = 0.0;
    std::cout << std::setprecision(17);
    std::cout << "quantity,n,direction,analytic,fd,rel_err\n";

    std::vector<CoefficientPair> dirs;
    for (int d = 0; d < 3; ++d)
        dirs.push_back(random_in_ball(1.0, c.modes, c.seed + 1000 + d));

    // Fourth-order central difference via Richardson extrapolation of two
    // second-order stencils; the wider base step keeps subtractive roundoff
    // below the direction-paired signal.
    auto check_at = [&](const char* name, int n, double step, const GradientPair& g,
                        const std::function<double(const CoefficientPair&)>& f) {
        for (std::size_t d = 0; d < dirs.size(); ++d) {
            double analytic = pair_with(g, quad, dirs[d]);
            double fd = (4.0 * fd_directional(f, u, dirs[d], step) -
                         fd_directional(f, u, dirs[d], 2.0 * step)) /
                        3.0;
            double rel = std::abs(analytic - fd) /
                         std::max({std::abs(fd), std::abs(analytic), 1e-300});
            worst = std::max(worst, rel);
            std::cout << name << ',' << n << ',' << d << ',' << analytic << ',' << fd
                      << ',' << rel << '\n';
        }
    };

    for (int n : ns) {
        auto check = [&](const char* name, const GradientPair& g,
                         const std::function<double(const CoefficientPair&)>& f) {
            check_at(name, n, 1e-3, g, f);
        };
        check("mu", grad_mu(u, n, quad.t, o),
              [&](const CoefficientPair& v) { return eigenvalue(v, n, o).mu; });
        check("mu_tilde", grad_mu_tilde(u, n, quad.t, o),
              [&](const CoefficientPair& v) { return transposed_eigenvalue(v, n, o).mu; });
        check("h_c", grad_mu(u, n, quad.t, o),
              [&](const CoefficientPair& v) { return h_cn(v, n, o); });
        check("h_s", grad_hs(u, n, quad.t, o),
              [&](const CoefficientPair& v) { return h_sn(v, n, o); });

        // Trace and multiplier gradients at moderate |lambda|: near iota_n the
        // exponential dichotomy flattens the gradients in t, so zero-mean
        // pairings fall below the reach of any finite-difference oracle.  The
        // pairings are ~1e-8 even here, so these checks run with a tightened
        // integrator tolerance and a wide extrapolated stencil.
        double lt = (n > 0 ? 1.0 : -1.0) * (4.0 + std::abs(n));
        OdeOptions ot = o;
        ot.rtol = std::min(o.rtol, 3e-14);
        auto [gT, gTt] = grad_traces(u, lt, quad.t, ot);
        check_at("T", n, 0.1, gT, [&](const CoefficientPair& v) {
            return monodromy(v, cd(lt), ot).trace().real();
        });
        check_at("T_tilde", n, 0.1, gTt, [&](const CoefficientPair& v) {
            return transposed_monodromy(v, cd(lt), ot).trace().real();
        });
        check_at("tau3", n, 0.1, grad_tau3(u, lt, quad.t, ot),
                 [&](const CoefficientPair& v) { return tau3(v, cd(lt), ot).real(); });
        if (n > 0) {
            // The x = 1 solution values and Delta at fixed lambda = iota_n.
            double lam = oracle::mu0(n);
            check("y3_at_1", grad_y3_at_1(u, lam, quad.t, false, o),
                  [&](const CoefficientPair& v) {
                      return fundamental_matrix(v, cd(lam), {1.0}, o)[0].value(0, 2).real();
                  });
            check("y3t_at_1", grad_y3_at_1(u, lam, quad.t, true, o),
                  [&](const CoefficientPair& v) {
                      return transposed_fundamental_matrix(v, cd(lam), {1.0}, o)[0]
                          .value(0, 2)
                          .real();
                  });
            double mu = eigenvalue(u, n, o).mu;
            check("delta_at_mu", grad_delta(u, mu, quad.t, o),
                  [&](const CoefficientPair& v) { return delta(v, cd(mu), o).real(); });
        }
    }
    std::cout << "max_rel_err=" << worst << " threshold=" << c.tol << '\n';
    return (worst <= c.tol) ? 0 : 1;
}

int run_asymptotics(const RunConfig& c) {
    OdeOptions o = ode_options(c);
    CoefficientPair base = random_in_ball(1.0, c.modes, c.seed);
    const std::vector<double> eps = {0.0125, 0.025, 0.05, 0.1};
    std::vector<double> fitted;
    std::cout << std::setprecision(17);
    for (double e : eps) {
        CoefficientPair u = base.scaled(e);
        SpectralData r = forward(u, c.modes, o) - F_apply(u, c.modes);
        double C = r.norm() / (e * e);
        fitted.push_back(C);
        std::cout << "eps=" << e << " residual=" << r.norm() << " C=" << C << '\n';
        if (e == eps.back()) {
            double Cdecay = 0.0;
            for (const auto& en : r.entries) {
                double rn = std::hypot(en.h_c, en.h_s);
                Cdecay = std::max(Cdecay, std::abs(en.n) * rn / (e * e));
            }
            std::cout << "C_decay=" << Cdecay << '\n';
        }
    }
    // Quadratic-order consistency over the top three epsilons.
    double lo = fitted[1], hi = fitted[1];
    for (std::size_t i = 1; i < fitted.size(); ++i) {
        lo = std::min(lo, fitted[i]);
        hi = std::max(hi, fitted[i]);
    }
    double variation = (hi - lo) / lo;
    std::cout << "C_variation=" << variation << '\n';
    return (variation <= 0.25) ? 0 : 1;
}

int run_oracle(const RunConfig& c) {
    OdeOptions o = ode_options(c);
    CoefficientPair zero{TrigSeries::zero(1), TrigSeries::zero(1)};
    double thr = c.tol;
    double worst = 0.0;
    std::cout << std::setprecision(17);
    auto report = [&](const char* name, double dev) {
        worst = std::max(worst, dev);
        std::cout << name << " max_rel_dev=" << dev << (dev <= thr ? " ok" : " FAIL")
                  << '\n';
    };

    { // Delta against the closed form on a lambda grid.
        double dev = 0.0;
        for (int k = 1; k <= 25; ++k) {
            for (double s : {1.0, -1.0}) {
                cd lam(s * (k * 19.7 + 3.1), (k % 3 == 0) ? 7.5 : 0.0);
                cd a = delta(zero, lam, o), b = oracle::delta0(lam);
                dev = std::max(dev, std::abs(a - b) / std::abs(b));
            }
        }
        report("delta0", dev);
    }
    { // Derivative of Delta and multipliers at iota_n.
        double dev = 0.0, devt = 0.0, devtd = 0.0;
        for (int n = 1; n <= 6; ++n) {
            double lam = oracle::mu0(n);
            double dd = delta_dot(zero, cd(lam), o).real();
            dev = std::max(dev,
                           std::abs(dd - oracle::delta0_dot_at(n)) /
                               std::abs(oracle::delta0_dot_at(n)));
            cd t3 = tau3(zero, cd(lam), o);
            devt = std::max(devt,
                            std::abs(t3 - cd(oracle::tau3_0(n))) / oracle::tau3_0(n));
            cd t3d = tau3_lambda_derivative(zero, cd(lam), o);
            devtd = std::max(devtd, std::abs(t3d - cd(oracle::tau3_dot_0(n))) /
                                        oracle::tau3_dot_0(n));
        }
        report("delta0_dot", dev);
        report("tau3_0", devt);
        report("tau3_dot_0", devtd);
    }
    { // Fundamental-solution values at x = 1 and the eigenvalues themselves.
        double dev = 0.0, deve = 0.0;
        for (int n = 1; n <= 6; ++n) {
            double lam = oracle::mu0(n);
            Mat3 M = fundamental_matrix(zero, cd(lam), {1.0}, o)[0].value;
            Mat3 Mt = transposed_fundamental_matrix(zero, cd(lam), {1.0}, o)[0].value;
            for (int j = 1; j <= 3; ++j) {
                dev = std::max(dev, std::abs(M(0, j - 1) - cd(oracle::y0n_1(j, n))) /
                                        std::abs(oracle::y0n_1(j, n)));
                dev = std::max(dev, std::abs(Mt(0, j - 1) - cd(oracle::y0tn_1(j, n))) /
                                        std::abs(oracle::y0tn_1(j, n)));
            }
            for (int sgn : {1, -1}) {
                EigenvalueRecord r = eigenvalue(zero, sgn * n, o);
                deve = std::max(deve, std::abs(r.mu - oracle::mu0(sgn * n)) /
                                          std::abs(oracle::mu0(sgn * n)));
            }
        }
        report("y0_at_1", dev);
        report("mu0", deve);
    }
    { // Eigenfunctions at iota_n.
        std::vector<double> grid;
        for (int k = 0; k <= 32; ++k) grid.push_back(2.0 * k / 32.0);
        double dev = 0.0;
        for (int n = 1; n <= 2; ++n) {
            double mu = oracle::mu0(n);
            SampledFunction sp = psi(zero, mu, grid, o);
            SampledFunction sc = chi(zero, mu, grid, o);
            SampledFunction sf = phi(zero, mu, grid, o);
            double scale_p = 0.0, scale_c = 0.0, scale_f = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                scale_p = std::max(scale_p, std::abs(oracle::psi0(n, grid[i])));
                scale_c = std::max(scale_c, std::abs(oracle::chi0(n, grid[i])));
                scale_f = std::max(scale_f, std::abs(oracle::phi0(n, grid[i])));
            }
            for (std::size_t i = 0; i < grid.size(); ++i) {
                dev = std::max(dev, std::abs(sp.values[i] - oracle::psi0(n, grid[i])) /
                                        scale_p);
                dev = std::max(dev, std::abs(sc.values[i] - oracle::chi0(n, grid[i])) /
                                        scale_c);
                dev = std::max(dev, std::abs(sf.values[i] - oracle::phi0(n, grid[i])) /
                                        scale_f);
            }
        }
        report("eigenfunctions0", dev);
    }
    { // Zero-point gradients, modulo additive constants, 65-node grid.
        std::vector<double> grid;
        for (int k = 0; k < 65; ++k) grid.push_back((k + 0.5) / 65.0);
        double devm = 0.0, devh = 0.0;
        for (int n = 1; n <= 6; ++n) {
            for (int sgn : {1, -1}) {
                int m = sgn * n;
                GradientPair gm = grad_mu(zero, m, grid, o);
                GradientPair gh = grad_hs(zero, m, grid, o);
                std::vector<double> mp(grid.size()), mq(grid.size()), hp(grid.size()),
                    hq(grid.size());
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    auto a = oracle::grad_mu0(m, grid[i]);
                    auto b = oracle::grad_hs0(m, grid[i]);
                    mp[i] = a.first;
                    mq[i] = a.second;
                    hp[i] = b.first;
                    hq[i] = b.second;
                }
                devm = std::max({devm, rel_dev_mod_const(gm.d_p, mp),
                                 rel_dev_mod_const(gm.d_q, mq)});
                devh = std::max({devh, rel_dev_mod_const(gh.d_p, hp),
                                 rel_dev_mod_const(gh.d_q, hq)});
            }
        }
        report("grad_mu0", devm);
        report("grad_hs0", devh);
    }
    std::cout << "max_dev=" << worst << " threshold=" << thr << '\n';
    return (worst <= thr) ? 0 : 1;
}

} // namespace

int run(const RunConfig& config) {
    try {
        switch (config.command) {
        case Command::forward: return run_forward(config);
        case Command::invert: return run_invert(config);
        case Command::gradcheck: return run_gradcheck(config);
        case Command::asymptotics: return run_asymptotics(config);
        case Command::oracle: return run_oracle(config);
        }
        throw UsageError("unknown command");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace bsq
