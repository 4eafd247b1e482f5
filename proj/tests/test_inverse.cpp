#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <bsq/inverse.hpp>

using namespace bsq;

TEST_CASE("packing round trips") {
    CoefficientPair u = random_in_ball(0.3, 4, 9);
    Eigen::VectorXd x = pack_coefficients(u, 4);
    REQUIRE(x.size() == 16);
    CoefficientPair v = unpack_coefficients(x);
    CHECK(v.plus_scaled(u, -1.0).norm() < 1e-14 * u.norm());
}

TEST_CASE("F_matrix is the matrix of F_apply") {
    int N = 3;
    Eigen::MatrixXd F = F_matrix(N);
    CoefficientPair u = random_in_ball(0.7, N, 15);
    Eigen::VectorXd lhs = F * pack_coefficients(u, N);
    Eigen::VectorXd rhs = pack_spectral(F_apply(u, N));
    CHECK((lhs - rhs).norm() < 1e-12 * rhs.norm());
    // F is block diagonal with invertible 4x4 blocks.
    Eigen::FullPivLU<Eigen::MatrixXd> lu(F);
    CHECK(lu.isInvertible());
}

TEST_CASE("jacobian at u = 0 equals F_matrix") {
    int N = 2;
    CoefficientPair zero{TrigSeries::zero(N), TrigSeries::zero(N)};
    QuadGrid quad = QuadGrid::gauss_panels(16, 8);
    Eigen::MatrixXd J = jacobian(zero, N, quad);
    Eigen::MatrixXd F = F_matrix(N);
    CHECK((J - F).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("quasi-Newton round trip at N = 4") {
    CoefficientPair star = random_in_ball(0.05, 4, 27);
    InvertOptions o;
    o.tol = 5e-9;
    SpectralData h = forward(star, 4, o.ode);
    InversionReport r = invert(h, o);
    CHECK(r.converged);
    CHECK(r.iterations <= 30);
    CHECK(r.final_u.plus_scaled(star, -1.0).norm() < 1e-6 * star.norm());
    REQUIRE(r.residual_history.size() >= 2);
    for (std::size_t i = 1; i < r.residual_history.size(); ++i)
        CHECK(r.residual_history[i] <= 0.5 * r.residual_history[i - 1]);
}

TEST_CASE("invert validates its input") {
    SpectralData bad = SpectralData::zeros(2);
    bad.at(1).h_c = 1e6; // far outside any localization disc
    InvertOptions o;
    o.max_iters = 3;
    CHECK_THROWS((void)invert(bad, o));
}

TEST_CASE("inverting exact zero data returns zero") {
    SpectralData h = SpectralData::zeros(3);
    InvertOptions o;
    o.tol = 5e-9;
    InversionReport r = invert(h, o);
    CHECK(r.converged);
    CHECK(r.final_u.norm1() < 1e-7);
}
