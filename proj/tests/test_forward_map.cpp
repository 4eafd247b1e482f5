#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <bsq/forward_map.hpp>
#include <bsq/oracle.hpp>
#include <bsq/spectrum.hpp>

using namespace bsq;
namespace orc = bsq::oracle;

namespace {
const CoefficientPair zero{TrigSeries::zero(1), TrigSeries::zero(1)};
const double s3 = std::sqrt(3.0);
} // namespace

TEST_CASE("spectral data container") {
    SpectralData d = SpectralData::zeros(3);
    REQUIRE(d.entries.size() == 6);
    CHECK(d.entries.front().n == -3);
    CHECK(d.entries.back().n == 3);
    d.at(-2).h_c = 1.5;
    CHECK(d.at(-2).h_c == 1.5);
    CHECK(d.norm() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK_THROWS_AS((void)d.at(0), UsageError);
    CHECK_THROWS_AS((void)d.at(4), UsageError);
}

TEST_CASE("forward map vanishes at u = 0") {
    SpectralData h = forward(zero, 4);
    CHECK(h.norm() < 1e-8);
}

TEST_CASE("h_cn is the eigenvalue shift") {
    CoefficientPair u = random_in_ball(0.05, 4, 13);
    for (int n : {2, -3}) {
        double hc = h_cn(u, n);
        CHECK(hc == doctest::Approx(eigenvalue(u, n).mu - orc::mu0(n)).epsilon(1e-12));
    }
}

TEST_CASE("F slots on elementary coefficients") {
    // u with p = a cos(2 pi m x): p'_cm-coordinate 0, p'_sm = -(pi m) a ...
    // assert through the closed formulas
    //   F_c(n) = -q_cn - p'_sn/sqrt(3) + p'_cn/3 - q_sn/sqrt(3),
    //   F_s(n) =  q_cn + p'_sn/sqrt(3) - p'_cn   + sqrt(3) q_sn,
    // in normalized signed-harmonic coordinates.
    int m = 2;
    double a = 0.3;
    CoefficientPair up{TrigSeries::cosine(m, a), TrigSeries::zero(m)};
    SpectralData h = F_apply(up, 4);
    // p' = -2 pi m a sin: normalized p'_s(+-m) = -+ pi m a, p'_c = 0.
    double ps = -pi * m * a;
    CHECK(h.at(m).h_c == doctest::Approx(-ps / s3).epsilon(1e-13));
    CHECK(h.at(m).h_s == doctest::Approx(ps / s3).epsilon(1e-13));
    CHECK(h.at(-m).h_c == doctest::Approx(ps / s3).epsilon(1e-13));
    CHECK(h.at(-m).h_s == doctest::Approx(-ps / s3).epsilon(1e-13));
    // Other modes are untouched: F is block diagonal.
    CHECK(std::abs(h.at(1).h_c) < 1e-15);
    CHECK(std::abs(h.at(3).h_s) < 1e-15);

    CoefficientPair uq{TrigSeries::zero(m), TrigSeries::sine(m, a)};
    h = F_apply(uq, 4);
    double qs = a / 2.0; // normalized q_s(+m); q_s(-m) = -qs
    CHECK(h.at(m).h_c == doctest::Approx(-qs / s3).epsilon(1e-13));
    CHECK(h.at(m).h_s == doctest::Approx(s3 * qs).epsilon(1e-13));
    CHECK(h.at(-m).h_c == doctest::Approx(qs / s3).epsilon(1e-13));
    CHECK(h.at(-m).h_s == doctest::Approx(-s3 * qs).epsilon(1e-13));
}

TEST_CASE("F_inverse inverts F_apply") {
    CoefficientPair u = random_in_ball(0.4, 5, 17);
    SpectralData h = F_apply(u, 5);
    CoefficientPair v = F_inverse(h);
    CoefficientPair diff = v.plus_scaled(u, -1.0);
    CHECK(diff.norm() < 1e-12 * u.norm());
    // And the other way round.
    SpectralData h2 = F_apply(v, 5);
    CHECK((h2 - h).norm() < 1e-12 * h.norm());
}

TEST_CASE("forward map linearizes to F: quadratic residual") {
    CoefficientPair base = random_in_ball(1.0, 3, 21);
    double e1 = 0.04, e2 = 0.08;
    double r1 = (forward(base.scaled(e1), 3) - F_apply(base.scaled(e1), 3)).norm();
    double r2 = (forward(base.scaled(e2), 3) - F_apply(base.scaled(e2), 3)).norm();
    // Quadratic scaling: residual ratio close to (e2/e1)^2 = 4.
    CHECK(r2 / r1 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("norming constant symmetry h_{s,-n}(u) = -h_{sn}(u_*^-)") {
    CoefficientPair u = random_in_ball(0.05, 4, 25);
    for (int n : {1, 2}) {
        double a = h_sn(u, -n);
        double b = h_sn(u.star_reflect(), n);
        CHECK(std::abs(a + b) < 1e-8 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("h_sn vanishes at u = 0") {
    for (int n : {1, -1, 3}) CHECK(std::abs(h_sn(zero, n)) < 1e-8);
}
