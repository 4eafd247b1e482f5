#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <bsq/monodromy.hpp>
#include <bsq/oracle.hpp>

using namespace bsq;
namespace orc = bsq::oracle;

namespace {
CoefficientPair test_u() { return random_in_ball(0.06, 4, 11); }
} // namespace

TEST_CASE("unperturbed traces match the multiplier sums") {
    CoefficientPair zero{TrigSeries::zero(1), TrigSeries::zero(1)};
    for (cd lam : {cd(60.0, 0.0), cd(-200.0, 30.0), cd(15.0, -4.0)}) {
        Traces tr = traces(zero, lam);
        auto m = orc::multipliers0(lam);
        cd T0 = m[0] + m[1] + m[2];
        cd Tt0 = 1.0 / m[0] + 1.0 / m[1] + 1.0 / m[2];
        CHECK(std::abs(tr.T - T0) < 1e-11 * std::abs(T0));
        CHECK(std::abs(tr.Tt - Tt0) < 1e-11 * std::abs(Tt0));
    }
}

TEST_CASE("multiplier product is 1 and the characteristic polynomial holds") {
    CoefficientPair u = test_u();
    for (cd lam : {cd(120.0, 0.0), cd(-45.0, 0.0), cd(300.0, 60.0)}) {
        Traces tr = traces(u, lam);
        auto m = multipliers(u, lam);
        CHECK(std::abs(m.tau1 * m.tau2 * m.tau3 - cd(1.0)) < 1e-10);
        for (cd t : {m.tau1, m.tau2, m.tau3}) {
            cd poly = ((t - tr.T) * t + tr.Tt) * t - 1.0;
            CHECK(std::abs(poly) < 1e-9 * std::max(1.0, std::abs(tr.T) * std::abs(t) * std::abs(t)));
        }
    }
}

TEST_CASE("tau3 and its derivative at iota_n, u = 0") {
    CoefficientPair zero{TrigSeries::zero(1), TrigSeries::zero(1)};
    for (int n = 1; n <= 6; ++n) {
        cd lam(orc::mu0(n), 0.0);
        cd t3 = tau3(zero, lam);
        CHECK(std::abs(t3 - cd(orc::tau3_0(n))) < 1e-7 * orc::tau3_0(n));
        cd t3dot = tau3_lambda_derivative(zero, lam);
        CHECK(std::abs(t3dot - cd(orc::tau3_dot_0(n))) < 1e-7 * orc::tau3_dot_0(n));
    }
}

TEST_CASE("tau3 throws outside the domain D") {
    CoefficientPair zero{TrigSeries::zero(1), TrigSeries::zero(1)};
    CHECK_THROWS_AS((void)tau3(zero, cd(-orc::mu0(2), 0.0)), UsageError);
    CHECK_THROWS_AS((void)tau3(zero, cd(-0.5, 0.0)), UsageError);
    CHECK_NOTHROW((void)tau3(zero, cd(50.0, 0.0)));
}

TEST_CASE("trace lambda-derivatives against finite differences") {
    CoefficientPair u = test_u();
    cd lam(80.0, 0.0);
    OdeOptions o;
    o.with_lambda_derivative = true;
    Traces tr = traces(u, lam, o);
    double h = 1e-4;
    Traces p = traces(u, lam + h), m = traces(u, lam - h);
    CHECK(std::abs(tr.T_dot - (p.T - m.T) / (2.0 * h)) < 1e-6 * std::abs(tr.T_dot));
    CHECK(std::abs(tr.Tt_dot - (p.Tt - m.Tt) / (2.0 * h)) < 1e-6 * std::abs(tr.Tt_dot));
}
