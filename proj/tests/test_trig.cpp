#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <bsq/trig.hpp>
#include <bsq/types.hpp>

using namespace bsq;

TEST_CASE("evaluation and derivative") {
    TrigSeries f({1.5, 0.0, -0.25}, {0.0, 2.0, 0.0});
    for (double x : {0.0, 0.13, 0.5, 0.77, 1.0}) {
        double expect = 1.5 * std::cos(2 * pi * x) - 0.25 * std::cos(6 * pi * x) +
                        2.0 * std::sin(4 * pi * x);
        CHECK(f(x) == doctest::Approx(expect).epsilon(1e-14));
    }
    TrigSeries d = f.derivative();
    double h = 1e-6;
    for (double x : {0.1, 0.4, 0.9}) {
        double fd = (f(x + h) - f(x - h)) / (2 * h);
        CHECK(d(x) == doctest::Approx(fd).epsilon(1e-7));
    }
    CHECK(f(0.0) == doctest::Approx(f(1.0)).epsilon(1e-15)); // 1-periodic
}

TEST_CASE("signed fourier transforms") {
    // f = a_2 cos + b_2 sin; hat f_{c,n} = a/2, hat f_{s,n} = sign(n) b/2.
    TrigSeries f = TrigSeries::cosine(2, 0.8);
    TrigSeries g = TrigSeries::sine(2, -0.6);
    CHECK(f.fourier_cos(2) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(f.fourier_cos(-2) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(f.fourier_sin(2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g.fourier_sin(2) == doctest::Approx(-0.3).epsilon(1e-15));
    CHECK(g.fourier_sin(-2) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(g.fourier_cos(1) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("parseval norm") {
    TrigSeries f({0.3, -1.2}, {0.5, 0.0});
    double expect = std::sqrt((0.3 * 0.3 + 1.2 * 1.2 + 0.5 * 0.5) / 2.0);
    CHECK(f.norm_l2() == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("reflection and star involutions") {
    CoefficientPair u{TrigSeries({0.2, 0.1}, {-0.4, 0.3}),
                      TrigSeries({-0.1, 0.6}, {0.2, -0.5})};
    CoefficientPair r = u.reflect();
    for (double x : {0.0, 0.21, 0.68}) {
        CHECK(r.p(x) == doctest::Approx(u.p(1.0 - x)).epsilon(1e-14));
        CHECK(r.q(x) == doctest::Approx(u.q(1.0 - x)).epsilon(1e-14));
    }
    CoefficientPair s = u.star();
    CHECK(s.p(0.3) == doctest::Approx(u.p(0.3)).epsilon(1e-15));
    CHECK(s.q(0.3) == doctest::Approx(-u.q(0.3)).epsilon(1e-15));
    // star_reflect is an involution.
    CoefficientPair sr = u.star_reflect().star_reflect();
    CHECK(sr.p(0.41) == doctest::Approx(u.p(0.41)).epsilon(1e-14));
    CHECK(sr.q(0.41) == doctest::Approx(u.q(0.41)).epsilon(1e-14));
}

TEST_CASE("norm1 uses the derivative of p") {
    CoefficientPair u{TrigSeries::cosine(3, 0.2), TrigSeries::sine(1, 0.7)};
    double expect = std::sqrt((6 * pi * 0.2) * (6 * pi * 0.2) / 2.0 + 0.7 * 0.7 / 2.0);
    CHECK(u.norm1() == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("random_in_ball hits the radius exactly and is deterministic") {
    CoefficientPair a = random_in_ball(0.05, 8, 42);
    CoefficientPair b = random_in_ball(0.05, 8, 42);
    CHECK(a.norm1() == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(a.p(0.37) == doctest::Approx(b.p(0.37)).epsilon(1e-16));
    CHECK(a.modes() == 8);
    CoefficientPair c = random_in_ball(0.05, 8, 43);
    CHECK(a.p(0.37) != c.p(0.37));
}
