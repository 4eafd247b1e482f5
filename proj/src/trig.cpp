#include "bsq/trig.hpp"

#include <cmath>
#include <random>

#include "bsq/types.hpp"

namespace bsq {

TrigSeries::TrigSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a_(std::move(cos_coeffs)), b_(std::move(sin_coeffs)) {
    if (a_.size() != b_.size())
        throw UsageError("TrigSeries: cosine and sine coefficient lists must have equal length");
}

TrigSeries TrigSeries::zero(int modes) {
    return TrigSeries(std::vector<double>(modes, 0.0), std::vector<double>(modes, 0.0));
}

TrigSeries TrigSeries::cosine(int m, double amplitude) {
    TrigSeries f = zero(m);
    f.a_[m - 1] = amplitude;
    return f;
}

TrigSeries TrigSeries::sine(int m, double amplitude) {
    TrigSeries f = zero(m);
    f.b_[m - 1] = amplitude;
    return f;
}

double TrigSeries::cos_coeff(int m) const {
    return (m >= 1 && m <= modes()) ? a_[m - 1] : 0.0;
}

double TrigSeries::sin_coeff(int m) const {
    return (m >= 1 && m <= modes()) ? b_[m - 1] : 0.0;
}

double TrigSeries::operator()(double x) const {
    // Recurrence-free evaluation; mode counts are small (N <= a few dozen).
    double s = 0.0;
    for (int m = 1; m <= modes(); ++m) {
        double arg = 2.0 * pi * m * x;
        s += a_[m - 1] * std::cos(arg) + b_[m - 1] * std::sin(arg);
    }
    return s;
}

TrigSeries TrigSeries::derivative() const {
    TrigSeries d = zero(modes());
    for (int m = 1; m <= modes(); ++m) {
        d.a_[m - 1] = 2.0 * pi * m * b_[m - 1];
        d.b_[m - 1] = -2.0 * pi * m * a_[m - 1];
    }
    return d;
}

double TrigSeries::fourier_cos(int n) const {
    if (n == 0) throw UsageError("fourier_cos: harmonic index must be nonzero");
    return 0.5 * cos_coeff(std::abs(n));
}

double TrigSeries::fourier_sin(int n) const {
    if (n == 0) throw UsageError("fourier_sin: harmonic index must be nonzero");
    double v = 0.5 * sin_coeff(std::abs(n));
    return n > 0 ? v : -v;
}

double TrigSeries::norm_l2() const {
    double s = 0.0;
    for (int m = 1; m <= modes(); ++m)
        s += a_[m - 1] * a_[m - 1] + b_[m - 1] * b_[m - 1];
    return std::sqrt(0.5 * s);
}

TrigSeries TrigSeries::reflected() const {
    TrigSeries r = *this;
    for (double& b : r.b_) b = -b;
    return r;
}

TrigSeries TrigSeries::negated() const {
    TrigSeries r = *this;
    for (double& a : r.a_) a = -a;
    for (double& b : r.b_) b = -b;
    return r;
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& g) {
    if (g.modes() > modes()) {
        a_.resize(g.modes(), 0.0);
        b_.resize(g.modes(), 0.0);
    }
    for (int m = 1; m <= g.modes(); ++m) {
        a_[m - 1] += g.a_[m - 1];
        b_[m - 1] += g.b_[m - 1];
    }
    return *this;
}

TrigSeries& TrigSeries::operator*=(double s) {
    for (double& a : a_) a *= s;
    for (double& b : b_) b *= s;
    return *this;
}

double CoefficientPair::norm() const {
    return std::hypot(p.norm_l2(), q.norm_l2());
}

double CoefficientPair::norm1() const {
    return std::hypot(p.derivative().norm_l2(), q.norm_l2());
}

CoefficientPair CoefficientPair::star() const { return {p, q.negated()}; }

CoefficientPair CoefficientPair::reflect() const { return {p.reflected(), q.reflected()}; }

CoefficientPair CoefficientPair::star_reflect() const {
    return {p.reflected(), q.reflected().negated()};
}

CoefficientPair CoefficientPair::scaled(double s) const {
    CoefficientPair v = *this;
    v.p *= s;
    v.q *= s;
    return v;
}

CoefficientPair CoefficientPair::plus_scaled(const CoefficientPair& v, double s) const {
    CoefficientPair w = *this;
    TrigSeries vp = v.p, vq = v.q;
    vp *= s;
    vq *= s;
    w.p += vp;
    w.q += vq;
    return w;
}

CoefficientPair random_in_ball(double radius, int N, std::uint64_t seed) {
    if (N < 1) throw UsageError("random_in_ball: need at least one mode");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> pa(N), pb(N), qa(N), qb(N);
    for (int m = 0; m < N; ++m) {
        pa[m] = gauss(rng);
        pb[m] = gauss(rng);
        qa[m] = gauss(rng);
        qb[m] = gauss(rng);
    }
    CoefficientPair u{TrigSeries(pa, pb), TrigSeries(qa, qb)};
    double s = u.norm1();
    if (s == 0.0) throw NumericError("random_in_ball: degenerate draw");
    return u.scaled(radius / s);
}

} // namespace bsq
