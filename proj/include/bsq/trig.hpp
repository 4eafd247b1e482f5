#pragma once

#include <cstdint>
#include <vector>

namespace bsq {

// Real zero-mean 1-periodic trigonometric polynomial
//   f(x) = sum_{m=1}^{N} a_m cos(2 pi m x) + b_m sin(2 pi m x).
class TrigSeries {
public:
    TrigSeries() = default;
    TrigSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static TrigSeries zero(int modes);
    static TrigSeries cosine(int m, double amplitude); // a_m = amplitude
    static TrigSeries sine(int m, double amplitude);   // b_m = amplitude

    int modes() const { return static_cast<int>(a_.size()); }
    double cos_coeff(int m) const; // a_m for m >= 1, zero beyond range
    double sin_coeff(int m) const;
    const std::vector<double>& cos_coeffs() const { return a_; }
    const std::vector<double>& sin_coeffs() const { return b_; }

    double operator()(double x) const;
    TrigSeries derivative() const;

    // Normalized transforms over signed harmonics:
    //   fourier_cos(n) = int_0^1 f(t) cos(2 pi n t) dt,
    //   fourier_sin(n) = int_0^1 f(t) sin(2 pi n t) dt,  n in Z \ {0}.
    double fourier_cos(int n) const;
    double fourier_sin(int n) const;

    double norm_l2() const;       // sqrt(int_0^1 f^2) = sqrt(sum (a_m^2+b_m^2)/2)
    TrigSeries reflected() const; // f(1-x): b_m -> -b_m
    TrigSeries negated() const;

    TrigSeries& operator+=(const TrigSeries& g);
    TrigSeries& operator*=(double s);

private:
    std::vector<double> a_, b_;
};

// Coefficient pair u = (p, q) of the operator.
struct CoefficientPair {
    TrigSeries p, q;

    double norm() const;  // sqrt(||p||^2 + ||q||^2)
    double norm1() const; // ||u||_1 = sqrt(||p'||^2 + ||q||^2)

    CoefficientPair star() const;         // u_* = (p, -q)
    CoefficientPair reflect() const;      // u^-(x) = u(1-x)
    CoefficientPair star_reflect() const; // (p(1-x), -q(1-x))
    CoefficientPair scaled(double s) const;
    CoefficientPair plus_scaled(const CoefficientPair& v, double s) const;

    int modes() const { return std::max(p.modes(), q.modes()); }
};

// Deterministic random pair with N modes each in p and q, rescaled so that
// ||u||_1 equals radius exactly.
CoefficientPair random_in_ball(double radius, int N, std::uint64_t seed);

} // namespace bsq
