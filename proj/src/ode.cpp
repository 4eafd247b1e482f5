#include "bsq/ode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bsq {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// Coefficient matrix A(x) of the first-order system in the quasi-derivative
// frame; optionally for the transposed equation and with a shifted argument.
struct SystemMatrix {
    const TrigSeries* p;
    const TrigSeries* q;
    cd lam_eff;
    double qsign = 1.0;  // -1 for the transposed system
    double shift = 0.0;

    Mat3 operator()(double x) const {
        double pv = (*p)(x + shift);
        double qv = qsign * (*q)(x + shift);
        Mat3 A = Mat3::Zero();
        A(0, 1) = 1.0;
        A(1, 2) = 1.0;
        A(1, 0) = -pv;
        A(2, 1) = -pv;
        A(2, 0) = lam_eff - qv;
        return A;
    }
};

double step_cap(cd lambda) {
    double zabs = std::pow(std::abs(lambda), 1.0 / 3.0);
    return std::min(0.05, 1.0 / std::max(1.0, zabs));
}

// Adaptive embedded RK integrator; State is a fixed-size Eigen complex matrix,
// Rhs maps (x, State) to State.
template <class State, class Rhs>
void dopri5(State& y, double& x, double target, double hmax, const OdeOptions& opts,
            const Rhs& rhs) {
    if (x == target) return;
    double dir = (target > x) ? 1.0 : -1.0;
    double h = dir * std::min(hmax, std::abs(target - x));
    State k1 = rhs(x, y);
    int rejected_in_a_row = 0;
    for (int iter = 0;; ++iter) {
        if (iter > 2000000) throw NumericError("dopri5: step count exceeded");
        if (dir * (x - target) >= 0.0) break;
        bool last = false;
        if (dir * (x + h - target) >= 0.0) {
            h = target - x;
            last = true;
        }
        if (std::abs(h) < 1e-15 * (1.0 + std::abs(x)))
            throw NumericError("dopri5: step size underflow");

        State k2 = rhs(x + c2 * h, (y + h * (a21 * k1)).eval());
        State k3 = rhs(x + c3 * h, (y + h * (a31 * k1 + a32 * k2)).eval());
        State k4 = rhs(x + c4 * h, (y + h * (a41 * k1 + a42 * k2 + a43 * k3)).eval());
        State k5 = rhs(x + c5 * h,
                       (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)).eval());
        State k6 = rhs(x + h, (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 +
                                        a65 * k5))
                                  .eval());
        State y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        State k7 = rhs(x + h, y5);
        State err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double scale = opts.atol + opts.rtol * std::max(y.norm(), y5.norm());
        double errn = err.norm() / scale;
        if (errn <= 1.0) {
            x = last ? target : x + h;
            y = y5;
            k1 = k7; // first-same-as-last
            double fac = (errn > 0.0) ? 0.9 * std::pow(errn, -0.2) : 5.0;
            h *= std::clamp(fac, 0.2, 5.0);
            if (std::abs(h) > hmax) h = dir * hmax;
            rejected_in_a_row = 0;
        } else {
            double fac = 0.9 * std::pow(errn, -0.2);
            h *= std::clamp(fac, 0.1, 0.9);
            if (++rejected_in_a_row > 60)
                throw NumericError("dopri5: repeated step rejection");
        }
    }
}

// Order in which to visit requested abscissae from an anchor point: indices of
// points on one side of the anchor, sorted by increasing distance from it.
std::vector<std::size_t> side_order(const std::vector<double>& xs, double anchor,
                                    bool above) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (above ? xs[i] > anchor : xs[i] < anchor) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return std::abs(xs[i] - anchor) < std::abs(xs[j] - anchor);
    });
    return idx;
}

template <class State, class Rhs, class Record>
void sweep(const std::vector<double>& xs, double anchor, const State& init, double hmax,
           const OdeOptions& opts, const Rhs& rhs, const Record& record) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == anchor) record(i, init);
    for (bool above : {false, true}) {
        auto idx = side_order(xs, anchor, above);
        if (idx.empty()) continue;
        State y = init;
        double x = anchor;
        for (std::size_t i : idx) {
            dopri5(y, x, xs[i], hmax, opts, rhs);
            record(i, y);
        }
    }
}

using Mat36 = Eigen::Matrix<cd, 3, 6>;
using Row3 = Eigen::Matrix<cd, 1, 3>;

std::vector<FundamentalMatrix>
fundamental_family(const CoefficientPair& u, cd lambda, bool transposed,
                   const std::vector<double>& x_points, const OdeOptions& opts) {
    SystemMatrix sys{&u.p, &u.q, transposed ? -lambda : lambda,
                     transposed ? -1.0 : 1.0, 0.0};
    double fsign = transposed ? -1.0 : 1.0; // sign of dA/d lambda
    double hmax = step_cap(lambda);
    std::vector<FundamentalMatrix> out(x_points.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i].x = x_points[i];

    if (opts.with_lambda_derivative) {
        Mat36 init = Mat36::Zero();
        init.leftCols<3>() = Mat3::Identity();
        auto rhs = [&](double x, const Mat36& s) -> Mat36 {
            Mat3 A = sys(x);
            Mat36 d;
            d.leftCols<3>() = A * s.leftCols<3>();
            d.rightCols<3>() = A * s.rightCols<3>();
            d.row(2).tail<3>() += fsign * s.row(0).head<3>();
            return d;
        };
        sweep(x_points, 0.0, init, hmax, opts, rhs, [&](std::size_t i, const Mat36& s) {
            out[i].value = s.leftCols<3>();
            out[i].lambda_derivative = s.rightCols<3>();
        });
    } else {
        Mat3 init = Mat3::Identity();
        auto rhs = [&](double x, const Mat3& s) -> Mat3 { return sys(x) * s; };
        sweep(x_points, 0.0, init, hmax, opts, rhs,
              [&](std::size_t i, const Mat3& s) { out[i].value = s; });
    }
    return out;
}

} // namespace

std::vector<FundamentalMatrix>
fundamental_matrix(const CoefficientPair& u, cd lambda,
                   const std::vector<double>& x_points, const OdeOptions& opts) {
    return fundamental_family(u, lambda, false, x_points, opts);
}

std::vector<FundamentalMatrix>
transposed_fundamental_matrix(const CoefficientPair& u, cd lambda,
                              const std::vector<double>& x_points,
                              const OdeOptions& opts) {
    return fundamental_family(u, lambda, true, x_points, opts);
}

Mat3 shifted_fundamental_matrix(const CoefficientPair& u, cd lambda, double x, double t,
                                bool transposed, const OdeOptions& opts) {
    SystemMatrix sys{&u.p, &u.q, transposed ? -lambda : lambda,
                     transposed ? -1.0 : 1.0, t};
    Mat3 y = Mat3::Identity();
    double pos = 0.0;
    auto rhs = [&](double s, const Mat3& m) -> Mat3 { return sys(s) * m; };
    dopri5(y, pos, x, step_cap(lambda), opts, rhs);
    return y;
}

std::vector<CauchySample>
integrate_cauchy(const CoefficientPair& u, cd lambda, bool transposed, double x0,
                 const Vec3& data, const std::vector<double>& x_points,
                 const OdeOptions& opts) {
    SystemMatrix sys{&u.p, &u.q, transposed ? -lambda : lambda,
                     transposed ? -1.0 : 1.0, 0.0};
    std::vector<CauchySample> out(x_points.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i].x = x_points[i];
    auto rhs = [&](double x, const Vec3& v) -> Vec3 { return sys(x) * v; };
    sweep(x_points, x0, data, step_cap(lambda), opts, rhs,
          [&](std::size_t i, const Vec3& v) { out[i].y = v; });
    return out;
}

std::vector<CauchySample>
adjoint_row(const CoefficientPair& u, cd lambda, bool transposed,
            const std::vector<double>& t_points, const OdeOptions& opts) {
    SystemMatrix sys{&u.p, &u.q, transposed ? -lambda : lambda,
                     transposed ? -1.0 : 1.0, 0.0};
    std::vector<CauchySample> out(t_points.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i].x = t_points[i];
    Row3 init = Row3::Zero();
    init(0, 0) = 1.0;
    auto rhs = [&](double x, const Row3& r) -> Row3 { return -(r * sys(x)); };
    sweep(t_points, 1.0, init, step_cap(lambda), opts, rhs,
          [&](std::size_t i, const Row3& r) { out[i].y = r.transpose(); });
    return out;
}

} // namespace bsq
