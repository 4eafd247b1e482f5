#include "bsq/quadrature.hpp"

#include <array>

#include "bsq/types.hpp"

namespace bsq {
namespace {

// Gauss-Legendre nodes (positive half) and weights on [-1, 1].
struct GLRule {
    std::vector<double> x, w;
};

GLRule gl_rule(int order) {
    switch (order) {
    case 4:
        return {{0.33998104358485626480266575910324, 0.86113631159405257522394648889281},
                {0.65214515486254614262693605077800, 0.34785484513745385737306394922200}};
    case 8:
        return {{0.18343464249564980493947614236018, 0.52553240991632898581773904918925,
                 0.79666647741362673959155393647583, 0.96028985649753623168356086856947},
                {0.36268378337836198296515044927720, 0.31370664587788728733796220198660,
                 0.22238103445337447054435599442624, 0.10122853629037625915253135430996}};
    default:
        throw UsageError("gauss_panels: supported orders are 4 and 8");
    }
}

} // namespace

QuadGrid QuadGrid::uniform_open(int n) {
    if (n < 1) throw UsageError("uniform_open: need at least one node");
    QuadGrid g;
    g.t.resize(n);
    g.w.assign(n, 1.0 / n);
    for (int k = 0; k < n; ++k) g.t[k] = (k + 0.5) / n;
    return g;
}

QuadGrid QuadGrid::gauss_panels(int panels, int order) {
    if (panels < 1) throw UsageError("gauss_panels: need at least one panel");
    GLRule r = gl_rule(order);
    QuadGrid g;
    double h = 1.0 / panels;
    for (int pnl = 0; pnl < panels; ++pnl) {
        double mid = (pnl + 0.5) * h;
        for (std::size_t j = 0; j < r.x.size(); ++j) {
            // Symmetric pair of nodes around the panel midpoint.
            g.t.push_back(mid - 0.5 * h * r.x[j]);
            g.w.push_back(0.5 * h * r.w[j]);
            g.t.push_back(mid + 0.5 * h * r.x[j]);
            g.w.push_back(0.5 * h * r.w[j]);
        }
    }
    return g;
}

double integrate(const QuadGrid& g, const std::vector<double>& f) {
    if (f.size() != g.t.size())
        throw UsageError("integrate: sample count does not match quadrature grid");
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) s += g.w[k] * f[k];
    return s;
}

} // namespace bsq
