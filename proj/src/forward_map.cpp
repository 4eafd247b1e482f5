#include "bsq/forward_map.hpp"

#include <cmath>

#include "bsq/monodromy.hpp"
#include "bsq/spectrum.hpp"

namespace bsq {
namespace {

const double sqrt3 = std::sqrt(3.0);

int entry_index(int n, int N) {
    if (n == 0 || std::abs(n) > N)
        throw UsageError("SpectralData: mode index out of range");
    return (n < 0) ? n + N : N + n - 1;
}

} // namespace

SpectralData SpectralData::zeros(int N) {
    if (N < 1) throw UsageError("SpectralData: need N >= 1");
    SpectralData d;
    d.N = N;
    d.entries.resize(2 * N);
    for (int n = -N; n <= N; ++n) {
        if (n == 0) continue;
        d.entries[entry_index(n, N)].n = n;
    }
    return d;
}

const SpectralEntry& SpectralData::at(int n) const { return entries[entry_index(n, N)]; }
SpectralEntry& SpectralData::at(int n) { return entries[entry_index(n, N)]; }

double SpectralData::norm() const {
    double s = 0.0;
    for (const auto& e : entries) s += e.h_c * e.h_c + e.h_s * e.h_s;
    return std::sqrt(s);
}

SpectralData operator-(const SpectralData& a, const SpectralData& b) {
    if (a.N != b.N) throw UsageError("SpectralData: mode counts differ");
    SpectralData d = a;
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
        d.entries[i].h_c -= b.entries[i].h_c;
        d.entries[i].h_s -= b.entries[i].h_s;
    }
    return d;
}

double h_cn(const CoefficientPair& u, int n, const OdeOptions& opts) {
    if (n == 0) throw UsageError("h_cn: index must be nonzero");
    double c = 2.0 * nu * std::abs(n);
    double iota = (n > 0 ? 1.0 : -1.0) * c * c * c;
    return eigenvalue(u, n, opts).mu - iota;
}

double h_sn(const CoefficientPair& u, int n, const OdeOptions& opts) {
    if (n == 0) throw UsageError("h_sn: index must be nonzero");
    if (n < 0) return -h_sn(u.star_reflect(), -n, opts);

    double mt = transposed_eigenvalue(u, n, opts).mu;
    Mat3 M = fundamental_matrix(u, cd(mt), {1.0}, opts)[0].value;
    Mat3 Mt = transposed_fundamental_matrix(u, cd(mt), {1.0}, opts)[0].value;
    cd t3 = tau3_from_traces(M.trace(), Mt.trace(),
                             SpectralParameter::from_lambda(cd(mt)).z);
    if (t3.real() <= 0.0)
        throw NumericError("h_sn: tau3(mu~_n) is not positive");
    double sgn = (n % 2 == 0) ? -1.0 : 1.0; // (-1)^{n+1}
    double ratio = sgn * M(0, 2).real() / Mt(0, 2).real();
    double arg = ratio / std::sqrt(t3.real());
    if (!(arg > 0.0))
        throw NumericError("h_sn: norming-constant argument is not positive");
    return 8.0 * pi * pi * n * n * std::log(arg);
}

SpectralData forward(const CoefficientPair& u, int N, const OdeOptions& opts) {
    SpectralData d = SpectralData::zeros(N);
    for (int n = -N; n <= N; ++n) {
        if (n == 0) continue;
        d.at(n).h_c = h_cn(u, n, opts);
        d.at(n).h_s = h_sn(u, n, opts);
    }
    return d;
}

SpectralData F_apply(const CoefficientPair& u, int N) {
    SpectralData d = SpectralData::zeros(N);
    TrigSeries dp = u.p.derivative();
    for (int n = -N; n <= N; ++n) {
        if (n == 0) continue;
        double pc = dp.fourier_cos(n), ps = dp.fourier_sin(n);
        double qc = u.q.fourier_cos(n), qs = u.q.fourier_sin(n);
        d.at(n).h_c = -qc - ps / sqrt3 + pc / 3.0 - qs / sqrt3;
        d.at(n).h_s = qc + ps / sqrt3 - pc + sqrt3 * qs;
    }
    return d;
}

CoefficientPair F_inverse(const SpectralData& data) {
    int N = data.N;
    std::vector<double> pa(N), pb(N), qa(N), qb(N);
    // F is block diagonal over |n|: the pair of modes (n, -n) couples only the
    // four Fourier components (p'_c, p'_s, q_c, q_s) of that harmonic.
    Eigen::Matrix4d B;
    // Rows: h_c(+m), h_s(+m), h_c(-m), h_s(-m); the matrix is m-independent.
    B << 1.0 / 3.0, -1.0 / sqrt3, -1.0, -1.0 / sqrt3,
        -1.0, 1.0 / sqrt3, 1.0, sqrt3,
        1.0 / 3.0, 1.0 / sqrt3, -1.0, 1.0 / sqrt3,
        -1.0, -1.0 / sqrt3, 1.0, -sqrt3;
    Eigen::FullPivLU<Eigen::Matrix4d> lu(B);
    if (!lu.isInvertible()) throw NumericError("F_inverse: singular block");
    for (int m = 1; m <= N; ++m) {
        Eigen::Vector4d rhs(data.at(m).h_c, data.at(m).h_s, data.at(-m).h_c,
                            data.at(-m).h_s);
        Eigen::Vector4d x = lu.solve(rhs); // (p'_cm, p'_sm, q_cm, q_sm)
        pa[m - 1] = -x(1) / (pi * m);
        pb[m - 1] = x(0) / (pi * m);
        qa[m - 1] = 2.0 * x(2);
        qb[m - 1] = 2.0 * x(3);
    }
    return {TrigSeries(pa, pb), TrigSeries(qa, qb)};
}

} // namespace bsq
