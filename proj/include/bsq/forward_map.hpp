#pragma once

#include <vector>

#include "bsq/ode.hpp"
#include "bsq/trig.hpp"
#include "bsq/types.hpp"

namespace bsq {

// One mode of the spectral data: the eigenvalue shift h_cn = mu_n - iota_n
// and the norming constant h_sn.
struct SpectralEntry {
    int n = 0;
    double h_c = 0.0;
    double h_s = 0.0;
};

// Spectral data for modes n = -N..-1, 1..N (in increasing n).
struct SpectralData {
    int N = 0;
    std::vector<SpectralEntry> entries;

    static SpectralData zeros(int N);
    const SpectralEntry& at(int n) const;
    SpectralEntry& at(int n);
    double norm() const; // l2 norm over all stored components
};

SpectralData operator-(const SpectralData& a, const SpectralData& b);

double h_cn(const CoefficientPair& u, int n, const OdeOptions& opts = {});
double h_sn(const CoefficientPair& u, int n, const OdeOptions& opts = {});

// Forward spectral map h(u) for modes up to N.
SpectralData forward(const CoefficientPair& u, int N, const OdeOptions& opts = {});

// The linearization F = d h(0): an explicit linear map of the Fourier
// coefficients of (p', q), and its inverse (F is a linear isomorphism between
// the coefficient space and the spectral-data space).
SpectralData F_apply(const CoefficientPair& u, int N);
CoefficientPair F_inverse(const SpectralData& data);

} // namespace bsq
