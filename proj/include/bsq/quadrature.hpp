#pragma once

#include <vector>

namespace bsq {

// Quadrature rule on [0, 1]: nodes t with weights w.
struct QuadGrid {
    std::vector<double> t;
    std::vector<double> w;

    // Open uniform rule with nodes (k + 1/2)/n, k = 0..n-1, equal weights 1/n.
    // Spectrally accurate for smooth 1-periodic integrands; default n = 257.
    static QuadGrid uniform_open(int n = 257);

    // Composite Gauss-Legendre rule, used as an independent cross-check.
    static QuadGrid gauss_panels(int panels, int order = 8);

    int size() const { return static_cast<int>(t.size()); }
};

double integrate(const QuadGrid& g, const std::vector<double>& f);

} // namespace bsq
