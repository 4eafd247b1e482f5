#pragma once

#include <vector>

#include "bsq/ode.hpp"
#include "bsq/trig.hpp"
#include "bsq/types.hpp"

namespace bsq {

// Characteristic function of the three-point problem,
//   Delta(lambda) = det [ y_2(1) y_3(1) ; y_2(2) y_3(2) ],
// evaluated through the identity Delta = M12 Mt13 + M13 Mt23 with
// M = Phi(1), Mt = Phi~(1); all integrations stay on [0, 1], so the
// exponentially growing modes never cancel.
struct DeltaValue {
    cd value = 0.0;
    cd dot = 0.0; // d/d lambda, zero unless requested
};
DeltaValue delta_with_dot(const CoefficientPair& u, cd lambda,
                          const OdeOptions& opts = {});
cd delta(const CoefficientPair& u, cd lambda, const OdeOptions& opts = {});
cd delta_dot(const CoefficientPair& u, cd lambda, const OdeOptions& opts = {});

// Literal 2x2 determinant over [0, 2] (diagnostic; loses precision for
// large |lambda| and is only used to validate the identity at moderate size).
cd delta_determinant_form(const CoefficientPair& u, cd lambda,
                          const OdeOptions& opts = {});

// Transposed characteristic function Delta~ = Mt12 M13 + Mt13 M23.
cd transposed_delta(const CoefficientPair& u, cd lambda, const OdeOptions& opts = {});

struct EigenvalueRecord {
    int n = 0;
    double mu = 0.0;
    double residual = 0.0; // |Delta(mu)| relative to its derivative scale
    int newton_iters = 0;
    double disc_margin = 0.0; // 1 - |z(mu) - 2 nu n| in the local coordinate
};

// Three-point eigenvalue mu_n near iota_n = (2 nu n)^3 (signed n != 0) by a
// Newton iteration in the local cube-root coordinate.
EigenvalueRecord eigenvalue(const CoefficientPair& u, int n,
                            const OdeOptions& opts = {});
// mu~_n(u) = -mu_{-n}(u_*).
EigenvalueRecord transposed_eigenvalue(const CoefficientPair& u, int n,
                                       const OdeOptions& opts = {});
std::vector<EigenvalueRecord> eigenvalue_sweep(const CoefficientPair& u, int N,
                                               const OdeOptions& opts = {});

} // namespace bsq
