#pragma once

#include "bsq/ode.hpp"
#include "bsq/trig.hpp"
#include "bsq/types.hpp"

namespace bsq {

// Monodromy matrix M = Phi(1, lambda, u) and its transposed counterpart.
Mat3 monodromy(const CoefficientPair& u, cd lambda, const OdeOptions& opts = {});
Mat3 transposed_monodromy(const CoefficientPair& u, cd lambda,
                          const OdeOptions& opts = {});

struct Traces {
    cd T = 0.0;      // tr M = tau1 + tau2 + tau3
    cd Tt = 0.0;     // tr M~ = 1/tau1 + 1/tau2 + 1/tau3
    cd T_dot = 0.0;  // d/d lambda (zero unless requested)
    cd Tt_dot = 0.0;
};
Traces traces(const CoefficientPair& u, cd lambda, const OdeOptions& opts = {});

struct MultiplierTriple {
    cd tau1, tau2, tau3;
};

// Roots of tau^3 - T tau^2 + Tt tau - 1 = 0.  tau3 is the branch that equals
// e^z at u = 0; tau1 is the root closer to e^{omega z}.  The small pair is
// reconstructed from tau3 via the elementary-symmetric relations, which stays
// accurate when tau3 dominates.
MultiplierTriple multipliers_from_traces(cd T, cd Tt, cd z);
MultiplierTriple multipliers(const CoefficientPair& u, cd lambda,
                             const OdeOptions& opts = {});

// tau3(lambda, u) for lambda in the domain D (throws UsageError outside, and
// NumericError if the dominant branch is ambiguous at this lambda).
cd tau3(const CoefficientPair& u, cd lambda, const OdeOptions& opts = {});
cd tau3_from_traces(cd T, cd Tt, cd z);

// d tau3 / d lambda through the trace derivatives.
cd tau3_lambda_derivative(const CoefficientPair& u, cd lambda,
                          const OdeOptions& opts = {});
cd tau3_dot_from_traces(const Traces& tr, cd tau3);

} // namespace bsq
