#pragma once

#include <string>
#include <vector>

#include "bsq/forward_map.hpp"
#include "bsq/gradients.hpp"
#include "bsq/inverse.hpp"
#include "bsq/spectrum.hpp"
#include "bsq/trig.hpp"

namespace bsq {

// Coefficient JSON:
//   {"N": int, "p_cos": [...], "p_sin": [...], "q_cos": [...], "q_sin": [...]}
CoefficientPair read_coefficients(const std::string& path);
void write_coefficients(const std::string& path, const CoefficientPair& u);

// Spectral-data JSON:
//   {"N": int, "entries": [{"n": int, "h_c": real, "h_s": real}, ...]}
SpectralData read_spectral_data(const std::string& path);
void write_spectral_data(const std::string& path, const SpectralData& d);

void write_eigenvalue_csv(const std::string& path,
                          const std::vector<EigenvalueRecord>& records);
void write_convergence_csv(const std::string& path, const InversionReport& report);
void write_gradient_csv(const std::string& path, const GradientPair& g);

} // namespace bsq
