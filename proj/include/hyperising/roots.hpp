#pragma once

#include <span>
#include <vector>

#include "hyperising/exact.hpp"

namespace hyperising {

// |c_deg| below this fraction of max|c_j| is treated as zero.
inline constexpr double kLeadingStripThreshold = 1e-12;

struct ZeroReport {
  CoefficientVector coefficients;
  std::vector<Complex> roots;
  std::vector<double> residuals;  // |Z(r_i)|
  double max_circle_deviation = 0.0;
};

// Roots of sum_i c_i x^i, sorted by (|r|, arg r). Companion-matrix
// eigenvalues in extended precision, then Newton-polished. Throws
// NonConvergence if the eigen solver fails or a residual exceeds
// tol * max|c_j|.
std::vector<Complex> polynomial_roots(std::span<const Complex> c, double tol = 1e-8);

ZeroReport zero_report(CoefficientVector c, double residual_tol = 1e-8);

}  // namespace hyperising
