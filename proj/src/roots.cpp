#include "hyperising/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "hyperising/error.hpp"

namespace hyperising {

namespace {

using LComplex = std::complex<long double>;

LComplex horner(const std::vector<LComplex>& c, LComplex x, LComplex* deriv = nullptr) {
  LComplex p{}, d{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + p;
    p = p * x + *it;
  }
  if (deriv) *deriv = d;
  return p;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> c, double tol) {
  double scale = 0.0;
  for (const auto& x : c) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) throw InvalidInput("polynomial_roots: zero polynomial");

  std::size_t deg = c.size() - 1;
  while (deg > 0 && std::abs(c[deg]) < kLeadingStripThreshold * scale) --deg;
  if (deg == 0) return {};

  std::vector<LComplex> lc(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) lc[i] = LComplex(c[i].real(), c[i].imag());

  using Matrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix companion = Matrix::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0L;
  for (std::size_t i = 0; i < deg; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -lc[i] / lc[deg];

  Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NonConvergence("polynomial_roots: eigenvalue iteration failed");

  std::vector<Complex> roots;
  roots.reserve(deg);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    LComplex z = solver.eigenvalues()[i];
    long double best = std::abs(horner(lc, z));
    for (int it = 0; it < 8 && best > 0; ++it) {
      LComplex d;
      const LComplex p = horner(lc, z, &d);
      if (d == LComplex{}) break;
      const LComplex cand = z - p / d;
      const long double r = std::abs(horner(lc, cand));
      if (!(r < best)) break;
      z = cand;
      best = r;
    }
    const Complex zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    if (!(static_cast<double>(best) <= tol * scale))
      throw NonConvergence("polynomial_roots: residual " + std::to_string(static_cast<double>(best)) +
                           " above tolerance");
    roots.push_back(zd);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

ZeroReport zero_report(CoefficientVector c, double residual_tol) {
  ZeroReport rep;
  rep.roots = polynomial_roots(c, residual_tol);
  for (const auto& r : rep.roots) {
    rep.residuals.push_back(std::abs(evaluate_polynomial(c, r)));
    rep.max_circle_deviation = std::max(rep.max_circle_deviation, std::abs(std::abs(r) - 1.0));
  }
  rep.coefficients = std::move(c);
  return rep;
}

}  // namespace hyperising
