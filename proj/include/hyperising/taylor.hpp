#pragma once

#include <optional>

#include "hyperising/coefficients.hpp"
#include "hyperising/exact.hpp"
#include "hyperising/hypergraph.hpp"

namespace hyperising {

// Smallest m with n |lambda|^(m+1) / ((m+1)(1-|lambda|)) <= eps/4 guaranteed,
// i.e. m >= (log(4n/eps) + log(1/(1-|lambda|))) / log(1/|lambda|).
std::size_t choose_m(std::size_t n, double eps, double abs_lambda);

// n |lambda|^(m+1) / ((m+1)(1-|lambda|)).
double truncation_bound(std::size_t n, double abs_lambda, std::size_t m);

// f_m(lambda) = -sum_{j=1..m} p_j lambda^j / j.
Complex truncated_log_Z(const PowerSums& p, Complex lambda, std::size_t m);

// Independent route to f_m: solves the triangular system relating the
// derivatives of Z and log Z at 0, starting from the coefficients of Z
// (missing entries count as zero), and sums the first m Taylor terms.
Complex triangular_check(std::span<const Complex> c, Complex lambda, std::size_t m);

struct TaylorOptions {
  std::size_t threads = 1;
  std::size_t memory_cap = std::size_t{1} << 26;
  std::size_t m_cap = 24;               // bound on the insect DP depth min(m, n)
  std::optional<std::size_t> m_override;  // use this order instead of choose_m
  double circle_exclusion = 1e-12;      // ||lambda| - 1| at or below this is refused
};

struct TaylorApproximation {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t dp_depth = 0;
  Complex lambda;
  Complex lambda_effective;
  bool inverted = false;
  Complex f_m;        // truncated log Z at lambda_effective (conjugated activities if inverted)
  Complex log_z_hat;  // f_m, plus n log(lambda) when inverted
  Complex z_hat;
  double bound = 0.0;
  double epsilon = 0.0;
  bool guaranteed = false;  // every edge inside its Lee-Yang range
  PowerSums power_sums;
  ElementarySymmetric elementary;
  std::size_t family_size = 0;
  std::vector<std::size_t> family_counts;
  double enumerate_seconds = 0.0;
  double dp_seconds = 0.0;
};

// exp(f_m) approximation of Z(lambda). For |lambda| > 1 uses
// Z(lambda) = lambda^n Z_conj(1/lambda), which needs symmetric activities.
TaylorApproximation approximate_Z(const Hypergraph& g, Complex lambda, double eps,
                                  const TaylorOptions& opt = {});

}  // namespace hyperising
