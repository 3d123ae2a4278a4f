#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperising/exact.hpp"
#include "hyperising/hypergraph.hpp"
#include "hyperising/roots.hpp"

namespace hyperising {

// Closed range of Ising edge activities for which every zero of the
// univariate partition function lies on the unit circle.
struct LYRange {
  std::size_t k = 2;
  double lo = -1.0;
  double hi = 1.0;
  bool closed = true;

  // Absolute slack absorbs rounding in the cosine-based upper endpoint
  // (e.g. k = 4 evaluates to 0.49999999999999983 rather than 1/2).
  bool contains(double beta, double slack = 1e-12) const {
    return closed ? (beta >= lo - slack && beta <= hi + slack) : (beta > lo && beta < hi);
  }
};

LYRange ising_ly_range(std::size_t k);

// Extremes of the real trace of products of k-1 points from the closed disk
// of radius 1 about 1: the real values reached are exactly [-tau0, tau1].
std::pair<double, double> tau_bounds(std::size_t k);

struct SuzukiFisher {
  double plus_weight = 0.0;  // |phi(+,...,+)|
  double quarter_total = 0.0;  // (1/4) sum_sigma |phi(sigma)|
  bool symmetric = false;
  bool pass = false;
};

SuzukiFisher suzuki_fisher(const Hyperedge& e);
inline bool suzuki_fisher_check(const Hyperedge& e) { return suzuki_fisher(e).pass; }

struct EdgeVerdict {
  EdgeId edge = 0;
  std::size_t size = 0;
  bool ising = true;
  bool pass = false;
  // Ising: the range the activity was tested against.
  std::optional<LYRange> range;
  // Spin tables: the Suzuki-Fisher quantities.
  std::optional<SuzukiFisher> suzuki_fisher;
};

struct InstanceVerdict {
  std::vector<EdgeVerdict> edges;
  bool all_pass = true;
};

// Per-edge check: Ising edges against ising_ly_range(|e|), spin tables
// against the Suzuki-Fisher condition.
InstanceVerdict check_instance(const Hypergraph& g);

struct CircleReport {
  ZeroReport zeros;
  bool in_range = false;
  double tolerance = 0.0;
  // Set only when the instance is in range: max circle deviation <= tolerance.
  std::optional<bool> pass;
};

CircleReport verify_zeros_on_circle(const Hypergraph& g, double tol = 1e-6,
                                    double residual_tol = 1e-8, const OracleOptions& opt = {});

struct SignChange {
  double at_zero = 0.0;  // P(0)
  double at_one = 0.0;   // P(1)
};

struct TightWitness {
  std::size_t k = 0;        // requested edge size
  std::size_t k_used = 0;   // size of the single hyperedge actually built
  double beta = 0.0;
  int regime = 0;           // 1: beta > 1, 2: below the range, 3: between range and 1
  CoefficientVector polynomial;
  Complex witness_root;
  double deviation = 0.0;   // ||root| - 1|
  double residual = 0.0;    // |P(root)|
  std::optional<SignChange> sign_change;
};

// Coefficients of beta (1+z)^k + (1-beta)(1+z^k).
CoefficientVector single_edge_polynomial(std::size_t k, double beta);

// A single hyperedge whose partition function has a zero off the unit
// circle. Throws Refusal when beta lies inside the range or equals 1.
TightWitness tight_example(std::size_t k, double beta, double tol = 1e-6);

struct CosProduct {
  double closed_form = 0.0;
  std::optional<double> numeric;
};

// max prod_{i<=k} cos(theta_i) s.t. |theta_i| <= pi/2, sum theta_i = m pi.
// With verify set, also maximizes numerically (projected gradient ascent
// from the symmetric point plus random restarts) and throws
// NonConvergence if the two differ by more than 1e-6.
CosProduct cos_product_max(std::size_t k, long m, bool verify = false, std::uint64_t seed = 1,
                           std::size_t restarts = 100);

}  // namespace hyperising
