#include "hyperising/leeyang.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperising/error.hpp"

namespace hyperising {

LYRange ising_ly_range(std::size_t k) {
  if (k < 2) throw InvalidInput("ising_ly_range: k must be at least 2");
  if (k == 2) return {2, -1.0, 1.0, true};
  const double half_power = std::ldexp(1.0, static_cast<int>(k) - 1);  // 2^(k-1)
  const double c = std::cos(std::numbers::pi / static_cast<double>(k - 1));
  const double lo = -1.0 / (half_power - 1.0);
  const double hi = 1.0 / (half_power * std::pow(c, static_cast<double>(k - 1)) + 1.0);
  return {k, lo, hi, true};
}

std::pair<double, double> tau_bounds(std::size_t k) {
  if (k < 3) throw InvalidInput("tau_bounds: k must be at least 3");
  const double half_power = std::ldexp(1.0, static_cast<int>(k) - 1);
  const double tau0 = half_power * std::pow(std::cos(std::numbers::pi / static_cast<double>(k - 1)),
                                            static_cast<double>(k - 1));
  return {tau0, half_power};
}

SuzukiFisher suzuki_fisher(const Hyperedge& e) {
  SuzukiFisher sf;
  const std::size_t k = e.size();
  const std::uint32_t full = (1u << k) - 1u;
  double total = 0.0;
  for (std::uint32_t m = 0; m <= full; ++m) total += std::abs(e.phi(m));
  sf.plus_weight = std::abs(e.phi(full));
  sf.quarter_total = total / 4.0;
  sf.symmetric = e.activity.symmetric(k);
  // Relative slack so boundary activities such as 1/3 are not lost to rounding.
  sf.pass = sf.symmetric && sf.plus_weight >= sf.quarter_total * (1.0 - 1e-12);
  return sf;
}

InstanceVerdict check_instance(const Hypergraph& g) {
  InstanceVerdict out;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto& e = g.edge(id);
    EdgeVerdict v;
    v.edge = id;
    v.size = e.size();
    v.ising = e.activity.is_ising();
    if (v.ising) {
      v.range = ising_ly_range(e.size());
      v.pass = v.range->contains(e.activity.beta());
    } else {
      v.suzuki_fisher = suzuki_fisher(e);
      v.pass = v.suzuki_fisher->pass;
    }
    out.all_pass = out.all_pass && v.pass;
    out.edges.push_back(std::move(v));
  }
  return out;
}

CircleReport verify_zeros_on_circle(const Hypergraph& g, double tol, double residual_tol,
                                    const OracleOptions& opt) {
  CircleReport rep;
  rep.tolerance = tol;
  rep.in_range = check_instance(g).all_pass;
  rep.zeros = zero_report(exact_coefficients(g, opt), residual_tol);
  if (rep.in_range) rep.pass = rep.zeros.max_circle_deviation <= tol;
  return rep;
}

CoefficientVector single_edge_polynomial(std::size_t k, double beta) {
  CoefficientVector c(k + 1);
  double binom = 1.0;
  for (std::size_t i = 0; i <= k; ++i) {
    c[i] = beta * binom;
    binom = binom * static_cast<double>(k - i) / static_cast<double>(i + 1);
  }
  c[0] += 1.0 - beta;
  c[k] += 1.0 - beta;
  return c;
}

namespace {

double eval_real(const CoefficientVector& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->real();
  return acc;
}

}  // namespace

TightWitness tight_example(std::size_t k, double beta, double tol) {
  const LYRange range = ising_ly_range(k);
  if (range.contains(beta)) throw Refusal("tight_example: beta lies inside the Lee-Yang range");
  if (beta == 1.0) throw Refusal("tight_example: beta = 1 gives (1+z)^k, all zeros at -1");

  TightWitness w;
  w.k = k;
  w.beta = beta;
  if (beta > 1.0) {
    w.regime = 1;
    w.k_used = 2;
  } else if (beta < range.lo) {
    w.regime = 2;
    w.k_used = k;
  } else {
    w.regime = 3;
    w.k_used = k;
  }
  w.polynomial = single_edge_polynomial(w.k_used, beta);

  if (w.regime == 2) {
    // P(0) = 1 > 0 > P(1) = 2 beta (2^(k-1) - 1) + 2: a real zero in (0, 1).
    SignChange sc{eval_real(w.polynomial, 0.0), eval_real(w.polynomial, 1.0)};
    if (!(sc.at_zero > 0.0 && sc.at_one < 0.0))
      throw NonConvergence("tight_example: expected sign change on [0, 1] not found");
    w.sign_change = sc;
    double a = 0.0, b = 1.0;
    for (int it = 0; it < 200 && b - a > 1e-17; ++it) {
      const double mid = 0.5 * (a + b);
      if (eval_real(w.polynomial, mid) > 0.0) a = mid; else b = mid;
    }
    w.witness_root = 0.5 * (a + b);
  } else {
    const auto roots = polynomial_roots(w.polynomial);
    w.witness_root = *std::max_element(roots.begin(), roots.end(), [](Complex x, Complex y) {
      return std::abs(std::abs(x) - 1.0) < std::abs(std::abs(y) - 1.0);
    });
  }
  w.deviation = std::abs(std::abs(w.witness_root) - 1.0);
  w.residual = std::abs(evaluate_polynomial(w.polynomial, w.witness_root));
  if (!(w.deviation > 10.0 * tol))
    throw NonConvergence("tight_example: no zero found off the unit circle beyond 10*tol");
  return w;
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Euclidean projection onto {sum = target, lo <= x_i <= hi} by bisection on
// the shift.
void project(std::vector<double>& x, double target, double lo, double hi) {
  double a = -4.0 * kHalfPi * static_cast<double>(x.size()) - 10.0;
  double b = -a;
  auto total = [&](double shift) {
    double s = 0.0;
    for (double v : x) s += std::clamp(v - shift, lo, hi);
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (total(mid) > target) a = mid; else b = mid;
  }
  const double shift = 0.5 * (a + b);
  for (double& v : x) v = std::clamp(v - shift, lo, hi);
}

double log_objective(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += std::log(std::cos(v));
  return s;
}

double ascend(std::vector<double> x, double target, double lo, double hi) {
  project(x, target, lo, hi);
  double f = log_objective(x);
  double step = 0.1;
  for (int it = 0; it < 20000 && step > 1e-16; ++it) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + step * (-std::tan(x[i]));
    project(y, target, lo, hi);
    const double fy = log_objective(y);
    if (fy > f) {
      const double gain = fy - f;
      x = std::move(y);
      f = fy;
      step *= 1.5;
      if (gain < 1e-16) break;
    } else {
      step *= 0.5;
    }
  }
  return std::exp(f);
}

}  // namespace

CosProduct cos_product_max(std::size_t k, long m, bool verify, std::uint64_t seed, std::size_t restarts) {
  if (k == 0) throw InvalidInput("cos_product_max: k must be positive");
  if (2 * static_cast<std::size_t>(std::labs(m)) > k)
    throw InvalidInput("cos_product_max: constraint infeasible (2|m| > k)");
  CosProduct out;
  const double target = static_cast<double>(m) * std::numbers::pi;
  out.closed_form = std::pow(std::cos(target / static_cast<double>(k)), static_cast<double>(k));
  if (!verify) return out;

  if (2 * static_cast<std::size_t>(std::labs(m)) == k) {
    // Feasible set is the single point theta_i = sign(m) pi/2.
    out.numeric = std::pow(std::cos(m > 0 ? kHalfPi : -kHalfPi), static_cast<double>(k));
  } else {
    // Stay strictly inside the box so log cos is finite.
    const double lo = -kHalfPi + 1e-9, hi = kHalfPi - 1e-9;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    double best = ascend(std::vector<double>(k, target / static_cast<double>(k)), target, lo, hi);
    for (std::size_t r = 0; r < restarts; ++r) {
      std::vector<double> x(k);
      for (double& v : x) v = dist(rng);
      best = std::max(best, ascend(std::move(x), target, lo, hi));
    }
    out.numeric = best;
  }
  if (std::abs(*out.numeric - out.closed_form) > 1e-6)
    throw NonConvergence("cos_product_max: numerical maximum disagrees with the closed form");
  return out;
}

}  // namespace hyperising
