#include "hyperising/taylor.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "hyperising/error.hpp"
#include "hyperising/leeyang.hpp"

namespace hyperising {

std::size_t choose_m(std::size_t n, double eps, double abs_lambda) {
  if (!(abs_lambda < 1.0)) throw Refusal("choose_m: |lambda| must be below 1");
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidInput("choose_m: eps must lie in (0, 1]");
  if (abs_lambda <= 0.0 || n == 0) return 1;
  const double x = (std::log(4.0 * static_cast<double>(n) / eps) + std::log(1.0 / (1.0 - abs_lambda))) /
                   std::log(1.0 / abs_lambda);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(x)));
}

double truncation_bound(std::size_t n, double abs_lambda, std::size_t m) {
  const double mp1 = static_cast<double>(m + 1);
  return static_cast<double>(n) * std::pow(abs_lambda, mp1) / (mp1 * (1.0 - abs_lambda));
}

Complex truncated_log_Z(const PowerSums& p, Complex lambda, std::size_t m) {
  if (m > p.order()) throw InvalidInput("truncated_log_Z: power sums available only to order " +
                                        std::to_string(p.order()));
  Complex acc{};
  Complex power{1.0};
  for (std::size_t j = 1; j <= m; ++j) {
    power *= lambda;
    acc -= p.p[j] * power / static_cast<double>(j);
  }
  return acc;
}

Complex triangular_check(std::span<const Complex> c, Complex lambda, std::size_t m) {
  if (c.empty() || c[0] != Complex{1.0}) throw InvalidInput("triangular_check: c_0 must be 1");
  auto coeff = [&](std::size_t i) { return i < c.size() ? c[i] : Complex{}; };
  // Z^(j)(0) = sum_{i<j} C(j-1, i) Z^(i)(0) f^(j-i)(0). With Z^(i)(0) = i! c_i
  // and g_l = f^(l)(0) / l!, dividing by (j-1)! gives
  // j c_j = sum_{i<j} (j-i) c_i g_{j-i}, solved for g_j row by row.
  std::vector<Complex> g(m + 1, Complex{});
  for (std::size_t j = 1; j <= m; ++j) {
    Complex rhs = static_cast<double>(j) * coeff(j);
    for (std::size_t i = 1; i < j; ++i) rhs -= static_cast<double>(j - i) * coeff(i) * g[j - i];
    g[j] = rhs / (static_cast<double>(j) * coeff(0));
  }
  Complex acc{};
  Complex power{1.0};
  for (std::size_t j = 1; j <= m; ++j) {
    power *= lambda;
    acc += g[j] * power;
  }
  return acc;
}

TaylorApproximation approximate_Z(const Hypergraph& g, Complex lambda, double eps,
                                  const TaylorOptions& opt) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("approximate_Z: eps must lie in (0, 1)");
  const double r = std::abs(lambda);
  if (!std::isfinite(r)) throw InvalidInput("approximate_Z: lambda must be finite");
  if (std::abs(r - 1.0) <= opt.circle_exclusion)
    throw Refusal("approximate_Z: |lambda| = 1 is excluded (zeros are dense on the unit circle)");

  TaylorApproximation out;
  out.n = g.num_vertices();
  out.lambda = lambda;
  out.epsilon = eps;
  out.inverted = r > 1.0;
  out.guaranteed = check_instance(g).all_pass;

  const Hypergraph* host = &g;
  Hypergraph conj;
  if (out.inverted) {
    if (!g.all_symmetric())
      throw InvalidInput("approximate_Z: |lambda| > 1 requires symmetric activities phi(s) = conj phi(-s)");
    conj = g.conjugated();
    host = &conj;
    out.lambda_effective = 1.0 / lambda;
  } else {
    out.lambda_effective = lambda;
  }
  const double r_eff = std::abs(out.lambda_effective);

  out.m = opt.m_override ? *opt.m_override : choose_m(out.n, std::min(eps, 1.0), r_eff);
  if (out.m < 1) throw InvalidInput("approximate_Z: order must be at least 1");
  out.dp_depth = std::min(out.m, out.n);
  if (out.dp_depth > opt.m_cap)
    throw CapExceeded("approximate_Z: truncation order m = " + std::to_string(out.m) +
                      " needs insect DP depth " + std::to_string(out.dp_depth) +
                      " above the cap of " + std::to_string(opt.m_cap));
  out.bound = truncation_bound(out.n, r_eff, out.m);

  const auto t0 = std::chrono::steady_clock::now();
  PowerSumRun run = power_sums_to_order(*host, out.m, {opt.threads, opt.memory_cap});
  const auto t1 = std::chrono::steady_clock::now();
  out.dp_seconds = std::chrono::duration<double>(t1 - t0).count();
  out.enumerate_seconds = run.enumerate_seconds;
  out.dp_seconds -= run.enumerate_seconds;
  out.family_size = run.family_size;
  out.family_counts = run.family_counts;

  out.f_m = truncated_log_Z(run.p, out.lambda_effective, out.m);
  out.log_z_hat = out.f_m;
  if (out.inverted) out.log_z_hat += static_cast<double>(out.n) * std::log(lambda);
  out.z_hat = std::exp(out.log_z_hat);
  out.power_sums = std::move(run.p);
  out.elementary = std::move(run.e);
  return out;
}

}  // namespace hyperising
