#include "hyperising/exact.hpp"

#include <string>

#include "hyperising/error.hpp"
#include "hyperising/parallel.hpp"

namespace hyperising {

namespace {

// Subset space is cut into a fixed number of contiguous blocks so the
// reduction order does not depend on the worker count.
constexpr std::size_t kBlocks = 64;

void check_cap(const Hypergraph& g, const OracleOptions& opt) {
  if (g.num_vertices() > opt.max_vertices || g.num_vertices() > 30)
    throw CapExceeded("exact oracle: n = " + std::to_string(g.num_vertices()) +
                      " exceeds the cap of " + std::to_string(std::min<std::size_t>(opt.max_vertices, 30)));
}

std::uint32_t edge_mask(const Hyperedge& e, std::uint32_t subset) {
  std::uint32_t m = 0;
  for (std::size_t j = 0; j < e.vertices.size(); ++j)
    if (subset >> e.vertices[j] & 1u) m |= 1u << j;
  return m;
}

// prod over edges of phi_e(sigma^S); edges missing S contribute phi(-..-) = 1.
Complex subset_weight(const Hypergraph& g, std::uint32_t subset) {
  Complex w{1.0};
  for (const auto& e : g.edges()) {
    const auto m = edge_mask(e, subset);
    if (m != 0) w *= e.phi(m);
  }
  return w;
}

template <class PerSubset>
void for_blocks(const Hypergraph& g, const OracleOptions& opt, std::size_t slots,
                std::vector<Complex>& out, PerSubset&& per_subset) {
  const std::uint64_t total = std::uint64_t{1} << g.num_vertices();
  const std::size_t blocks = static_cast<std::size_t>(std::min<std::uint64_t>(kBlocks, total));
  std::vector<std::vector<CompensatedSum>> partial(blocks, std::vector<CompensatedSum>(slots));
  parallel_for(blocks, opt.threads, [&](std::size_t b) {
    const std::uint64_t lo = total * b / blocks;
    const std::uint64_t hi = total * (b + 1) / blocks;
    for (std::uint64_t s = lo; s < hi; ++s) per_subset(static_cast<std::uint32_t>(s), partial[b]);
  });
  out.assign(slots, Complex{});
  for (std::size_t i = 0; i < slots; ++i) {
    CompensatedSum acc;
    for (std::size_t b = 0; b < blocks; ++b) acc.add(partial[b][i].value());
    out[i] = acc.value();
  }
}

}  // namespace

Complex exact_partition(const Hypergraph& g, Complex lambda, const OracleOptions& opt) {
  check_cap(g, opt);
  const std::size_t n = g.num_vertices();
  std::vector<Complex> powers(n + 1, Complex{1.0});
  for (std::size_t i = 1; i <= n; ++i) powers[i] = powers[i - 1] * lambda;
  std::vector<Complex> out;
  for_blocks(g, opt, 1, out, [&](std::uint32_t s, std::vector<CompensatedSum>& acc) {
    acc[0].add(subset_weight(g, s) * powers[static_cast<std::size_t>(__builtin_popcount(s))]);
  });
  return out[0];
}

CoefficientVector exact_coefficients(const Hypergraph& g, const OracleOptions& opt) {
  check_cap(g, opt);
  CoefficientVector out;
  for_blocks(g, opt, g.num_vertices() + 1, out, [&](std::uint32_t s, std::vector<CompensatedSum>& acc) {
    acc[static_cast<std::size_t>(__builtin_popcount(s))].add(subset_weight(g, s));
  });
  return out;
}

Complex exact_multivariate(const Hypergraph& g, std::span<const Complex> lambdas,
                           const OracleOptions& opt) {
  check_cap(g, opt);
  if (lambdas.size() != g.num_vertices())
    throw InvalidInput("exact_multivariate: expected " + std::to_string(g.num_vertices()) +
                       " vertex activities");
  if (!g.all_ising()) throw InvalidInput("exact_multivariate: only Ising edge activities supported");
  std::vector<Complex> out;
  for_blocks(g, opt, 1, out, [&](std::uint32_t s, std::vector<CompensatedSum>& acc) {
    Complex w{1.0};
    for (const auto& e : g.edges()) {
      const auto m = edge_mask(e, s);
      if (m != 0 && m != (1u << e.size()) - 1u) w *= e.activity.beta();
    }
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      if (s >> i & 1u) w *= lambdas[i];
    acc[0].add(w);
  });
  return out[0];
}

Complex evaluate_polynomial(std::span<const Complex> c, Complex x) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace hyperising
