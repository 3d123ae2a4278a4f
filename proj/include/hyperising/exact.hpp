#pragma once

#include <span>
#include <vector>

#include "hyperising/hypergraph.hpp"

namespace hyperising {

// c_0..c_n with Z(lambda) = sum_i c_i lambda^i and c_i = (-1)^i e_i.
using CoefficientVector = std::vector<Complex>;

struct OracleOptions {
  std::size_t max_vertices = 24;
  std::size_t threads = 1;
};

// Brute force over all 2^n spin configurations.
Complex exact_partition(const Hypergraph& g, Complex lambda, const OracleOptions& opt = {});
CoefficientVector exact_coefficients(const Hypergraph& g, const OracleOptions& opt = {});

// Per-vertex fugacities; Ising edges only (throws InvalidInput otherwise).
Complex exact_multivariate(const Hypergraph& g, std::span<const Complex> lambdas,
                           const OracleOptions& opt = {});

Complex evaluate_polynomial(std::span<const Complex> c, Complex x);

}  // namespace hyperising
