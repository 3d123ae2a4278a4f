#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "hyperising/hypergraph.hpp"

namespace hyperising {

using Rng = std::mt19937_64;

// Draws an edge activity for an edge of the given size.
using ActivitySampler = std::function<EdgeActivity(std::size_t edge_size, Rng&)>;

// Ising beta uniform in ising_ly_range(size).
ActivitySampler in_range_ising();
// Fixed Ising beta for every edge.
ActivitySampler constant_ising(double beta);
// Random symmetric spin table satisfying the Suzuki-Fisher condition.
ActivitySampler suzuki_fisher_tables();

struct RandomHypergraphSpec {
  std::size_t n = 8;
  std::size_t max_degree = 4;
  std::size_t max_edge_size = 4;
  std::size_t extra_edges = 4;  // attempts after the spanning edges
};

// Connected hypergraph: each new vertex joins through an edge containing an
// earlier vertex of spare degree, then random extra edges are attempted.
// Degrees never exceed max_degree.
Hypergraph random_connected_hypergraph(const RandomHypergraphSpec& spec, const ActivitySampler& act,
                                       Rng& rng);

// Simple d-regular graph (configuration model with rejection).
Hypergraph random_regular_graph(std::size_t n, std::size_t d, double beta, Rng& rng);

// Vertex-disjoint union; the second hypergraph's ids are shifted by a.n.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperising
