#include "hyperising/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hyperising/error.hpp"
#include "hyperising/leeyang.hpp"

namespace hyperising {

ActivitySampler in_range_ising() {
  return [](std::size_t k, Rng& rng) {
    const auto r = ising_ly_range(k);
    std::uniform_real_distribution<double> d(r.lo, r.hi);
    return EdgeActivity{IsingBeta{d(rng)}};
  };
}

ActivitySampler constant_ising(double beta) {
  return [beta](std::size_t, Rng&) { return EdgeActivity{IsingBeta{beta}}; };
}

ActivitySampler suzuki_fisher_tables() {
  return [](std::size_t k, Rng& rng) {
    const std::uint32_t full = (1u << k) - 1u;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SpinTable t;
    t.values.assign(full + 1, Complex{});
    t.values[0] = 1.0;
    t.values[full] = 1.0;
    // Mixed configurations come in pairs (s, -s) with conjugate values.
    double mixed = 0.0;
    for (std::uint32_t m = 1; m < full; ++m) {
      if (m > (full ^ m)) continue;
      const Complex v{unit(rng), unit(rng)};
      t.values[m] = v;
      t.values[full ^ m] = std::conj(v);
      mixed += 2.0 * std::abs(v);
    }
    // Scale mixed entries so |phi(+..+)| >= (2 + mixed)/4, with some margin.
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    const double budget = 2.0 * frac(rng);
    if (mixed > 0.0) {
      const double s = budget / mixed;
      for (std::uint32_t m = 1; m < full; ++m) t.values[m] *= s;
    }
    return EdgeActivity{std::move(t)};
  };
}

Hypergraph random_connected_hypergraph(const RandomHypergraphSpec& spec, const ActivitySampler& act,
                                       Rng& rng) {
  const std::size_t n = spec.n;
  if (n == 0) return Hypergraph(0, {});
  if (spec.max_degree < 1 || spec.max_edge_size < 2)
    throw InvalidInput("random_connected_hypergraph: need max_degree >= 1 and max_edge_size >= 2");
  if (n >= 2 && spec.max_degree < 2 && spec.max_edge_size < n)
    throw InvalidInput("random_connected_hypergraph: degree 1 cannot connect more than one edge");

  std::vector<std::size_t> degree(n, 0);
  std::vector<Hyperedge> edges;
  auto spare = [&](Vertex v) { return degree[v] < spec.max_degree; };

  // Vertices 1..n-1 join in order; each new edge holds the new vertex, one
  // earlier vertex with spare degree and possibly further upcoming vertices.
  std::size_t next = 1;
  while (next < n) {
    std::vector<Vertex> anchors;
    for (Vertex v = 0; v < next; ++v)
      if (spare(v)) anchors.push_back(v);
    if (anchors.empty()) throw std::logic_error("random_connected_hypergraph: no anchor with spare degree");
    const Vertex anchor = anchors[std::uniform_int_distribution<std::size_t>(0, anchors.size() - 1)(rng)];
    const std::size_t max_size = std::min(spec.max_edge_size, n - next + 1);
    const std::size_t size = std::uniform_int_distribution<std::size_t>(2, max_size)(rng);
    VertexSet vs{anchor};
    for (std::size_t j = 0; j + 1 < size; ++j) vs.push_back(static_cast<Vertex>(next++));
    for (Vertex v : vs) ++degree[v];
    std::sort(vs.begin(), vs.end());
    edges.push_back({vs, act(vs.size(), rng)});
  }

  for (std::size_t attempt = 0; attempt < spec.extra_edges; ++attempt) {
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
      if (spare(v)) free.push_back(v);
    if (free.size() < 2) break;
    std::shuffle(free.begin(), free.end(), rng);
    const std::size_t size =
        std::uniform_int_distribution<std::size_t>(2, std::min(spec.max_edge_size, free.size()))(rng);
    VertexSet vs(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(vs.begin(), vs.end());
    for (Vertex v : vs) ++degree[v];
    edges.push_back({vs, act(vs.size(), rng)});
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_regular_graph(std::size_t n, std::size_t d, double beta, Rng& rng) {
  if ((n * d) % 2 != 0 || d >= n) throw InvalidInput("random_regular_graph: need n*d even and d < n");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t j = 0; j < d; ++j) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<VertexSet> pairs;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      VertexSet p{std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1])};
      if (p[0] == p[1]) { ok = false; break; }
      pairs.push_back(p);
    }
    if (!ok) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
    std::vector<Hyperedge> edges;
    for (auto& p : pairs) edges.push_back({std::move(p), IsingBeta{beta}});
    return Hypergraph(n, std::move(edges));
  }
  throw NonConvergence("random_regular_graph: no simple pairing found");
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Hyperedge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (Hyperedge e : b.edges()) {
    for (Vertex& v : e.vertices) v += shift;
    edges.push_back(std::move(e));
  }
  return Hypergraph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace hyperising
