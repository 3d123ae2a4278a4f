#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hyperising {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // always sorted, duplicate-free
using Complex = std::complex<double>;

// Largest hyperedge for which a full spin table is materialized.
inline constexpr std::size_t kMaxEdgeSize = 20;

struct IsingBeta {
  double beta = 0.0;
  bool operator==(const IsingBeta&) const = default;
};

// phi over {+,-}^k, indexed by a bitmask whose bit j is set when the j-th
// vertex of the edge (in sorted order) carries spin +.
struct SpinTable {
  std::vector<Complex> values;
  bool operator==(const SpinTable&) const = default;
};

class EdgeActivity {
 public:
  EdgeActivity() = default;
  EdgeActivity(IsingBeta b) : rep_(b) {}
  EdgeActivity(SpinTable t) : rep_(std::move(t)) {}

  bool is_ising() const { return std::holds_alternative<IsingBeta>(rep_); }
  double beta() const { return std::get<IsingBeta>(rep_).beta; }
  const SpinTable& table() const { return std::get<SpinTable>(rep_); }

  // phi at the configuration encoded by plus_mask on an edge of the given size.
  Complex value(std::uint32_t plus_mask, std::size_t arity) const {
    if (const auto* b = std::get_if<IsingBeta>(&rep_)) {
      const std::uint32_t full = (arity >= 32) ? ~0u : ((1u << arity) - 1u);
      return (plus_mask == 0 || plus_mask == full) ? Complex{1.0} : Complex{b->beta};
    }
    return std::get<SpinTable>(rep_).values[plus_mask];
  }

  SpinTable as_table(std::size_t arity) const;

  // phi(sigma) == conj(phi(-sigma)) for every sigma, up to rel_tol * max|phi|.
  bool symmetric(std::size_t arity, double rel_tol = 1e-12) const;

  // Activity with every phi value conjugated (Ising betas are real, unchanged).
  EdgeActivity conjugated() const;

  bool operator==(const EdgeActivity&) const = default;

 private:
  std::variant<IsingBeta, SpinTable> rep_{IsingBeta{}};
};

struct Hyperedge {
  VertexSet vertices;
  EdgeActivity activity;

  std::size_t size() const { return vertices.size(); }
  Complex phi(std::uint32_t plus_mask) const { return activity.value(plus_mask, vertices.size()); }
  bool operator==(const Hyperedge&) const = default;
};

class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates and canonicalizes: vertex lists are sorted (spin tables are
  // permuted to match) and edges are stably sorted by vertex list.
  // Throws InvalidInput on size < 2, duplicate vertices, ids >= n,
  // malformed or non-normalized spin tables.
  Hypergraph(std::size_t n, std::vector<Hyperedge> edges, std::vector<std::string> names = {});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  // Max number of incident edges over vertices, parallel edges counted.
  std::size_t max_degree() const { return max_degree_; }
  std::size_t max_edge_size() const { return max_edge_size_; }

  bool all_ising() const;
  bool all_symmetric() const;

  Hypergraph conjugated() const;

 private:
  std::size_t n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::string> names_;
  std::size_t max_degree_ = 0;
  std::size_t max_edge_size_ = 0;
};

// A label set together with host edges meeting it. Edge ids refer to the
// host hypergraph; since host edges are sorted by vertex list, sorting ids
// gives the canonical lexicographic edge order.
struct Insect {
  VertexSet labels;
  std::vector<EdgeId> edges;
  VertexSet boundary;

  std::size_t size() const { return labels.size(); }
  bool operator==(const Insect&) const = default;
};

VertexSet make_vertex_set(std::span<const Vertex> vs);

// Builds an insect from explicit parts; throws InvalidInput if an edge misses
// the label set.
Insect make_insect(const Hypergraph& host, std::span<const Vertex> labels,
                   std::span<const EdgeId> edges);

Insect induced_insect(const Hypergraph& g, std::span<const Vertex> s);
// Induced sub-insect of h; s must be a subset of h's labels.
Insect induced_insect(const Hypergraph& host, const Insect& h, std::span<const Vertex> s);
Insect whole_insect(const Hypergraph& g);

// Connectivity of the trace hypergraph (S, {e ∩ S}). Throws on empty S.
bool is_connected(const Hypergraph& host, const Insect& h);

// The union insect (S1 ∪ S2, E1 ∪ E2) if it induces both h1 and h2.
std::optional<Insect> compatible(const Hypergraph& host, const Insect& h1, const Insect& h2);

}  // namespace hyperising
