#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hyperising/enumerate.hpp"
#include "hyperising/hypergraph.hpp"

namespace hyperising {

// mu_H = (-1)^|H| prod_{e in H} phi_e(labels(H)), boundary vertices at '-'.
Complex mu(const Hypergraph& host, const Insect& h);

// Coefficients a^(t)_H of the power sums p_t over connected induced insects,
// keyed by label set (an induced insect is determined by its label set
// inside a fixed host).
struct CoefficientTable {
  std::size_t m = 0;
  std::vector<VertexSet> sets;                  // size-major, lexicographic
  std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> index;
  std::vector<std::vector<Complex>> a;          // a[t][set index], t = 1..m; a[0] unused

  // Instrumentation: (S1, S2) pairs visited, total and the largest
  // per-insect count relative to 4^|H|.
  std::uint64_t pair_scans = 0;
  double max_pair_ratio = 0.0;

  // a^(t)_S; zero when |S| > t. Throws InvalidInput if S is not a
  // connected label set of the family.
  Complex at(std::size_t t, const VertexSet& s) const;
};

// p[0] = n (the zeroth power sum), p[t] = sum_i r_i^{-t}.
struct PowerSums {
  std::vector<Complex> p;
  std::size_t order() const { return p.empty() ? 0 : p.size() - 1; }
};

// e[0] = 1; Z = sum_i (-1)^i e_i lambda^i.
struct ElementarySymmetric {
  std::vector<Complex> e;
  std::size_t order() const { return e.empty() ? 0 : e.size() - 1; }
};

struct DpOptions {
  std::size_t threads = 1;
  std::size_t memory_cap = std::size_t{1} << 26;
};

CoefficientTable compute_tables(const Hypergraph& g, std::size_t m, const ConnectedFamily& fam,
                                const DpOptions& opt = {});
CoefficientTable compute_tables(const Hypergraph& g, std::size_t m, const DpOptions& opt = {});

// p_t = sum over connected S with |S| <= t of a^(t)_S (compensated sum).
PowerSums power_sums(const Hypergraph& g, std::size_t m, const CoefficientTable& tables);

ElementarySymmetric newton_invert(const PowerSums& p);

// Continues p to order m from e_1..e_d using Newton's identities with
// e_i = 0 for i > d (exact when d is the polynomial degree).
PowerSums extend_power_sums(const PowerSums& p, const ElementarySymmetric& e, std::size_t m);

struct PowerSumRun {
  PowerSums p;
  ElementarySymmetric e;         // to order min(m, n)
  std::size_t dp_depth = 0;      // order the insect DP actually ran to
  std::size_t family_size = 0;
  std::vector<std::size_t> family_counts;  // connected sets per size
  std::uint64_t pair_scans = 0;
  double max_pair_ratio = 0.0;
  double enumerate_seconds = 0.0;
};

// Full pipeline to order m. The DP runs to min(m, n); beyond the degree n
// all e_i vanish and the remaining p_t follow from Newton's identities.
PowerSumRun power_sums_to_order(const Hypergraph& g, std::size_t m, const DpOptions& opt = {});

}  // namespace hyperising
