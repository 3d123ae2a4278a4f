#include "hyperising/coefficients.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperising/error.hpp"
#include "hyperising/parallel.hpp"

namespace hyperising {

Complex mu(const Hypergraph& host, const Insect& h) {
  Complex prod{(h.size() % 2 == 0) ? 1.0 : -1.0};
  for (EdgeId id : h.edges) {
    const auto& e = host.edge(id);
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (std::binary_search(h.labels.begin(), h.labels.end(), e.vertices[j])) m |= 1u << j;
    prod *= e.phi(m);
  }
  return prod;
}

Complex CoefficientTable::at(std::size_t t, const VertexSet& s) const {
  auto it = index.find(s);
  if (it == index.end()) throw InvalidInput("CoefficientTable: label set is not in the connected family");
  if (t < 1 || t > m) throw InvalidInput("CoefficientTable: order out of range");
  return a[t][it->second];
}

namespace {

// Everything the recurrence needs about one insect H, expressed over
// bitmasks of its label list.
struct LocalView {
  std::uint32_t full = 0;
  std::vector<Complex> mu;            // mu of ind(S1) for every S1 ⊆ L
  std::vector<std::uint32_t> adjacent;  // positions sharing an edge trace
};

LocalView local_view(const Hypergraph& g, const VertexSet& labels) {
  const std::size_t h = labels.size();
  LocalView lv;
  lv.full = (h == 32) ? ~0u : ((1u << h) - 1u);
  lv.adjacent.assign(h, 0);

  std::vector<EdgeId> edges;
  for (Vertex v : labels)
    for (EdgeId id : g.incident(v)) edges.push_back(id);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // For each edge: position of each of its vertices inside L, or -1.
  std::vector<std::vector<int>> pos(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = g.edge(edges[k]);
    std::uint32_t trace = 0;
    for (Vertex v : e.vertices) {
      auto it = std::lower_bound(labels.begin(), labels.end(), v);
      const int p = (it != labels.end() && *it == v) ? static_cast<int>(it - labels.begin()) : -1;
      pos[k].push_back(p);
      if (p >= 0) trace |= 1u << p;
    }
    for (std::size_t j = 0; j < h; ++j)
      if (trace >> j & 1u) lv.adjacent[j] |= trace & ~(1u << j);
  }

  lv.mu.assign(std::size_t{1} << h, Complex{});
  for (std::uint32_t s1 = 0; s1 <= lv.full; ++s1) {
    Complex prod{(std::popcount(s1) % 2 == 0) ? 1.0 : -1.0};
    for (std::size_t k = 0; k < edges.size(); ++k) {
      std::uint32_t m = 0;
      for (std::size_t j = 0; j < pos[k].size(); ++j)
        if (pos[k][j] >= 0 && (s1 >> pos[k][j] & 1u)) m |= 1u << j;
      if (m != 0) prod *= g.edge(edges[k]).phi(m);
    }
    lv.mu[s1] = prod;
    if (s1 == lv.full) break;
  }
  return lv;
}

bool mask_connected(const LocalView& lv, std::uint32_t s) {
  std::uint32_t seen = s & (~s + 1u);
  std::uint32_t frontier = seen;
  while (frontier) {
    const int j = std::countr_zero(frontier);
    frontier &= frontier - 1u;
    const std::uint32_t fresh = lv.adjacent[static_cast<std::size_t>(j)] & s & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == s;
}

}  // namespace

CoefficientTable compute_tables(const Hypergraph& g, std::size_t m, const ConnectedFamily& fam,
                                const DpOptions& opt) {
  if (m < 1) throw InvalidInput("compute_tables: m must be at least 1");
  if (fam.t_max < std::min(m, g.num_vertices()))
    throw InvalidInput("compute_tables: family enumerated to a smaller order than m");

  CoefficientTable tab;
  tab.m = m;
  std::vector<std::size_t> level_start;
  for (std::size_t s = 1; s < fam.by_size.size() && s <= m; ++s) {
    level_start.push_back(tab.sets.size());
    for (const auto& set : fam.by_size[s]) {
      if (set.size() > 31) throw CapExceeded("compute_tables: insects larger than 31 labels");
      tab.index.emplace(set, static_cast<std::uint32_t>(tab.sets.size()));
      tab.sets.push_back(set);
    }
  }
  level_start.push_back(tab.sets.size());
  tab.a.assign(m + 1, std::vector<Complex>(tab.sets.size(), Complex{}));

  std::vector<std::uint64_t> scans(tab.sets.size(), 0);

  // Sets of one size depend only on strictly smaller sets and on lower
  // orders of themselves, so each size level is processed in parallel.
  for (std::size_t lvl = 0; lvl + 1 < level_start.size(); ++lvl) {
    const std::size_t lo = level_start[lvl], hi = level_start[lvl + 1];
    parallel_for(hi - lo, opt.threads, [&](std::size_t off) {
      const std::size_t idx = lo + off;
      const VertexSet& labels = tab.sets[idx];
      const std::size_t h = labels.size();
      const LocalView lv = local_view(g, labels);

      // For each connected S2 ⊆ L: W[i] = sum of mu(S1) over S1 with
      // S1 ∪ S2 = L and |S1| = i. S1 = (L \ S2) ∪ X for X ⊆ S2.
      struct Piece {
        std::uint32_t set_index;
        std::size_t size;
        std::vector<Complex> w;
      };
      std::vector<Piece> pieces;
      VertexSet buf;
      std::uint64_t pairs = 0;
      for (std::uint32_t s2 = 1; s2 <= lv.full; ++s2) {
        if (!mask_connected(lv, s2)) continue;
        buf.clear();
        for (std::uint32_t r = s2; r; r &= r - 1u) buf.push_back(labels[static_cast<std::size_t>(std::countr_zero(r))]);
        const auto it = tab.index.find(buf);
        if (it == tab.index.end()) throw std::logic_error("compute_tables: connected subset missing from family");
        Piece pc{it->second, buf.size(), std::vector<Complex>(h + 1, Complex{})};
        const std::uint32_t rest = lv.full & ~s2;
        for (std::uint32_t x = s2;; x = (x - 1u) & s2) {
          const std::uint32_t s1 = rest | x;
          ++pairs;
          if (s1) pc.w[static_cast<std::size_t>(std::popcount(s1))] += lv.mu[s1];
          if (x == 0) break;
        }
        pieces.push_back(std::move(pc));
        if (s2 == lv.full) break;
      }
      scans[idx] = pairs;

      for (std::size_t t = h; t <= m; ++t) {
        Complex acc{};
        for (const auto& pc : pieces) {
          for (std::size_t i = 1; i <= h && i + pc.size <= t; ++i) {
            const double sign = (i % 2 == 1) ? 1.0 : -1.0;
            acc += sign * tab.a[t - i][pc.set_index] * pc.w[i];
          }
        }
        if (t == h) acc += ((t % 2 == 1) ? 1.0 : -1.0) * static_cast<double>(t) * lv.mu[lv.full];
        tab.a[t][idx] = acc;
      }
    });
  }

  for (std::size_t i = 0; i < tab.sets.size(); ++i) {
    tab.pair_scans += scans[i];
    const double ratio = static_cast<double>(scans[i]) / std::pow(4.0, static_cast<double>(tab.sets[i].size()));
    tab.max_pair_ratio = std::max(tab.max_pair_ratio, ratio);
  }
  return tab;
}

CoefficientTable compute_tables(const Hypergraph& g, std::size_t m, const DpOptions& opt) {
  const auto fam = enumerate_connected(g, std::max<std::size_t>(1, std::min(m, g.num_vertices())),
                                       {opt.memory_cap, opt.threads});
  return compute_tables(g, m, fam, opt);
}

PowerSums power_sums(const Hypergraph& g, std::size_t m, const CoefficientTable& tables) {
  if (m > tables.m) throw InvalidInput("power_sums: tables computed to a lower order");
  PowerSums out;
  out.p.assign(m + 1, Complex{});
  out.p[0] = static_cast<double>(g.num_vertices());
  for (std::size_t t = 1; t <= m; ++t) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < tables.sets.size(); ++i)
      if (tables.sets[i].size() <= t) acc.add(tables.a[t][i]);
    out.p[t] = acc.value();
  }
  return out;
}

ElementarySymmetric newton_invert(const PowerSums& p) {
  const std::size_t m = p.order();
  ElementarySymmetric out;
  out.e.assign(m + 1, Complex{});
  out.e[0] = 1.0;
  for (std::size_t t = 1; t <= m; ++t) {
    Complex acc = p.p[t];
    for (std::size_t i = 1; i < t; ++i) acc -= ((i % 2 == 1) ? 1.0 : -1.0) * p.p[t - i] * out.e[i];
    out.e[t] = ((t % 2 == 1) ? 1.0 : -1.0) * acc / static_cast<double>(t);
  }
  return out;
}

PowerSums extend_power_sums(const PowerSums& p, const ElementarySymmetric& e, std::size_t m) {
  PowerSums out = p;
  const std::size_t d = e.order();
  for (std::size_t t = out.order() + 1; t <= m; ++t) {
    Complex acc{};
    for (std::size_t i = 1; i < t && i <= d; ++i)
      acc += ((i % 2 == 1) ? 1.0 : -1.0) * out.p[t - i] * e.e[i];
    if (t <= d) acc += ((t % 2 == 1) ? 1.0 : -1.0) * static_cast<double>(t) * e.e[t];
    out.p.push_back(acc);
  }
  return out;
}

PowerSumRun power_sums_to_order(const Hypergraph& g, std::size_t m, const DpOptions& opt) {
  if (m < 1) throw InvalidInput("power_sums_to_order: m must be at least 1");
  PowerSumRun run;
  const std::size_t n = g.num_vertices();
  run.dp_depth = std::min(m, n);
  if (run.dp_depth == 0) {
    // No vertices: Z = 1 and every power sum vanishes.
    run.p.p.assign(m + 1, Complex{});
    run.e.e = {Complex{1.0}};
    return run;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto fam = enumerate_connected(g, run.dp_depth, {opt.memory_cap, opt.threads});
  run.enumerate_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& level : fam.by_size) run.family_counts.push_back(level.size());
  run.family_size = fam.total();
  const auto tables = compute_tables(g, run.dp_depth, fam, opt);
  run.pair_scans = tables.pair_scans;
  run.max_pair_ratio = tables.max_pair_ratio;
  run.p = power_sums(g, run.dp_depth, tables);
  run.e = newton_invert(run.p);
  if (m > run.dp_depth) run.p = extend_power_sums(run.p, run.e, m);
  return run;
}

}  // namespace hyperising
