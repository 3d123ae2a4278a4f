#include "hyperising/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "hyperising/error.hpp"
#include "hyperising/parallel.hpp"

namespace hyperising {

std::size_t ConnectedFamily::total() const {
  std::size_t n = 0;
  for (const auto& level : by_size) n += level.size();
  return n;
}

namespace {

VertexSet neighbourhood_outside(const Hypergraph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex u : s)
    for (EdgeId id : g.incident(u))
      for (Vertex v : g.edge(id).vertices)
        if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ConnectedFamily enumerate_connected(const Hypergraph& g, std::size_t t, const EnumerateOptions& opt) {
  if (t < 1) throw InvalidInput("enumerate_connected: t must be at least 1");
  ConnectedFamily fam;
  fam.t_max = t;
  fam.by_size.resize(t + 1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) fam.by_size[1].push_back({v});
  std::size_t stored = fam.by_size[1].size();
  if (stored > opt.memory_cap)
    throw CapExceeded("enumerate_connected: frontier exceeds memory cap of " + std::to_string(opt.memory_cap));

  for (std::size_t s = 2; s <= t; ++s) {
    const auto& prev = fam.by_size[s - 1];
    if (prev.empty()) break;
    std::vector<std::vector<VertexSet>> grown(prev.size());
    parallel_for(prev.size(), opt.threads, [&](std::size_t i) {
      const VertexSet& base = prev[i];
      for (Vertex v : neighbourhood_outside(g, base)) {
        VertexSet next;
        next.reserve(base.size() + 1);
        auto pos = std::lower_bound(base.begin(), base.end(), v);
        next.insert(next.end(), base.begin(), pos);
        next.push_back(v);
        next.insert(next.end(), pos, base.end());
        grown[i].push_back(std::move(next));
      }
    });
    std::unordered_set<VertexSet, VertexSetHash> unique;
    for (auto& bucket : grown) {
      for (auto& cand : bucket) {
        unique.insert(std::move(cand));
        if (stored + unique.size() > opt.memory_cap)
          throw CapExceeded("enumerate_connected: frontier at size " + std::to_string(s) +
                            " exceeds memory cap of " + std::to_string(opt.memory_cap) + " sets");
      }
      bucket.clear();
      bucket.shrink_to_fit();
    }
    auto& level = fam.by_size[s];
    level.assign(std::make_move_iterator(unique.begin()), std::make_move_iterator(unique.end()));
    std::sort(level.begin(), level.end());
    stored += level.size();
  }
  return fam;
}

double count_bound(std::size_t n, std::size_t max_degree, std::size_t max_edge_size, std::size_t t) {
  const double base = std::numbers::e * static_cast<double>(max_degree) * static_cast<double>(max_edge_size);
  return static_cast<double>(n) * std::pow(base, static_cast<double>(t) - 1.0) / 2.0;
}

}  // namespace hyperising
