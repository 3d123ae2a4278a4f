#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hyperising/hypergraph.hpp"

namespace hyperising {

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ s.size();
    for (Vertex v : s) h ^= std::hash<Vertex>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// All label sets S with |S| <= t_max whose induced insect is connected.
// by_size[s] holds the sets of size s in lexicographic order; by_size[0] is
// empty.
struct ConnectedFamily {
  std::size_t t_max = 0;
  std::vector<std::vector<VertexSet>> by_size;

  std::size_t total() const;
};

struct EnumerateOptions {
  std::size_t memory_cap = std::size_t{1} << 26;  // max number of stored sets
  std::size_t threads = 1;
};

// Level-by-level growth: level 1 is all singletons; level s extends every
// level s-1 set by one vertex of its neighbourhood, then deduplicates.
ConnectedFamily enumerate_connected(const Hypergraph& g, std::size_t t,
                                    const EnumerateOptions& opt = {});

// n (e Delta k)^(t-1) / 2: bound on the number of connected size-t label
// sets, summed over anchor vertices. Meaningful for t >= 2.
double count_bound(std::size_t n, std::size_t max_degree, std::size_t max_edge_size, std::size_t t);

}  // namespace hyperising
