#include "hyperising/hypergraph.hpp"

#include <algorithm>
#include <numeric>

#include "hyperising/error.hpp"

namespace hyperising {

SpinTable EdgeActivity::as_table(std::size_t arity) const {
  if (const auto* t = std::get_if<SpinTable>(&rep_)) return *t;
  SpinTable out;
  out.values.resize(std::size_t{1} << arity);
  for (std::uint32_t m = 0; m < out.values.size(); ++m) out.values[m] = value(m, arity);
  return out;
}

bool EdgeActivity::symmetric(std::size_t arity, double rel_tol) const {
  if (is_ising()) return true;
  const auto& v = table().values;
  double scale = 0.0;
  for (const auto& x : v) scale = std::max(scale, std::abs(x));
  const std::uint32_t full = static_cast<std::uint32_t>(v.size() - 1);
  (void)arity;
  for (std::uint32_t m = 0; m < v.size(); ++m) {
    if (std::abs(v[m] - std::conj(v[full ^ m])) > rel_tol * scale) return false;
  }
  return true;
}

EdgeActivity EdgeActivity::conjugated() const {
  if (is_ising()) return *this;
  SpinTable t = table();
  for (auto& x : t.values) x = std::conj(x);
  return EdgeActivity{std::move(t)};
}

namespace {

// Reorders vertices ascending and permutes a spin table to match.
void canonicalize_edge(Hyperedge& e) {
  const std::size_t k = e.vertices.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return e.vertices[a] < e.vertices[b]; });
  if (std::is_sorted(order.begin(), order.end())) return;

  VertexSet sorted(k);
  std::vector<std::size_t> new_pos(k);
  for (std::size_t j = 0; j < k; ++j) {
    sorted[j] = e.vertices[order[j]];
    new_pos[order[j]] = j;
  }
  e.vertices = std::move(sorted);
  if (e.activity.is_ising()) return;

  const auto& old = e.activity.table().values;
  SpinTable t;
  t.values.resize(old.size());
  for (std::uint32_t m = 0; m < old.size(); ++m) {
    std::uint32_t nm = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (m >> j & 1u) nm |= 1u << new_pos[j];
    t.values[nm] = old[m];
  }
  e.activity = EdgeActivity{std::move(t)};
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<Hyperedge> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
  if (!names_.empty() && names_.size() != n_)
    throw InvalidInput("names: expected " + std::to_string(n_) + " entries, got " +
                       std::to_string(names_.size()));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.vertices.size() < 2) throw InvalidInput(where + "hyperedges need at least 2 vertices");
    if (e.vertices.size() > kMaxEdgeSize)
      throw InvalidInput(where + "edge size exceeds " + std::to_string(kMaxEdgeSize));
    for (Vertex v : e.vertices)
      if (v >= n_) throw InvalidInput(where + "vertex id " + std::to_string(v) + " out of range");
    if (!e.activity.is_ising()) {
      const auto& vals = e.activity.table().values;
      if (vals.size() != (std::size_t{1} << e.vertices.size()))
        throw InvalidInput(where + "spin table must have 2^|e| entries");
      if (vals[0] != Complex{1.0, 0.0})
        throw InvalidInput(where + "spin table is not normalized: phi(-,...,-) must equal 1");
    }
    canonicalize_edge(e);
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
      throw InvalidInput(where + "duplicate vertex in edge");
  }
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const Hyperedge& a, const Hyperedge& b) { return a.vertices < b.vertices; });

  incidence_.assign(n_, {});
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    for (Vertex v : edges_[id].vertices) incidence_[v].push_back(id);
    max_edge_size_ = std::max(max_edge_size_, edges_[id].size());
  }
  for (const auto& inc : incidence_) max_degree_ = std::max(max_degree_, inc.size());
}

bool Hypergraph::all_ising() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Hyperedge& e) { return e.activity.is_ising(); });
}

bool Hypergraph::all_symmetric() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Hyperedge& e) { return e.activity.symmetric(e.size()); });
}

Hypergraph Hypergraph::conjugated() const {
  Hypergraph out = *this;
  for (auto& e : out.edges_) e.activity = e.activity.conjugated();
  return out;
}

VertexSet make_vertex_set(std::span<const Vertex> vs) {
  VertexSet s(vs.begin(), vs.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

namespace {

bool meets(const VertexSet& edge, const VertexSet& s) {
  auto a = edge.begin();
  auto b = s.begin();
  while (a != edge.end() && b != s.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

VertexSet boundary_of(const Hypergraph& host, const VertexSet& labels,
                      const std::vector<EdgeId>& edges) {
  VertexSet all;
  for (EdgeId id : edges) {
    const auto& vs = host.edge(id).vertices;
    all.insert(all.end(), vs.begin(), vs.end());
  }
  all = make_vertex_set(all);
  VertexSet out;
  std::set_difference(all.begin(), all.end(), labels.begin(), labels.end(),
                      std::back_inserter(out));
  return out;
}

Insect build(const Hypergraph& host, VertexSet labels, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Insect h;
  h.boundary = boundary_of(host, labels, edges);
  h.labels = std::move(labels);
  h.edges = std::move(edges);
  return h;
}

}  // namespace

Insect make_insect(const Hypergraph& host, std::span<const Vertex> labels,
                   std::span<const EdgeId> edges) {
  VertexSet s = make_vertex_set(labels);
  for (Vertex v : s)
    if (v >= host.num_vertices()) throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
  for (EdgeId id : edges) {
    if (id >= host.num_edges()) throw InvalidInput("edge id " + std::to_string(id) + " out of range");
    if (!meets(host.edge(id).vertices, s))
      throw InvalidInput("edge " + std::to_string(id) + " does not meet the label set");
  }
  return build(host, std::move(s), {edges.begin(), edges.end()});
}

Insect induced_insect(const Hypergraph& g, std::span<const Vertex> s) {
  VertexSet labels = make_vertex_set(s);
  std::vector<EdgeId> edges;
  for (Vertex v : labels) {
    if (v >= g.num_vertices()) throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
    for (EdgeId id : g.incident(v)) edges.push_back(id);
  }
  return build(g, std::move(labels), std::move(edges));
}

Insect induced_insect(const Hypergraph& host, const Insect& h, std::span<const Vertex> s) {
  VertexSet labels = make_vertex_set(s);
  if (!std::includes(h.labels.begin(), h.labels.end(), labels.begin(), labels.end()))
    throw InvalidInput("induced_insect: set is not contained in the label set");
  std::vector<EdgeId> edges;
  for (EdgeId id : h.edges)
    if (meets(host.edge(id).vertices, labels)) edges.push_back(id);
  return build(host, std::move(labels), std::move(edges));
}

Insect whole_insect(const Hypergraph& g) {
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  return induced_insect(g, all);
}

bool is_connected(const Hypergraph& host, const Insect& h) {
  if (h.labels.empty()) throw InvalidInput("is_connected: empty label set");
  const std::size_t s = h.labels.size();
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](Vertex v) -> std::ptrdiff_t {
    auto it = std::lower_bound(h.labels.begin(), h.labels.end(), v);
    return (it != h.labels.end() && *it == v) ? it - h.labels.begin() : -1;
  };
  std::size_t components = s;
  for (EdgeId id : h.edges) {
    std::ptrdiff_t first = -1;
    for (Vertex v : host.edge(id).vertices) {
      const auto p = pos(v);
      if (p < 0) continue;
      if (first < 0) { first = p; continue; }
      const auto a = find(static_cast<std::size_t>(first));
      const auto b = find(static_cast<std::size_t>(p));
      if (a != b) { parent[a] = b; --components; }
    }
  }
  return components == 1;
}

std::optional<Insect> compatible(const Hypergraph& host, const Insect& h1, const Insect& h2) {
  VertexSet labels;
  std::set_union(h1.labels.begin(), h1.labels.end(), h2.labels.begin(), h2.labels.end(),
                 std::back_inserter(labels));
  std::vector<EdgeId> edges;
  std::set_union(h1.edges.begin(), h1.edges.end(), h2.edges.begin(), h2.edges.end(),
                 std::back_inserter(edges));
  Insect u = build(host, std::move(labels), std::move(edges));
  if (induced_insect(host, u, h1.labels) != h1) return std::nullopt;
  if (induced_insect(host, u, h2.labels) != h2) return std::nullopt;
  return u;
}

}  // namespace hyperising
