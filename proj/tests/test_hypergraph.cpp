#include <doctest.h>

#include "hyperising/error.hpp"
#include "hyperising/hypergraph.hpp"
#include "test_support.hpp"

using namespace hyperising;
using namespace hyperising::testing;

TEST_CASE("hypergraph canonicalizes edges and derives degree and edge size") {
  std::vector<Hyperedge> es{{{2, 0, 1}, IsingBeta{0.2}}, {{1, 0}, IsingBeta{0.3}}, {{0, 1}, IsingBeta{0.4}}};
  Hypergraph g(3, es);
  REQUIRE(g.num_edges() == 3);
  CHECK(g.edge(0).vertices == VertexSet{0, 1});
  CHECK(g.edge(1).vertices == VertexSet{0, 1});
  CHECK(g.edge(2).vertices == VertexSet{0, 1, 2});
  // stable: the earlier parallel edge keeps its place
  CHECK(g.edge(0).activity.beta() == doctest::Approx(0.3));
  CHECK(g.max_degree() == 3);  // parallel edges counted
  CHECK(g.max_edge_size() == 3);
}

TEST_CASE("spin tables are permuted with their vertex lists") {
  // phi keyed in input order (v=[1,0]): phi(+ on vertex 1, - on vertex 0) = 0.7
  SpinTable t{{1.0, Complex{0.7}, Complex{0.2}, 0.5}};
  Hypergraph g(2, {{{1, 0}, EdgeActivity{t}}});
  const auto& e = g.edge(0);
  CHECK(e.vertices == VertexSet{0, 1});
  CHECK(e.phi(0b10) == Complex{0.7});  // vertex 1 plus
  CHECK(e.phi(0b01) == Complex{0.2});
  CHECK(e.phi(0b11) == Complex{0.5});
}

TEST_CASE("invalid hypergraphs are rejected") {
  CHECK_THROWS_AS(Hypergraph(2, {{{0}, IsingBeta{0.5}}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph(2, {{{0, 0, 1}, IsingBeta{0.5}}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph(2, {{{0, 2}, IsingBeta{0.5}}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph(2, {{{0, 1}, EdgeActivity{SpinTable{{0.9, 0.1, 0.1, 1.0}}}}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph(2, {{{0, 1}, EdgeActivity{SpinTable{{1.0, 0.1, 0.1}}}}}), InvalidInput);
}

TEST_CASE("symmetry flag of spin tables") {
  SpinTable sym{{1.0, Complex{0.1, 0.2}, Complex{0.1, -0.2}, 1.0}};
  SpinTable asym{{1.0, Complex{0.1, 0.2}, Complex{0.1, 0.2}, 1.0}};
  CHECK(EdgeActivity{sym}.symmetric(2));
  CHECK_FALSE(EdgeActivity{asym}.symmetric(2));
  CHECK(EdgeActivity{IsingBeta{0.3}}.symmetric(2));
  // Ising expands to constant-vs-mixed table
  const auto table = EdgeActivity{IsingBeta{0.3}}.as_table(3);
  REQUIRE(table.values.size() == 8);
  CHECK(table.values[0] == Complex{1.0});
  CHECK(table.values[7] == Complex{1.0});
  for (int m = 1; m < 7; ++m) CHECK(table.values[m] == Complex{0.3});
}

TEST_CASE("induced insect on a path") {
  const auto g = path3();
  const auto ab = induced_insect(g, VertexSet{0, 1});
  CHECK(ab.labels == VertexSet{0, 1});
  CHECK(ab.edges == std::vector<EdgeId>{0, 1});
  CHECK(ab.boundary == VertexSet{2});

  const auto ac = induced_insect(g, VertexSet{2, 0});
  CHECK(ac.labels == VertexSet{0, 2});
  CHECK(ac.edges == std::vector<EdgeId>{0, 1});
  CHECK(ac.boundary == VertexSet{1});

  const auto all = whole_insect(g);
  CHECK(all.boundary.empty());
  CHECK(all.edges.size() == g.num_edges());
  CHECK_THROWS_AS(induced_insect(g, VertexSet{3}), InvalidInput);
}

TEST_CASE("connectivity of insects") {
  const auto g = path3();
  CHECK(is_connected(g, induced_insect(g, VertexSet{1})));
  CHECK_FALSE(is_connected(g, induced_insect(g, VertexSet{0, 2})));
  const auto tri = triangle();
  for (VertexSet s : {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}}) CHECK(is_connected(tri, induced_insect(tri, s)));
  CHECK_THROWS_AS(is_connected(g, Insect{}), InvalidInput);

  // Traces through one hyperedge connect any pair.
  const auto e3 = single_edge(3, 0.4);
  CHECK(is_connected(e3, induced_insect(e3, VertexSet{0, 2})));
}

TEST_CASE("disjoint insects sharing only boundary are disconnected") {
  const auto g = path3();
  const auto h1 = make_insect(g, VertexSet{0}, std::vector<EdgeId>{0});
  const auto h2 = make_insect(g, VertexSet{2}, std::vector<EdgeId>{1});
  CHECK(h1.boundary == VertexSet{1});
  CHECK(h2.boundary == VertexSet{1});
  const auto u = compatible(g, h1, h2);
  REQUIRE(u.has_value());
  CHECK_FALSE(is_connected(g, *u));
}

TEST_CASE("compatibility examples") {
  const auto g = path3();
  const auto h = induced_insect(g, VertexSet{0, 1});
  CHECK(compatible(g, h, h) == h);

  const auto edgeless = edge_graph(3, {}, 0.0);
  const auto a = induced_insect(edgeless, VertexSet{0});
  const auto b = induced_insect(edgeless, VertexSet{2});
  const auto ab = compatible(edgeless, a, b);
  REQUIRE(ab.has_value());
  CHECK(ab->labels == VertexSet{0, 2});
  CHECK(ab->edges.empty());

  const auto k = k2(0.5);
  const auto h1 = make_insect(k, VertexSet{0}, std::vector<EdgeId>{0});
  const auto h2 = make_insect(k, VertexSet{1}, std::vector<EdgeId>{});
  CHECK_FALSE(compatible(k, h1, h2).has_value());
  CHECK_THROWS_AS(make_insect(k, VertexSet{0}, std::vector<EdgeId>{1}), InvalidInput);
}

namespace {

std::vector<Hypergraph> small_corpus() {
  std::vector<Hypergraph> out{path3(), triangle(), single_edge(4, 0.2)};
  Rng rng(7);
  for (int i = 0; i < 6; ++i) {
    out.push_back(random_connected_hypergraph({8, 3, 4, 4}, constant_ising(0.3), rng));
  }
  out.push_back(edge_graph(6, {{0, 1, 2}, {2, 3}, {4, 5}}, 0.3));  // two components
  return out;
}

}  // namespace

TEST_CASE("nesting: induced(induced(G,S),T) == induced(G,T) for all T ⊆ S") {
  for (const auto& g : small_corpus()) {
    const std::uint64_t total = std::uint64_t{1} << g.num_vertices();
    for (std::uint64_t s = 0; s < total; ++s) {
      const auto hs = induced_insect(g, mask_to_set(s));
      for (std::uint64_t t = s;; t = (t - 1) & s) {
        CHECK(induced_insect(g, hs, mask_to_set(t)) == induced_insect(g, mask_to_set(t)));
        if (t == 0) break;
      }
    }
  }
}

TEST_CASE("compatible(induced S1, induced S2) == induced(S1 ∪ S2) for all pairs") {
  for (const auto& g : small_corpus()) {
    const std::uint64_t total = std::uint64_t{1} << g.num_vertices();
    for (std::uint64_t s1 = 1; s1 < total; ++s1) {
      const auto h1 = induced_insect(g, mask_to_set(s1));
      for (std::uint64_t s2 = 1; s2 < total; ++s2) {
        const auto u = compatible(g, h1, induced_insect(g, mask_to_set(s2)));
        REQUIRE(u.has_value());
        CHECK(*u == induced_insect(g, mask_to_set(s1 | s2)));
      }
    }
  }
}

TEST_CASE("insect connectivity agrees with relaxation reference") {
  for (const auto& g : small_corpus()) {
    const std::uint64_t total = std::uint64_t{1} << g.num_vertices();
    for (std::uint64_t s = 1; s < total; ++s)
      CHECK(is_connected(g, induced_insect(g, mask_to_set(s))) == brute_connected(g, s));
  }
}
