#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hyperising/error.hpp"
#include "hyperising/exact.hpp"
#include "hyperising/io.hpp"

using namespace hyperising;

TEST_CASE("parse Ising edges") {
  const auto g = parse_hypergraph(R"({"n": 3, "names": ["a","b","c"],
    "edges": [{"v": [0,1], "beta": 0.5}, {"v": [2,1,0], "beta": -0.25}]})");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.all_ising());
  CHECK(g.edge(1).vertices == VertexSet{0, 1, 2});
  CHECK(g.edge(1).activity.beta() == doctest::Approx(-0.25));
}

TEST_CASE("parse spin tables in the order the edge lists its vertices") {
  // Vertex 1 listed first: "+-" means vertex 1 plus, vertex 0 minus.
  const auto g = parse_hypergraph(R"({"n": 2, "edges": [{"v": [1,0], "phi":
    {"--": 1, "+-": [0.7, 0.1], "-+": 0.2, "++": [0.5, 0]}}]})");
  const auto& e = g.edge(0);
  CHECK(e.phi(0b10) == Complex{0.7, 0.1});
  CHECK(e.phi(0b01) == Complex{0.2});
  CHECK(e.phi(0b11) == Complex{0.5});
  CHECK_FALSE(g.all_ising());
}

TEST_CASE("unicode minus is accepted") {
  const auto g = parse_hypergraph(
      "{\"n\": 2, \"edges\": [{\"v\": [0,1], \"phi\": {\"\xE2\x88\x92\xE2\x88\x92\": 1, \"+\xE2\x88\x92\": 0.3, "
      "\"\xE2\x88\x92+\": 0.3, \"++\": 1}}]}");
  CHECK(g.edge(0).phi(0b01) == Complex{0.3});
}

TEST_CASE("malformed documents are rejected") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"edges": []})",
      R"({"n": -1, "edges": []})",
      R"({"n": 2})",
      R"({"n": 2, "edges": [{"v": [0,1]}]})",
      R"({"n": 2, "edges": [{"v": [0,1], "beta": 0.5, "phi": {}}]})",
      R"({"n": 2, "edges": [{"v": [0,1], "beta": "x"}]})",
      R"({"n": 2, "edges": [{"v": [0,2], "beta": 0.5}]})",
      R"({"n": 2, "edges": [{"v": [0], "beta": 0.5}]})",
      R"({"n": 2, "edges": [{"v": [0,1], "phi": {"--": 1, "+-": 1, "-+": 1}}]})",
      R"({"n": 2, "edges": [{"v": [0,1], "phi": {"--": 1, "+-": 1, "-+": 1, "+x": 1}}]})",
      R"({"n": 2, "edges": [{"v": [0,1], "phi": {"--": 2, "+-": 1, "-+": 1, "++": 1}}]})",
      R"({"n": 2, "edges": [{"v": [0,1], "phi": {"--": 1, "+-": 1, "-+": 1, "+++": 1}}]})",
      R"({"n": 2, "names": [1, 2], "edges": []})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_hypergraph(text), InvalidInput);
  }
  CHECK_THROWS_AS(load_hypergraph("/nonexistent/graph.json"), InvalidInput);
}

TEST_CASE("round trip through JSON preserves the partition function") {
  const auto g = parse_hypergraph(R"({"n": 4, "edges": [
    {"v": [0,1,2], "beta": 0.2},
    {"v": [3,2], "phi": {"--": 1, "+-": [0.3, 0.2], "-+": [0.3, -0.2], "++": 1}}]})");
  const auto text = to_json(g).dump();
  const auto h = parse_hypergraph(text);
  CHECK(h.num_edges() == g.num_edges());
  const auto cg = exact_coefficients(g);
  const auto ch = exact_coefficients(h);
  for (std::size_t i = 0; i < cg.size(); ++i) CHECK(std::abs(cg[i] - ch[i]) == doctest::Approx(0.0));

  const std::string path = "io_roundtrip_test.json";
  {
    std::ofstream f(path);
    f << text;
  }
  CHECK(load_hypergraph(path).num_vertices() == 4);
  std::remove(path.c_str());
}
