#include "hyperising/io.hpp"

#include <fstream>
#include <sstream>

#include "hyperising/error.hpp"

namespace hyperising {

namespace {

using nlohmann::json;

// Decodes a key like "+-+" into a plus-mask; bit j is spin j.
std::uint32_t decode_spins(const std::string& key, std::size_t arity, const std::string& where) {
  std::uint32_t mask = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < key.size();) {
    bool plus;
    if (key[i] == '+') { plus = true; i += 1; }
    else if (key[i] == '-') { plus = false; i += 1; }
    else if (key.compare(i, 3, "\xE2\x88\x92") == 0) { plus = false; i += 3; }  // U+2212
    else throw InvalidInput(where + "bad spin key '" + key + "'");
    if (j >= arity) throw InvalidInput(where + "spin key '" + key + "' longer than the edge");
    if (plus) mask |= 1u << j;
    ++j;
  }
  if (j != arity) throw InvalidInput(where + "spin key '" + key + "' shorter than the edge");
  return mask;
}

Hyperedge parse_edge(const json& e, std::size_t index) {
  const std::string where = "edge " + std::to_string(index) + ": ";
  if (!e.is_object() || !e.contains("v") || !e["v"].is_array())
    throw InvalidInput(where + "expected an object with array \"v\"");
  Hyperedge out;
  for (const auto& v : e["v"]) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw InvalidInput(where + "vertex ids must be non-negative integers");
    out.vertices.push_back(v.get<Vertex>());
  }
  const bool has_beta = e.contains("beta");
  const bool has_phi = e.contains("phi");
  if (has_beta == has_phi) throw InvalidInput(where + "exactly one of \"beta\" or \"phi\" required");
  if (has_beta) {
    if (!e["beta"].is_number()) throw InvalidInput(where + "\"beta\" must be a number");
    out.activity = IsingBeta{e["beta"].get<double>()};
    return out;
  }
  const auto& phi = e["phi"];
  const std::size_t k = out.vertices.size();
  if (!phi.is_object()) throw InvalidInput(where + "\"phi\" must be an object");
  if (k < 2 || k > kMaxEdgeSize) throw InvalidInput(where + "edge size out of range");
  if (phi.size() != (std::size_t{1} << k))
    throw InvalidInput(where + "spin table must have 2^|e| = " + std::to_string(1u << k) + " entries");
  SpinTable t;
  t.values.assign(std::size_t{1} << k, Complex{});
  std::vector<bool> seen(t.values.size(), false);
  for (const auto& [key, val] : phi.items()) {
    const auto m = decode_spins(key, k, where);
    if (seen[m]) throw InvalidInput(where + "duplicate spin key '" + key + "'");
    seen[m] = true;
    if (val.is_number()) {
      t.values[m] = Complex{val.get<double>(), 0.0};
    } else if (val.is_array() && val.size() == 2 && val[0].is_number() && val[1].is_number()) {
      t.values[m] = Complex{val[0].get<double>(), val[1].get<double>()};
    } else {
      throw InvalidInput(where + "spin table values must be [re, im]");
    }
  }
  out.activity = std::move(t);
  return out;
}

}  // namespace

Hypergraph hypergraph_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("hypergraph document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw InvalidInput("\"n\" must be a non-negative integer");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw InvalidInput("\"edges\" must be an array");
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) edges.push_back(parse_edge(doc["edges"][i], i));
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw InvalidInput("\"names\" must be an array of strings");
    for (const auto& s : doc["names"]) {
      if (!s.is_string()) throw InvalidInput("\"names\" must be an array of strings");
      names.push_back(s.get<std::string>());
    }
  }
  return Hypergraph(doc["n"].get<std::size_t>(), std::move(edges), std::move(names));
}

Hypergraph parse_hypergraph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
  return hypergraph_from_json(doc);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_hypergraph(ss.str());
}

json to_json(const Hypergraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json je;
    je["v"] = e.vertices;
    if (e.activity.is_ising()) {
      je["beta"] = e.activity.beta();
    } else {
      json phi = json::object();
      const auto& vals = e.activity.table().values;
      for (std::uint32_t m = 0; m < vals.size(); ++m) {
        std::string key;
        for (std::size_t j = 0; j < e.size(); ++j) key += (m >> j & 1u) ? '+' : '-';
        phi[key] = {vals[m].real(), vals[m].imag()};
      }
      je["phi"] = std::move(phi);
    }
    edges.push_back(std::move(je));
  }
  json out{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
  if (!g.names().empty()) out["names"] = g.names();
  return out;
}

}  // namespace hyperising
