#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperising/hypergraph.hpp"

namespace hyperising {

// Input schema:
//   {"n": int, "names": [str,...]?,
//    "edges": [{"v": [int,...], "beta": float}
//            | {"v": [int,...], "phi": {"+-+": [re, im], ...}}]}
// Spin-table keys use '+' and '-' (U+2212 also accepted), one character per
// vertex in the order the edge lists them.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph hypergraph_from_json(const nlohmann::json& doc);
Hypergraph load_hypergraph(const std::string& path);

nlohmann::json to_json(const Hypergraph& g);

}  // namespace hyperising
