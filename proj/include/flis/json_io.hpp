#pragma once

#include <json.hpp>

#include "flis/errors.hpp"
#include "flis/graph.hpp"
#include "flis/leaf_function.hpp"

namespace flis {

/// {"n": order, "values": [0, 0, 2, null, ...]} with null for impossible.
inline nlohmann::json leaf_function_to_json(const LeafFunction& lf) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < lf.size(); ++i) {
    if (lf.possible(i))
      values.push_back(lf[i]);
    else
      values.push_back(nullptr);
  }
  return nlohmann::json{{"n", lf.order()}, {"values", std::move(values)}};
}

inline LeafFunction leaf_function_from_json(const nlohmann::json& j) {
  if (!j.contains("values") || !j["values"].is_array())
    throw ParseError("leaf function JSON: missing 'values' array");
  std::vector<LeafCount> vals;
  for (const auto& entry : j["values"]) {
    if (entry.is_null()) {
      vals.push_back(kImpossible);
    } else if (entry.is_number_integer() && entry.get<long long>() >= 0) {
      vals.push_back(entry.get<LeafCount>());
    } else {
      throw ParseError("leaf function JSON: entries must be null or nonnegative integers");
    }
  }
  if (vals.empty()) throw ParseError("leaf function JSON: empty 'values'");
  if (j.contains("n") && j["n"].get<std::size_t>() != vals.size() - 1)
    throw ParseError("leaf function JSON: 'n' does not match 'values' length");
  return LeafFunction(std::move(vals));
}

/// {"n": order, "edges": [[u, v], ...]} with u < v, sorted.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return nlohmann::json{{"n", g.order()}, {"edges", std::move(edges)}};
}

}  // namespace flis
