#pragma once

#include <string>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/contraction.hpp"

#include "json.hpp"

namespace arrangeo {

// Weighted digraph wire format:
//   {"vertices":[1,2,3], "edges":[[2,1],[3,1]], "weights":{"1":0,"2":1,"3":0}}
// "weights" may be omitted (all zero). Errors carry the offending field.
nlohmann::json to_json(const WeightedDigraph& wg);
WeightedDigraph weighted_digraph_from_json(const nlohmann::json& j);
WeightedDigraph weighted_digraph_from_string(const std::string& text);

// Arrangement wire format: a list of {"i":, "j":, "c":} objects, with one
// extra {"z0":true} entry when the arrangement is coned.
nlohmann::json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const nlohmann::json& j,
                                  const std::vector<int>& coordinates);

nlohmann::json to_json(const WallChoice& h);

}  // namespace arrangeo
