#include "arrangeo/json_io.hpp"

#include <stdexcept>

namespace arrangeo {

using nlohmann::json;

json to_json(const WeightedDigraph& wg) {
  json j;
  j["vertices"] = wg.vertices();
  auto edges = json::array();
  for (const auto& [a, b] : wg.graph().edges())
    edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  json weights = json::object();
  for (int v : wg.vertices()) weights[std::to_string(v)] = wg.weight(v);
  j["weights"] = std::move(weights);
  return j;
}

WeightedDigraph weighted_digraph_from_json(const json& j) {
  if (!j.is_object())
    throw std::invalid_argument("input: expected a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("input.vertices: expected an array of integers");
  std::vector<int> verts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer())
      throw std::invalid_argument("input.vertices: expected an array of integers");
    verts.push_back(v.get<int>());
  }
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw std::invalid_argument("input.edges: expected an array of pairs");
    std::size_t k = 0;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw std::invalid_argument("input.edges[" + std::to_string(k) +
                                    "]: expected a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      ++k;
    }
  }
  std::map<int, long long> weights;
  for (int v : verts) weights[v] = 0;
  if (j.contains("weights")) {
    if (!j["weights"].is_object())
      throw std::invalid_argument(
          "input.weights: expected an object keyed by vertex label");
    for (const auto& [key, val] : j["weights"].items()) {
      int v;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        throw std::invalid_argument("input.weights." + key +
                                    ": key is not a vertex label");
      }
      if (!weights.contains(v))
        throw std::invalid_argument("input.weights." + key +
                                    ": vertex is not declared");
      if (!val.is_number_integer())
        throw std::invalid_argument("input.weights." + key +
                                    ": expected an integer");
      const long long w = val.get<long long>();
      if (w < 0)
        throw std::invalid_argument("input.weights." + key +
                                    ": negative weight");
      weights[v] = w;
    }
  }
  try {
    return WeightedDigraph(Digraph(verts, edges), weights);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("input: ") + e.what());
  }
}

WeightedDigraph weighted_digraph_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input: ") + e.what());
  }
  return weighted_digraph_from_json(j);
}

json to_json(const Arrangement& a) {
  auto j = json::array();
  if (a.is_coned()) j.push_back(json{{"z0", true}});
  for (const auto& h : a.walls())
    j.push_back(json{{"i", h.i}, {"j", h.j}, {"c", h.c}});
  return j;
}

Arrangement arrangement_from_json(const json& j,
                                  const std::vector<int>& coordinates) {
  if (!j.is_array())
    throw std::invalid_argument("arrangement: expected a JSON array");
  bool coned = false;
  std::vector<Hyperplane> walls;
  std::size_t k = 0;
  for (const auto& e : j) {
    if (e.is_object() && e.contains("z0")) {
      if (e["z0"] != json(true))
        throw std::invalid_argument("arrangement[" + std::to_string(k) +
                                    "].z0: must be true");
      coned = true;
    } else if (e.is_object() && e.contains("i") && e.contains("j") &&
               e.contains("c") && e["i"].is_number_integer() &&
               e["j"].is_number_integer() && e["c"].is_number_integer()) {
      walls.push_back(make_wall(e["i"].get<int>(), e["j"].get<int>(),
                                e["c"].get<long long>()));
    } else {
      throw std::invalid_argument("arrangement[" + std::to_string(k) +
                                  "]: expected {i, j, c} or {z0:true}");
    }
    ++k;
  }
  return coned ? Arrangement::coned(coordinates, std::move(walls))
               : Arrangement::affine(coordinates, std::move(walls));
}

json to_json(const WallChoice& h) {
  return json{{"s", h.s}, {"t", h.t}, {"w", h.w}};
}

}  // namespace arrangeo
