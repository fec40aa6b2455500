#include "arrangeo/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arrangeo {

WeightedDigraph::WeightedDigraph(Digraph graph,
                                 const std::map<int, long long>& weights)
    : g_(std::move(graph)) {
  weights_.reserve(g_.vertex_count());
  for (int v : g_.vertices()) {
    auto it = weights.find(v);
    if (it == weights.end())
      throw std::invalid_argument("weighted digraph: missing weight for vertex " +
                                  std::to_string(v));
    if (it->second < 0)
      throw std::invalid_argument("weighted digraph: negative weight on vertex " +
                                  std::to_string(v));
    weights_.push_back(it->second);
  }
  if (weights.size() != g_.vertex_count())
    throw std::invalid_argument("weighted digraph: weight given for an unknown vertex");
}

long long WeightedDigraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0LL);
}

WeightedDigraph relabel(const WeightedDigraph& wg, const std::map<int, int>& map) {
  std::map<int, long long> weights;
  for (int v : wg.vertices()) weights[map.at(v)] = wg.weight(v);
  return WeightedDigraph(relabel(wg.graph(), map), weights);
}

namespace {

WeightedDigraph uniform_model(int l, long long m, bool with_edges,
                              const char* name) {
  if (l < 2) throw std::invalid_argument(std::string(name) + ": need l >= 2");
  if (m < 0) throw std::invalid_argument(std::string(name) + ": need m >= 0");
  std::vector<int> verts(static_cast<std::size_t>(l));
  std::iota(verts.begin(), verts.end(), 1);
  std::vector<std::pair<int, int>> edges;
  if (with_edges)
    for (int i = 1; i <= l; ++i)
      for (int j = i + 1; j <= l; ++j) edges.emplace_back(j, i);
  std::map<int, long long> weights;
  for (int v : verts) weights[v] = m;
  return WeightedDigraph(Digraph(verts, std::move(edges)), weights);
}

}  // namespace

WeightedDigraph catalan_model(int l, long long m) {
  return uniform_model(l, m, false, "catalan_model");
}

WeightedDigraph shi_model(int l, long long m) {
  return uniform_model(l, m, true, "shi_model");
}

Hyperplane make_wall(int i, int j, long long c) {
  if (i == j) throw std::invalid_argument("make_wall: coordinates must differ");
  if (c < 0 || (c == 0 && i > j)) return Hyperplane{j, i, -c};
  return Hyperplane{i, j, c};
}

namespace {

std::vector<Hyperplane> normalize_walls(std::vector<Hyperplane> walls) {
  for (auto& h : walls) h = make_wall(h.i, h.j, h.c);
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  return walls;
}

}  // namespace

Arrangement::Arrangement(std::vector<int> coordinates,
                         std::vector<Hyperplane> walls, bool coned)
    : coords_(std::move(coordinates)),
      walls_(normalize_walls(std::move(walls))),
      coned_(coned) {
  std::sort(coords_.begin(), coords_.end());
  if (std::adjacent_find(coords_.begin(), coords_.end()) != coords_.end())
    throw std::invalid_argument("arrangement: duplicate coordinate");
  for (const auto& h : walls_)
    if (!std::binary_search(coords_.begin(), coords_.end(), h.i) ||
        !std::binary_search(coords_.begin(), coords_.end(), h.j))
      throw std::invalid_argument("arrangement: wall uses an unknown coordinate");
}

Arrangement Arrangement::affine(std::vector<int> coordinates,
                                std::vector<Hyperplane> walls) {
  return Arrangement(std::move(coordinates), std::move(walls), false);
}

Arrangement Arrangement::coned(std::vector<int> coordinates,
                               std::vector<Hyperplane> walls) {
  return Arrangement(std::move(coordinates), std::move(walls), true);
}

Arrangement build_arrangement(const WeightedDigraph& wg) {
  if (wg.vertex_count() < 2)
    throw std::invalid_argument("build_arrangement: need at least two vertices");
  const Digraph& g = wg.graph();
  const auto& vs = g.vertices();
  std::vector<Hyperplane> walls;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const int i = vs[a], j = vs[b];
      for (long long c = 0; c <= wg.weight(j) + epsilon(g, j, i); ++c)
        walls.push_back(make_wall(i, j, c));
      for (long long c = 1; c <= wg.weight(i) + epsilon(g, i, j); ++c)
        walls.push_back(make_wall(j, i, c));
    }
  return Arrangement::affine(vs, std::move(walls));
}

Arrangement cone(const Arrangement& a) {
  if (a.is_coned())
    throw std::invalid_argument("cone: arrangement is already coned");
  return Arrangement::coned(a.coordinates(), a.walls());
}

long long count_hyperplanes(const WeightedDigraph& wg) {
  const Digraph& g = wg.graph();
  const auto& vs = g.vertices();
  long long total = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const int i = vs[a], j = vs[b];
      total += wg.weight(i) + wg.weight(j) + epsilon(g, i, j) +
               epsilon(g, j, i) + 1;
    }
  return total;
}

}  // namespace arrangeo
