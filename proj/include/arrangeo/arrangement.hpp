#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "arrangeo/digraph.hpp"

namespace arrangeo {

// Digraph with a nonnegative integer weight on every vertex.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(Digraph graph, const std::map<int, long long>& weights);

  const Digraph& graph() const { return g_; }
  const std::vector<int>& vertices() const { return g_.vertices(); }
  std::size_t vertex_count() const { return g_.vertex_count(); }
  long long weight(int v) const { return weights_[g_.index_of(v)]; }
  long long weight_at(std::size_t idx) const { return weights_[idx]; }
  long long total_weight() const;

  bool operator==(const WeightedDigraph&) const = default;

 private:
  Digraph g_;
  std::vector<long long> weights_;  // aligned with g_.vertices()
};

// Weighted relabeled copy; `map` must be injective on the vertex set.
WeightedDigraph relabel(const WeightedDigraph& wg, const std::map<int, int>& map);

// All-zero-edge / all-pairs constructors on vertices {1..l} with uniform
// weight m: `catalan_model` has no edges, `shi_model` has an edge from every
// larger label to every smaller one.
WeightedDigraph catalan_model(int l, long long m);
WeightedDigraph shi_model(int l, long long m);

// The hyperplane x_i - x_j = c (in the coned setting x_i - x_j = c z).
// Canonical form: c > 0, or c == 0 and i < j.
struct Hyperplane {
  int i = 0;
  int j = 0;
  long long c = 0;
  auto operator<=>(const Hyperplane&) const = default;
};

Hyperplane make_wall(int i, int j, long long c);

// Finite set of difference hyperplanes over named coordinates, either affine
// or coned. A coned arrangement implicitly contains the extra wall z = 0 and
// reads each stored wall as x_i - x_j = c z.
class Arrangement {
 public:
  Arrangement() = default;
  static Arrangement affine(std::vector<int> coordinates,
                            std::vector<Hyperplane> walls);
  static Arrangement coned(std::vector<int> coordinates,
                           std::vector<Hyperplane> walls);

  const std::vector<int>& coordinates() const { return coords_; }
  const std::vector<Hyperplane>& walls() const { return walls_; }
  bool is_coned() const { return coned_; }
  std::size_t size() const { return walls_.size() + (coned_ ? 1 : 0); }

  bool operator==(const Arrangement&) const = default;

 private:
  Arrangement(std::vector<int> coordinates, std::vector<Hyperplane> walls,
              bool coned);

  std::vector<int> coords_;
  std::vector<Hyperplane> walls_;
  bool coned_ = false;
};

// The arrangement of wg: for each vertex pair {i,j} all hyperplanes
// x_i - x_j = c with -n_i - eps(i,j) <= c <= n_j + eps(j,i). Requires at
// least two vertices.
Arrangement build_arrangement(const WeightedDigraph& wg);

// Cone of an affine arrangement: adds z = 0 and homogenizes every wall.
Arrangement cone(const Arrangement& a);

// Number of hyperplanes of build_arrangement(wg), computed directly from the
// weights and edges.
long long count_hyperplanes(const WeightedDigraph& wg);

}  // namespace arrangeo
