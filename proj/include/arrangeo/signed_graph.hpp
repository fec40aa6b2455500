#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arrangeo/digraph.hpp"

namespace arrangeo {

// Graph on the same vertex set whose unordered edges carry a sign; pairs may
// also carry no edge at all. Edge pairs are stored normalized (a < b).
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(std::vector<int> vertices,
              std::vector<std::pair<int, int>> plus_edges,
              std::vector<std::pair<int, int>> minus_edges);

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<std::pair<int, int>>& plus_edges() const { return plus_; }
  const std::vector<std::pair<int, int>>& minus_edges() const { return minus_; }

  // +1 / -1 for a signed pair, 0 when {i,j} carries no signed edge.
  int sign(int i, int j) const;

  bool operator==(const SignedGraph&) const = default;

 private:
  std::vector<int> verts_;
  std::vector<std::pair<int, int>> plus_, minus_;
};

// Companion signed graph of a digraph: a pair joined in both directions
// becomes a plus edge, a pair joined in neither direction a minus edge, and
// a pair joined in exactly one direction carries no signed edge.
SignedGraph signed_graph(const Digraph& g);

// Elimination conditions for a fixed order: for all distinct i, j below k,
//   (SE1) {k,i} signed mu and {i,j} signed nu with mu != nu
//         imply {k,j} signed nu,
//   (SE2) {k,i} and {k,j} signed with the same sign mu imply {i,j} signed mu.
bool signed_eliminability_holds(const SignedGraph& s, const TotalOrder& order);

// First order (same backtracking sequence as find_admissible_order) under
// which s is signed eliminable, or nullopt.
std::optional<TotalOrder> is_signed_eliminable(const SignedGraph& s);

}  // namespace arrangeo
