#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/contraction.hpp"

namespace arrangeo {

// One node of the contraction closure: a canonical-form weighted digraph
// plus the wall chain that produced it. Each chain entry refers to the
// labels of the canonical node it was applied to, so a replay must
// canonicalize after every contraction.
struct ClosureNode {
  WeightedDigraph node;
  std::vector<WallChoice> chain;
};

struct ClosureOptions {
  std::optional<int> max_depth;      // stop expanding below this chain length
  std::optional<long long> max_weight;  // stop expanding nodes with a larger weight
};

// Breadth-first closure of a weighted digraph under single-wall
// contractions, deduplicated by canonical form. Nodes with fewer than three
// vertices are kept but not expanded (their only contractions leave the
// two-vertex regime). The root is the canonical form of wg and comes first.
std::vector<ClosureNode> contraction_closure(const WeightedDigraph& wg,
                                             const ClosureOptions& opts = {});

// Replays a chain with the canonicalize-after-each-step convention.
WeightedDigraph replay_chain(const WeightedDigraph& wg,
                             const std::vector<WallChoice>& chain);

struct HereditaryReport {
  bool hereditarily_free = false;
  // Lexicographically first failing chain (walls compared as (s,t,w) on the
  // canonical node at each step); present iff not hereditarily free.
  std::optional<std::vector<WallChoice>> counterexample_chain;
  std::optional<WeightedDigraph> failing_node;
  std::size_t nodes_visited = 0;
  bool search_bounded = false;  // a ClosureOptions guard pruned the search
};

// Depth-first verdict: a node is hereditarily free when it is free and all
// of its contractions are hereditarily free. Memoized on canonical forms
// for the duration of one call.
HereditaryReport is_hereditarily_free(const WeightedDigraph& wg,
                                      const ClosureOptions& opts = {});

// The explicit three-wall restriction chain of the six-vertex all-pairs
// digraph (weights given by index for vertices 1..6) ending at a non-free
// three-vertex node; throws std::logic_error if the final node were free.
std::pair<std::vector<WallChoice>, WeightedDigraph> shi6_counterexample_chain(
    const std::vector<long long>& weights);

// Checks that iterated zero-offset contractions x_6 = x_7 = ... = x_l of
// the l-vertex all-pairs digraph with uniform weight m reproduce the
// six-vertex one (up to relabeling). Requires l > 6.
bool shi_flattening_check(int l, long long m);

}  // namespace arrangeo
