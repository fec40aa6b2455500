#pragma once

#include <vector>

#include "arrangeo/arrangement.hpp"

namespace arrangeo {

// Relabeling-invariant encoding of a weighted digraph: the lexicographic
// minimum over all vertex permutations of [l, weights..., adjacency bits
// row-major]. Two weighted digraphs have equal keys iff they are isomorphic
// as weighted digraphs. Exhaustive over permutations, so |V| <= 8.
std::vector<long long> canonical_key(const WeightedDigraph& wg);

// The representative itself, relabeled onto {1..l} so that its own encoding
// is the canonical key.
WeightedDigraph canonical_form(const WeightedDigraph& wg);

}  // namespace arrangeo
