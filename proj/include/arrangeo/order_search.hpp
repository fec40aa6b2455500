#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arrangeo/digraph.hpp"

namespace arrangeo {

// Checks the two triple conditions that make `order` compatible with g:
// for all distinct i, j below k,
//   (A1) (i,j) in E  implies  (i,k) in E or (k,j) in E,
//   (A2) (i,k) in E and (k,j) in E  imply  (i,j) in E.
// The order must cover exactly the vertex set of g.
bool satisfies_a1a2(const Digraph& g, const TotalOrder& order);

// First order (in backtracking sequence, maximum picked first with ascending
// label candidates) satisfying (A1)/(A2), or nullopt if none exists.
std::optional<TotalOrder> find_admissible_order(const Digraph& g);

namespace detail {

// Backtracking search over total orders choosing the maximum of the
// remaining set at each step. `max_ok(v_idx, below_mask)` must decide
// whether vertex index v_idx may lie above exactly the indices in
// below_mask. Dead subsets are memoized, so the search is O(2^n poly(n)).
std::optional<TotalOrder> search_order_max_first(
    const std::vector<int>& vertices,
    const std::function<bool(std::size_t, std::uint32_t)>& max_ok);

}  // namespace detail

}  // namespace arrangeo
