#pragma once

#include <vector>

#include "arrangeo/arrangement.hpp"

namespace arrangeo {

// Choice of a hyperplane x_s - x_t = w of build_arrangement(wg); admissible
// when s, t are distinct vertices and 0 <= w <= n_t + eps(t,s).
struct WallChoice {
  int s = 0;
  int t = 0;
  long long w = 0;
  auto operator<=>(const WallChoice&) const = default;
};

bool wall_admissible(const WeightedDigraph& wg, const WallChoice& h);

// Every admissible wall of wg, one canonical orientation per hyperplane
// (s < t when w == 0), sorted lexicographically by (s, t, w).
std::vector<WallChoice> admissible_walls(const WeightedDigraph& wg);

// Fresh label used for the merged vertex of a contraction.
int merged_label(const WeightedDigraph& wg);

// Weighted digraph induced on the wall h: s and t merge into a fresh vertex
// u = merged_label(wg) with weight max(n_s + w, n_t); edges between
// survivors are kept, and edges at u are decided by which of x_s, x_t
// dominates on the wall. Requires an admissible wall; a two-vertex input
// contracts to a single vertex.
WeightedDigraph contract(const WeightedDigraph& wg, const WallChoice& h);

// Restriction of build_arrangement(wg) to the wall h, computed directly by
// substituting the wall equation into every other hyperplane and
// deduplicating; coordinates are the survivors plus merged_label(wg).
Arrangement restrict_direct(const WeightedDigraph& wg, const WallChoice& h);

// True iff restrict_direct(wg, h) equals build_arrangement(contract(wg, h))
// exactly (same coordinates, same walls).
bool verify_restriction_equiv(const WeightedDigraph& wg, const WallChoice& h);

}  // namespace arrangeo
