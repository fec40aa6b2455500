#pragma once

#include <map>
#include <optional>
#include <utility>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/catalogue.hpp"
#include "arrangeo/polynomial.hpp"
#include "arrangeo/signed_graph.hpp"

namespace arrangeo {

// Freeness verdict for the coned arrangement of a weighted digraph. The
// verdict is decided purely combinatorially: the cone is free exactly when
// the digraph admits an order satisfying (A1)/(A2), and the exponents then
// come from the counting formula below. `forbidden_witness` is populated on
// the negative side when a three-vertex obstruction exists (freeness can
// also fail through signed eliminability alone, without such a witness).
struct FreenessReport {
  bool free = false;
  std::optional<TotalOrder> witness_order;
  std::optional<ExponentMultiset> exponents;
  std::optional<ForbiddenMatch> forbidden_witness;
};

FreenessReport is_free(const WeightedDigraph& wg);

// b_i = #{j below i with (i,j) an edge} + #{j below i with (j,i) an edge},
// for every non-minimum vertex i. No admissibility requirement.
std::map<int, long long> adjacency_below_counts(const Digraph& g,
                                                const TotalOrder& order);

// Same counts, but the order must satisfy (A1)/(A2).
std::map<int, long long> b_values(const Digraph& g, const TotalOrder& order);

// d_i = #{j below i with {i,j} plus} - #{j below i with {i,j} minus}, for
// every non-minimum vertex i.
std::map<int, long long> d_values(const SignedGraph& s, const TotalOrder& order);

// Exponent multiset of the coned arrangement under an admissible order:
// {0, 1} together with |n| + l - ord(i) + 1 + b_i over non-minimum i.
ExponentMultiset exponents_formula(const WeightedDigraph& wg,
                                   const TotalOrder& order);

// Characteristic polynomial of the affine arrangement from the same data:
// t * prod over non-minimum i of (t - (|n| + l - ord(i) + 1 + b_i)).
IntPolynomial formula_charpoly(const WeightedDigraph& wg,
                               const TotalOrder& order);

// Wall count per vertex pair {i,j} (keys i < j):
// n_i + n_j + eps(i,j) + eps(j,i) + 1.
std::map<std::pair<int, int>, long long> ziegler_multiplicity(
    const WeightedDigraph& wg);

}  // namespace arrangeo
