#pragma once

#include <cstdint>
#include <optional>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/polynomial.hpp"
#include "arrangeo/poset.hpp"

namespace arrangeo {

// Characteristic polynomial via the intersection poset and its Mobius
// function: sum of mu(X) t^dim(X) over all flats X.
IntPolynomial charpoly_mobius(const Arrangement& a);

// Characteristic polynomial by deletion and restriction entirely inside the
// weighted-digraph class: edge walls peel edges off, weight rewrites trade a
// weight unit for a star of edges, and the recursion bottoms out at the
// braid base case. Results are memoized per process on canonical forms.
// The arrangement must be of the form build_arrangement(wg), optionally
// coned; anything else is rejected with std::invalid_argument.
IntPolynomial charpoly_deletion_restriction(const Arrangement& a);
IntPolynomial charpoly_deletion_restriction(const WeightedDigraph& wg,
                                            bool coned);

// Recovers the weighted digraph whose built arrangement equals `a` exactly,
// if any (coordinates become vertices).
std::optional<WeightedDigraph> recognize_arrangement(const Arrangement& a);

// Number of points of F_q^dim avoiding every hyperplane of a, by brute
// force over the point space (translation symmetry fixes one coordinate).
// q must be prime, and q^dim must stay within finite_field_point_budget().
// For q above finite_field_validity_bound(a) the count equals the
// characteristic polynomial evaluated at q.
long long charpoly_finite_field(const Arrangement& a, long long q,
                                int jobs = 1);

bool is_prime(long long q);

// Conservative bound: counts match the characteristic polynomial for every
// prime q strictly above 2 * max|c| + |walls|.
long long finite_field_validity_bound(const Arrangement& a);

// Point budget for the brute-force count; the ARRANGEO_MAX_POINTS
// environment variable overrides the default of 1e8.
std::uint64_t finite_field_point_budget();

}  // namespace arrangeo
