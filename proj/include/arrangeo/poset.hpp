#pragma once

#include <cstdint>
#include <vector>

#include "arrangeo/arrangement.hpp"

namespace arrangeo {

// Nonempty intersection of hyperplanes of an arrangement, stored as a
// partition of the coordinate indices with integer offsets against each
// block's representative (the smallest index in the block):
//   x_k = x_{rep[k]} + off[k]            (affine arrangement)
//   x_k = x_{rep[k]} + off[k] * z        (coned, z_zero == false)
//   z = 0 and x_k = x_{rep[k]}           (coned, z_zero == true; off is 0)
struct Flat {
  std::vector<int> rep;
  std::vector<long long> off;
  bool z_zero = false;
  bool operator==(const Flat&) const = default;
};

// One poset element: the flat, its dimension, the set of hyperplanes
// containing it (bit k = wall k, plus a final bit for z = 0 when coned),
// and its Mobius value mu(ambient, flat).
struct PosetEntry {
  Flat flat;
  int dim = 0;
  std::vector<std::uint64_t> contains_bits;
  long long mobius = 0;
};

// Poset of all nonempty hyperplane intersections, the ambient space
// included, ordered by reverse inclusion. Entries are sorted by the number
// of hyperplanes containing the flat, so entry 0 is the ambient space.
class IntersectionPoset {
 public:
  explicit IntersectionPoset(const Arrangement& a);

  const std::vector<PosetEntry>& entries() const { return entries_; }
  std::size_t flat_count() const { return entries_.size(); }
  // True iff entries_[a] contains entries_[b] (a is above b only in the
  // reverse-inclusion reading: a <= b means a is a superset of b).
  bool contains(std::size_t a, std::size_t b) const;

 private:
  std::vector<PosetEntry> entries_;
};

IntersectionPoset intersection_poset(const Arrangement& a);

}  // namespace arrangeo
