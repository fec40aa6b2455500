#include "arrangeo/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arrangeo {

namespace {

// Encoding of wg under the index permutation perm: new position p holds the
// old vertex at index perm[p].
std::vector<long long> encode(const WeightedDigraph& wg,
                              const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<long long> key;
  key.reserve(1 + n + n * n);
  key.push_back(static_cast<long long>(n));
  for (std::size_t p = 0; p < n; ++p) key.push_back(wg.weight_at(perm[p]));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      key.push_back(p != q && wg.graph().edge_at(perm[p], perm[q]) ? 1 : 0);
  return key;
}

std::vector<std::size_t> minimizing_permutation(const WeightedDigraph& wg) {
  const std::size_t n = wg.vertex_count();
  if (n > 8)
    throw std::invalid_argument("canonical form: more than 8 vertices unsupported");
  std::vector<std::size_t> perm(n), best(n);
  std::iota(perm.begin(), perm.end(), 0);
  best = perm;
  std::vector<long long> best_key = encode(wg, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<long long> key = encode(wg, perm);
    if (key < best_key) {
      best_key = std::move(key);
      best = perm;
    }
  }
  return best;
}

}  // namespace

std::vector<long long> canonical_key(const WeightedDigraph& wg) {
  return encode(wg, minimizing_permutation(wg));
}

WeightedDigraph canonical_form(const WeightedDigraph& wg) {
  const auto perm = minimizing_permutation(wg);
  std::map<int, int> map;
  for (std::size_t p = 0; p < perm.size(); ++p)
    map[wg.vertices()[perm[p]]] = static_cast<int>(p) + 1;
  return relabel(wg, map);
}

}  // namespace arrangeo
