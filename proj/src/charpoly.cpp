#include "arrangeo/charpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "arrangeo/canonical.hpp"
#include "arrangeo/contraction.hpp"

namespace arrangeo {

IntPolynomial charpoly_mobius(const Arrangement& a) {
  const IntersectionPoset poset(a);
  IntPolynomial chi;
  for (const auto& e : poset.entries()) {
    std::vector<long long> mono(static_cast<std::size_t>(e.dim) + 1, 0);
    mono.back() = e.mobius;
    chi = chi + IntPolynomial(std::move(mono));
  }
  return chi;
}

std::optional<WeightedDigraph> recognize_arrangement(const Arrangement& a) {
  const auto& coords = a.coordinates();
  const std::size_t n = coords.size();
  if (n < 2) return std::nullopt;

  // Collect, for every ordered pair (i,j), the set of constants c with
  // x_i - x_j = c present. The class is exactly "contiguous interval
  // containing 0 for every pair", with the upper endpoint n_j + eps(j,i)
  // when read as x_i - x_j <= ... (mirrored for the other orientation).
  std::map<std::pair<int, int>, std::vector<long long>> consts;
  for (const auto& h : a.walls()) {
    consts[{h.i, h.j}].push_back(h.c);
    consts[{h.j, h.i}].push_back(-h.c);
  }
  // bound[(i,j)] holds n_i + eps(i,j), recovered from the wall interval of
  // the ordered pair: x_i - x_j = c ranges over [-(n_i + eps(i,j)), ...],
  // so the value is -min c.
  std::map<std::pair<int, int>, long long> bound;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      auto it = consts.find({coords[x], coords[y]});
      if (it == consts.end()) return std::nullopt;
      auto& cs = it->second;
      std::sort(cs.begin(), cs.end());
      if (cs.front() > 0 || cs.back() < 0) return std::nullopt;
      for (std::size_t k = 1; k < cs.size(); ++k)
        if (cs[k] != cs[k - 1] + 1) return std::nullopt;
      bound[{coords[x], coords[y]}] = -cs.front();
    }

  std::map<int, long long> weights;
  for (std::size_t x = 0; x < n; ++x) {
    long long lo = 0, hi = 0;
    bool first = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const long long v = bound[{coords[x], coords[y]}];
      lo = first ? v : std::min(lo, v);
      hi = first ? v : std::max(hi, v);
      first = false;
    }
    if (hi - lo > 1 || lo < 0) return std::nullopt;
    weights[coords[x]] = lo;  // eps is then bound - lo, in {0,1}
  }

  std::vector<std::pair<int, int>> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const long long eps = bound[{coords[x], coords[y]}] - weights[coords[x]];
      if (eps == 1) edges.emplace_back(coords[x], coords[y]);
    }
  WeightedDigraph wg(Digraph(coords, std::move(edges)), weights);
  if (build_arrangement(wg).walls() != a.walls()) return std::nullopt;
  return wg;
}

namespace {

IntPolynomial braid_charpoly(std::size_t l, bool coned) {
  std::vector<long long> roots;
  for (std::size_t k = 0; k < l; ++k) roots.push_back(static_cast<long long>(k));
  if (coned) roots.push_back(1);
  return IntPolynomial::from_roots(roots);
}

struct DelRestMemo {
  std::mutex mutex;
  std::map<std::vector<long long>, IntPolynomial> table;
};

DelRestMemo& delrest_memo() {
  static DelRestMemo memo;
  return memo;
}

IntPolynomial delrest_recurse(const WeightedDigraph& wg, bool coned) {
  const std::size_t l = wg.vertex_count();
  if (l == 1) {
    // A single coordinate carries no difference walls; the cone adds z = 0.
    return coned ? IntPolynomial::from_roots({0, 1})
                 : IntPolynomial::from_roots({0});
  }

  std::vector<long long> key = canonical_key(wg);
  key.push_back(coned ? 1 : 0);
  auto& memo = delrest_memo();
  {
    std::scoped_lock lock(memo.mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;
  }

  IntPolynomial chi;
  const Digraph& g = wg.graph();
  if (g.edge_count() > 0) {
    // Deleting the wall x_s - x_t = n_t + 1 (with (t,s) the first edge)
    // removes exactly that edge; restricting to it contracts.
    const auto [t, s] = g.edges().front();
    std::vector<std::pair<int, int>> rest_edges(g.edges().begin() + 1,
                                                g.edges().end());
    std::map<int, long long> weights;
    for (int v : g.vertices()) weights[v] = wg.weight(v);
    WeightedDigraph deleted(Digraph(g.vertices(), std::move(rest_edges)),
                            weights);
    const WallChoice wall{s, t, wg.weight(t) + 1};
    chi = delrest_recurse(deleted, coned) -
          delrest_recurse(contract(wg, wall), coned);
  } else if (wg.total_weight() > 0) {
    // Trade one weight unit at v for a full out-star at v: the per-pair
    // wall intervals are unchanged, and edges are available again.
    int v = 0;
    for (int cand : g.vertices())
      if (wg.weight(cand) > 0) v = cand;
    std::vector<std::pair<int, int>> edges;
    for (int other : g.vertices())
      if (other != v) edges.emplace_back(v, other);
    std::map<int, long long> weights;
    for (int other : g.vertices()) weights[other] = wg.weight(other);
    --weights[v];
    chi = delrest_recurse(
        WeightedDigraph(Digraph(g.vertices(), std::move(edges)), weights),
        coned);
  } else {
    chi = braid_charpoly(l, coned);
  }

  std::scoped_lock lock(memo.mutex);
  memo.table.emplace(std::move(key), chi);
  return chi;
}

}  // namespace

IntPolynomial charpoly_deletion_restriction(const WeightedDigraph& wg,
                                            bool coned) {
  return delrest_recurse(wg, coned);
}

IntPolynomial charpoly_deletion_restriction(const Arrangement& a) {
  auto wg = recognize_arrangement(a);
  if (!wg)
    throw std::invalid_argument(
        "charpoly_deletion_restriction: arrangement is not the built "
        "arrangement of any weighted digraph");
  return delrest_recurse(*wg, a.is_coned());
}

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

long long finite_field_validity_bound(const Arrangement& a) {
  long long max_c = 0;
  for (const auto& h : a.walls()) max_c = std::max(max_c, std::llabs(h.c));
  return 2 * max_c + static_cast<long long>(a.size());
}

std::uint64_t finite_field_point_budget() {
  if (const char* env = std::getenv("ARRANGEO_MAX_POINTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument(
        "ARRANGEO_MAX_POINTS must be a positive integer");
  }
  return 100'000'000ULL;
}

namespace {

// Residues hit by walls of one ordered coordinate pair, as a bitmap.
struct PairForbidden {
  std::size_t i, j;
  std::vector<std::uint64_t> mask;  // bit r: x_i - x_j = r is forbidden

  bool hits(long long diff, long long q) const {
    const long long r = ((diff % q) + q) % q;
    return (mask[static_cast<std::size_t>(r) / 64] >>
            (static_cast<std::size_t>(r) % 64)) &
           1;
  }
};

// Count assignments of coords[1..n-1] (coords[0] pinned to 0) avoiding all
// forbidden differences; `scale` multiplies wall constants (the z value in
// the coned reading, 1 in the affine one).
long long count_fixed_scale(std::size_t n,
                            const std::vector<std::pair<std::size_t,
                                                        std::size_t>>& pairs,
                            const std::vector<std::vector<long long>>& consts,
                            long long scale, long long q, std::size_t split_jobs) {
  const std::size_t words = (static_cast<std::size_t>(q) + 63) / 64;
  std::vector<PairForbidden> forb;
  forb.reserve(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    PairForbidden f{pairs[p].first, pairs[p].second,
                    std::vector<std::uint64_t>(words, 0)};
    for (long long c : consts[p]) {
      const long long r = (((c * scale) % q) + q) % q;
      f.mask[static_cast<std::size_t>(r) / 64] |= std::uint64_t{1}
                                                  << (static_cast<std::size_t>(r) % 64);
    }
    forb.push_back(std::move(f));
  }

  // Depth-first odometer over coordinates 1..n-1; prune as soon as a pair
  // among the assigned coordinates is hit.
  auto count_range = [&](long long first_lo, long long first_hi) {
    std::vector<long long> y(n, 0);
    long long total = 0;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (depth == n) {
        ++total;
        return;
      }
      for (long long v = depth == 1 ? first_lo : 0;
           v < (depth == 1 ? first_hi : q); ++v) {
        y[depth] = v;
        bool ok = true;
        for (const auto& f : forb) {
          if (f.i >= depth + 1 || f.j >= depth + 1) continue;
          if ((f.i == depth || f.j == depth) && f.hits(y[f.i] - y[f.j], q)) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, depth + 1);
      }
    };
    if (n == 1) return 1LL;  // only the pinned coordinate
    rec(rec, 1);
    return total;
  };

  if (split_jobs <= 1 || n == 1) return count_range(0, q);
  const std::size_t jobs = std::min<std::size_t>(split_jobs,
                                                 static_cast<std::size_t>(q));
  std::vector<long long> partial(jobs, 0);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t) {
    const long long lo = static_cast<long long>(t) * q / static_cast<long long>(jobs);
    const long long hi =
        static_cast<long long>(t + 1) * q / static_cast<long long>(jobs);
    threads.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi); });
  }
  for (auto& th : threads) th.join();
  return std::accumulate(partial.begin(), partial.end(), 0LL);
}

}  // namespace

long long charpoly_finite_field(const Arrangement& a, long long q, int jobs) {
  if (!is_prime(q))
    throw std::invalid_argument("charpoly_finite_field: q must be prime");
  const std::size_t dim = a.coordinates().size() + (a.is_coned() ? 1 : 0);
  const std::uint64_t budget = finite_field_point_budget();
  std::uint64_t points = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (points > budget / static_cast<std::uint64_t>(q))
      throw std::invalid_argument(
          "charpoly_finite_field: q^dim exceeds the point budget (" +
          std::to_string(budget) + "); raise ARRANGEO_MAX_POINTS to override");
    points *= static_cast<std::uint64_t>(q);
  }

  // Group wall constants per ordered index pair (i < j as stored).
  const auto& coords = a.coordinates();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<long long>> grouped;
  for (const auto& h : a.walls()) {
    const std::size_t i = static_cast<std::size_t>(
        std::lower_bound(coords.begin(), coords.end(), h.i) - coords.begin());
    const std::size_t j = static_cast<std::size_t>(
        std::lower_bound(coords.begin(), coords.end(), h.j) - coords.begin());
    grouped[{i, j}].push_back(h.c);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<long long>> consts;
  for (auto& [pr, cs] : grouped) {
    pairs.push_back(pr);
    consts.push_back(std::move(cs));
  }

  const std::size_t n = coords.size();
  const std::size_t split = jobs > 0 ? static_cast<std::size_t>(jobs) : 1;
  // Simultaneous translation of all x-coordinates is free, so pin x_0 = 0
  // and multiply by q.
  if (!a.is_coned())
    return q * count_fixed_scale(n, pairs, consts, 1, q, split);
  // Points with z = 0 lie on the extra wall; for each z != 0 the slice is an
  // affine count with constants scaled by z.
  long long total = 0;
  for (long long z = 1; z < q; ++z)
    total += q * count_fixed_scale(n, pairs, consts, z, q, split);
  return total;
}

}  // namespace arrangeo
