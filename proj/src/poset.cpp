#include "arrangeo/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

namespace arrangeo {

namespace {

// Wall in coordinate-index form.
struct IdxWall {
  std::size_t i, j;
  long long c;
};

Flat ambient_flat(std::size_t n) {
  Flat f;
  f.rep.resize(n);
  for (std::size_t k = 0; k < n; ++k) f.rep[k] = static_cast<int>(k);
  f.off.assign(n, 0);
  return f;
}

// Intersection of `f` with the wall; nullopt when empty. `coned` selects the
// x_i - x_j = c z reading.
std::optional<Flat> intersect(const Flat& f, const IdxWall& w, bool coned) {
  const int ri = f.rep[w.i], rj = f.rep[w.j];
  if (f.z_zero) {
    // On z = 0 the wall reads x_i = x_j.
    if (ri == rj) return f;
    Flat g = f;
    const int keep = std::min(ri, rj), drop = std::max(ri, rj);
    for (std::size_t k = 0; k < g.rep.size(); ++k)
      if (g.rep[k] == drop) g.rep[k] = keep;
    return g;
  }
  if (ri == rj) {
    const long long diff = f.off[w.i] - f.off[w.j];
    if (diff == w.c) return f;
    if (!coned) return std::nullopt;
    // x_i - x_j = diff * z forces z = 0; the blocks survive, offsets vanish.
    Flat g = f;
    g.z_zero = true;
    std::fill(g.off.begin(), g.off.end(), 0);
    return g;
  }
  // Distinct blocks always merge consistently: express the dropped
  // representative through the kept one via x_i - x_j = c (times z when
  // coned, in which case offsets are in units of z).
  Flat g = f;
  int keep, drop;
  long long shift;  // added to offsets of the dropped block
  if (ri < rj) {
    keep = ri;
    drop = rj;
    shift = f.off[w.i] - f.off[w.j] - w.c;
  } else {
    keep = rj;
    drop = ri;
    shift = f.off[w.j] - f.off[w.i] + w.c;
  }
  for (std::size_t k = 0; k < g.rep.size(); ++k)
    if (g.rep[k] == drop) {
      g.rep[k] = keep;
      g.off[k] += shift;
    }
  return g;
}

// Intersection with the extra wall z = 0 of a coned arrangement.
Flat intersect_z0(const Flat& f) {
  Flat g = f;
  g.z_zero = true;
  std::fill(g.off.begin(), g.off.end(), 0);
  return g;
}

bool on_wall(const Flat& f, const IdxWall& w, bool coned) {
  if (coned && f.z_zero) return f.rep[w.i] == f.rep[w.j];
  return f.rep[w.i] == f.rep[w.j] && f.off[w.i] - f.off[w.j] == w.c;
}

std::vector<long long> flat_key(const Flat& f) {
  std::vector<long long> key;
  key.reserve(1 + f.rep.size() + f.off.size());
  key.push_back(f.z_zero ? 1 : 0);
  for (int r : f.rep) key.push_back(r);
  for (long long o : f.off) key.push_back(o);
  return key;
}

int flat_dim(const Flat& f, bool coned) {
  std::vector<int> reps = f.rep;
  std::sort(reps.begin(), reps.end());
  const auto blocks =
      std::unique(reps.begin(), reps.end()) - reps.begin();
  return static_cast<int>(blocks) + (coned && !f.z_zero ? 1 : 0);
}

std::size_t popcount_bits(const std::vector<std::uint64_t>& bits) {
  std::size_t n = 0;
  for (auto word : bits) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

bool subset_bits(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

}  // namespace

IntersectionPoset::IntersectionPoset(const Arrangement& a) {
  const std::size_t n = a.coordinates().size();
  const bool coned = a.is_coned();

  std::vector<IdxWall> walls;
  walls.reserve(a.walls().size());
  for (const auto& h : a.walls()) {
    std::size_t i = static_cast<std::size_t>(
        std::lower_bound(a.coordinates().begin(), a.coordinates().end(), h.i) -
        a.coordinates().begin());
    std::size_t j = static_cast<std::size_t>(
        std::lower_bound(a.coordinates().begin(), a.coordinates().end(), h.j) -
        a.coordinates().begin());
    walls.push_back(IdxWall{i, j, h.c});
  }
  const std::size_t wall_bits = walls.size() + (coned ? 1 : 0);
  const std::size_t words = (wall_bits + 63) / 64;

  // Incremental closure: after processing wall k, `flats` holds every
  // nonempty intersection of a subset of the first k hyperplanes.
  std::vector<Flat> flats{ambient_flat(n)};
  std::map<std::vector<long long>, std::size_t> seen;
  seen.emplace(flat_key(flats[0]), 0);
  auto add = [&](const Flat& f) {
    auto key = flat_key(f);
    if (seen.emplace(std::move(key), flats.size()).second) flats.push_back(f);
  };
  const std::size_t total_walls = walls.size() + (coned ? 1 : 0);
  for (std::size_t w = 0; w < total_walls; ++w) {
    const std::size_t existing = flats.size();
    for (std::size_t k = 0; k < existing; ++k) {
      if (w < walls.size()) {
        if (auto g = intersect(flats[k], walls[w], coned)) add(*g);
      } else {
        add(intersect_z0(flats[k]));
      }
    }
  }

  entries_.reserve(flats.size());
  for (const auto& f : flats) {
    PosetEntry e;
    e.flat = f;
    e.dim = flat_dim(f, coned);
    e.contains_bits.assign(std::max<std::size_t>(words, 1), 0);
    for (std::size_t w = 0; w < walls.size(); ++w)
      if (on_wall(f, walls[w], coned))
        e.contains_bits[w / 64] |= std::uint64_t{1} << (w % 64);
    if (coned && f.z_zero)
      e.contains_bits[walls.size() / 64] |= std::uint64_t{1}
                                            << (walls.size() % 64);
    entries_.push_back(std::move(e));
  }

  // Distinct flats lie on distinct hyperplane sets, and strict containment
  // of flats is strict containment of those sets; sorting by set size makes
  // the Mobius recursion a single forward sweep.
  std::sort(entries_.begin(), entries_.end(),
            [](const PosetEntry& x, const PosetEntry& y) {
              const auto px = popcount_bits(x.contains_bits);
              const auto py = popcount_bits(y.contains_bits);
              if (px != py) return px < py;
              return flat_key(x.flat) < flat_key(y.flat);
            });
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    long long mu = k == 0 ? 1 : 0;
    if (k > 0)
      for (std::size_t m = 0; m < k; ++m)
        if (contains(m, k)) mu -= entries_[m].mobius;
    entries_[k].mobius = mu;
  }
}

bool IntersectionPoset::contains(std::size_t a, std::size_t b) const {
  if (a == b) return true;
  return subset_bits(entries_[a].contains_bits, entries_[b].contains_bits) &&
         entries_[a].contains_bits != entries_[b].contains_bits;
}

IntersectionPoset intersection_poset(const Arrangement& a) {
  return IntersectionPoset(a);
}

}  // namespace arrangeo
