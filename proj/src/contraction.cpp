#include "arrangeo/contraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arrangeo {

bool wall_admissible(const WeightedDigraph& wg, const WallChoice& h) {
  const Digraph& g = wg.graph();
  if (!g.has_vertex(h.s) || !g.has_vertex(h.t) || h.s == h.t) return false;
  return h.w >= 0 && h.w <= wg.weight(h.t) + epsilon(g, h.t, h.s);
}

std::vector<WallChoice> admissible_walls(const WeightedDigraph& wg) {
  const Digraph& g = wg.graph();
  std::vector<WallChoice> walls;
  for (int s : g.vertices())
    for (int t : g.vertices()) {
      if (s == t) continue;
      // x_s - x_t = 0 and x_t - x_s = 0 are the same hyperplane; keep s < t.
      const long long w_min = s < t ? 0 : 1;
      for (long long w = w_min; w <= wg.weight(t) + epsilon(g, t, s); ++w)
        walls.push_back(WallChoice{s, t, w});
    }
  std::sort(walls.begin(), walls.end());
  return walls;
}

int merged_label(const WeightedDigraph& wg) {
  if (wg.vertex_count() == 0)
    throw std::invalid_argument("merged_label: empty digraph");
  return wg.vertices().back() + 1;
}

namespace {

void require_admissible(const WeightedDigraph& wg, const WallChoice& h,
                        const char* who) {
  if (!wall_admissible(wg, h))
    throw std::invalid_argument(std::string(who) +
                                ": wall is not admissible for this digraph");
}

}  // namespace

WeightedDigraph contract(const WeightedDigraph& wg, const WallChoice& h) {
  require_admissible(wg, h, "contract");
  const Digraph& g = wg.graph();
  const int u = merged_label(wg);
  const long long ns = wg.weight(h.s), nt = wg.weight(h.t);

  std::vector<int> verts;
  for (int v : g.vertices())
    if (v != h.s && v != h.t) verts.push_back(v);

  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges())
    if (a != h.s && a != h.t && b != h.s && b != h.t) edges.emplace_back(a, b);
  for (int i : verts) {
    // On the wall x_s = x_t + w, so for w > 0 only the x_t side of the pair
    // intervals can bind from below; at w = 0 the two sides coincide.
    const bool into_u = h.w > 0 ? g.has_edge(i, h.t)
                                : g.has_edge(i, h.s) || g.has_edge(i, h.t);
    if (into_u) edges.emplace_back(i, u);
    bool from_u;
    if (ns + h.w > nt)
      from_u = g.has_edge(h.s, i);
    else if (ns + h.w == nt)
      from_u = g.has_edge(h.s, i) || g.has_edge(h.t, i);
    else
      from_u = g.has_edge(h.t, i);
    if (from_u) edges.emplace_back(u, i);
  }

  std::map<int, long long> weights;
  for (int v : verts) weights[v] = wg.weight(v);
  weights[u] = std::max(ns + h.w, nt);
  verts.push_back(u);
  return WeightedDigraph(Digraph(std::move(verts), std::move(edges)), weights);
}

Arrangement restrict_direct(const WeightedDigraph& wg, const WallChoice& h) {
  require_admissible(wg, h, "restrict_direct");
  const Arrangement full = build_arrangement(wg);
  const int u = merged_label(wg);

  std::vector<int> coords;
  for (int v : full.coordinates())
    if (v != h.s && v != h.t) coords.push_back(v);
  coords.push_back(u);

  // On the wall, x_s = x_u + w and x_t = x_u where x_u names the common
  // value; rewrite every wall not parallel to h in the surviving coordinates.
  std::vector<Hyperplane> walls;
  for (const auto& wall : full.walls()) {
    const bool touches_s = wall.i == h.s || wall.j == h.s;
    const bool touches_t = wall.i == h.t || wall.j == h.t;
    if (touches_s && touches_t) continue;  // h itself or parallel to it
    Hyperplane r = wall;
    if (r.i == h.s) {
      r.i = u;
      r.c -= h.w;
    } else if (r.j == h.s) {
      r.j = u;
      r.c += h.w;
    } else if (r.i == h.t) {
      r.i = u;
    } else if (r.j == h.t) {
      r.j = u;
    }
    walls.push_back(make_wall(r.i, r.j, r.c));
  }
  return Arrangement::affine(std::move(coords), std::move(walls));
}

bool verify_restriction_equiv(const WeightedDigraph& wg, const WallChoice& h) {
  return restrict_direct(wg, h) == build_arrangement(contract(wg, h));
}

}  // namespace arrangeo
