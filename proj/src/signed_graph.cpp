#include "arrangeo/signed_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "arrangeo/order_search.hpp"

namespace arrangeo {

namespace {

std::pair<int, int> norm(std::pair<int, int> e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

void check_edges(const std::vector<int>& verts,
                 std::vector<std::pair<int, int>>& edges, const char* kind) {
  for (auto& e : edges) {
    e = norm(e);
    if (e.first == e.second)
      throw std::invalid_argument(std::string("signed graph: loop ") + kind +
                                  " edge");
    if (!std::binary_search(verts.begin(), verts.end(), e.first) ||
        !std::binary_search(verts.begin(), verts.end(), e.second))
      throw std::invalid_argument(std::string("signed graph: ") + kind +
                                  " edge uses an undeclared vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

SignedGraph::SignedGraph(std::vector<int> vertices,
                         std::vector<std::pair<int, int>> plus_edges,
                         std::vector<std::pair<int, int>> minus_edges)
    : verts_(std::move(vertices)),
      plus_(std::move(plus_edges)),
      minus_(std::move(minus_edges)) {
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw std::invalid_argument("signed graph: duplicate vertex label");
  check_edges(verts_, plus_, "plus");
  check_edges(verts_, minus_, "minus");
  for (const auto& e : plus_)
    if (std::binary_search(minus_.begin(), minus_.end(), e))
      throw std::invalid_argument("signed graph: pair carries both signs");
}

int SignedGraph::sign(int i, int j) const {
  const auto e = norm({i, j});
  if (std::binary_search(plus_.begin(), plus_.end(), e)) return 1;
  if (std::binary_search(minus_.begin(), minus_.end(), e)) return -1;
  return 0;
}

SignedGraph signed_graph(const Digraph& g) {
  std::vector<std::pair<int, int>> plus, minus;
  const auto& vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const bool ab = g.edge_at(a, b), ba = g.edge_at(b, a);
      if (ab && ba)
        plus.emplace_back(vs[a], vs[b]);
      else if (!ab && !ba)
        minus.emplace_back(vs[a], vs[b]);
    }
  return SignedGraph(vs, std::move(plus), std::move(minus));
}

namespace {

// (SE1)/(SE2) restricted to a fixed maximum k over the vertices listed in
// `below` (as labels).
bool signed_triples_ok_at(const SignedGraph& s, int k,
                          const std::vector<int>& below) {
  for (std::size_t x = 0; x < below.size(); ++x) {
    const int i = below[x];
    const int ski = s.sign(k, i);
    if (ski == 0) continue;
    for (std::size_t y = 0; y < below.size(); ++y) {
      if (x == y) continue;
      const int j = below[y];
      const int sij = s.sign(i, j);
      if (sij != 0 && sij == -ski && s.sign(k, j) != sij)
        return false;  // (SE1)
      if (x < y && s.sign(k, j) == ski && sij != ski)
        return false;  // (SE2)
    }
  }
  return true;
}

}  // namespace

bool signed_eliminability_holds(const SignedGraph& s, const TotalOrder& order) {
  if (!order.is_over(s.vertices()))
    throw std::invalid_argument(
        "signed_eliminability_holds: order is over a different vertex set");
  std::vector<int> below;
  for (int v : order.sequence()) {
    if (!signed_triples_ok_at(s, v, below)) return false;
    below.push_back(v);
  }
  return true;
}

std::optional<TotalOrder> is_signed_eliminable(const SignedGraph& s) {
  const auto& vs = s.vertices();
  return detail::search_order_max_first(
      vs, [&s, &vs](std::size_t v, std::uint32_t below_mask) {
        std::vector<int> below;
        for (std::uint32_t m = below_mask; m; m &= m - 1)
          below.push_back(vs[static_cast<std::size_t>(std::countr_zero(m))]);
        return signed_triples_ok_at(s, vs[v], below);
      });
}

}  // namespace arrangeo
