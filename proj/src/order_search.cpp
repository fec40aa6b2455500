#include "arrangeo/order_search.hpp"

#include <bit>
#include <stdexcept>

namespace arrangeo {

namespace {

// (A1)/(A2) restricted to a fixed maximum k over the index set `below`.
bool triples_ok_at(const Digraph& g, std::size_t k, std::uint32_t below) {
  for (std::uint32_t im = below; im; im &= im - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(im));
    for (std::uint32_t jm = below; jm; jm &= jm - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(jm));
      if (i == j) continue;
      if (g.edge_at(i, j) && !g.edge_at(i, k) && !g.edge_at(k, j))
        return false;  // (A1)
      if (g.edge_at(i, k) && g.edge_at(k, j) && !g.edge_at(i, j))
        return false;  // (A2)
    }
  }
  return true;
}

}  // namespace

bool satisfies_a1a2(const Digraph& g, const TotalOrder& order) {
  if (!order.is_over(g.vertices()))
    throw std::invalid_argument("satisfies_a1a2: order is over a different vertex set");
  std::uint32_t below = 0;
  for (int v : order.sequence()) {
    const std::size_t k = g.index_of(v);
    if (!triples_ok_at(g, k, below)) return false;
    below |= std::uint32_t{1} << k;
  }
  return true;
}

std::optional<TotalOrder> find_admissible_order(const Digraph& g) {
  return detail::search_order_max_first(
      g.vertices(), [&g](std::size_t v, std::uint32_t below) {
        return triples_ok_at(g, v, below);
      });
}

namespace detail {

namespace {

struct Search {
  const std::vector<int>& verts;
  const std::function<bool(std::size_t, std::uint32_t)>& max_ok;
  std::vector<char> dead;
  std::vector<int> seq;

  bool solve(std::uint32_t mask) {
    if (mask == 0) return true;
    if (dead[mask]) return false;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      const auto idx = static_cast<std::size_t>(std::countr_zero(m));
      const std::uint32_t below = mask & ~(std::uint32_t{1} << idx);
      if (max_ok(idx, below) && solve(below)) {
        seq[static_cast<std::size_t>(std::popcount(mask)) - 1] = verts[idx];
        return true;
      }
    }
    dead[mask] = 1;
    return false;
  }
};

}  // namespace

std::optional<TotalOrder> search_order_max_first(
    const std::vector<int>& vertices,
    const std::function<bool(std::size_t, std::uint32_t)>& max_ok) {
  const std::size_t n = vertices.size();
  if (n > 20)
    throw std::invalid_argument("order search: more than 20 vertices unsupported");
  Search s{vertices, max_ok,
           std::vector<char>(std::size_t{1} << n, 0),
           std::vector<int>(n)};
  if (!s.solve((std::uint32_t{1} << n) - 1)) return std::nullopt;
  return TotalOrder(std::move(s.seq));
}

}  // namespace detail

}  // namespace arrangeo
