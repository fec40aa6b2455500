#include "arrangeo/freeness.hpp"

#include <algorithm>
#include <stdexcept>

#include "arrangeo/order_search.hpp"

namespace arrangeo {

FreenessReport is_free(const WeightedDigraph& wg) {
  if (wg.vertex_count() < 2)
    throw std::invalid_argument("is_free: need at least two vertices");
  FreenessReport report;
  if (auto order = find_admissible_order(wg.graph())) {
    report.free = true;
    report.witness_order = *order;
    report.exponents = exponents_formula(wg, *order);
  } else {
    report.forbidden_witness = contains_forbidden(wg.graph());
  }
  return report;
}

std::map<int, long long> adjacency_below_counts(const Digraph& g,
                                                const TotalOrder& order) {
  if (!order.is_over(g.vertices()))
    throw std::invalid_argument(
        "adjacency_below_counts: order is over a different vertex set");
  std::map<int, long long> b;
  const auto& seq = order.sequence();
  for (std::size_t p = 1; p < seq.size(); ++p) {
    long long count = 0;
    for (std::size_t q = 0; q < p; ++q)
      count += (g.has_edge(seq[p], seq[q]) ? 1 : 0) +
               (g.has_edge(seq[q], seq[p]) ? 1 : 0);
    b[seq[p]] = count;
  }
  return b;
}

std::map<int, long long> b_values(const Digraph& g, const TotalOrder& order) {
  if (!satisfies_a1a2(g, order))
    throw std::invalid_argument("b_values: order does not satisfy (A1)/(A2)");
  return adjacency_below_counts(g, order);
}

std::map<int, long long> d_values(const SignedGraph& s,
                                  const TotalOrder& order) {
  if (!order.is_over(s.vertices()))
    throw std::invalid_argument("d_values: order is over a different vertex set");
  std::map<int, long long> d;
  const auto& seq = order.sequence();
  for (std::size_t p = 1; p < seq.size(); ++p) {
    long long count = 0;
    for (std::size_t q = 0; q < p; ++q) count += s.sign(seq[p], seq[q]);
    d[seq[p]] = count;
  }
  return d;
}

ExponentMultiset exponents_formula(const WeightedDigraph& wg,
                                   const TotalOrder& order) {
  const auto b = b_values(wg.graph(), order);
  const long long total = wg.total_weight();
  const long long l = static_cast<long long>(wg.vertex_count());
  ExponentMultiset exps{0, 1};
  for (const auto& [v, bv] : b)
    exps.push_back(total + l - order.ord(v) + 1 + bv);
  std::sort(exps.begin(), exps.end());
  return exps;
}

IntPolynomial formula_charpoly(const WeightedDigraph& wg,
                               const TotalOrder& order) {
  const auto b = b_values(wg.graph(), order);
  const long long total = wg.total_weight();
  const long long l = static_cast<long long>(wg.vertex_count());
  std::vector<long long> roots{0};
  for (const auto& [v, bv] : b)
    roots.push_back(total + l - order.ord(v) + 1 + bv);
  return IntPolynomial::from_roots(roots);
}

std::map<std::pair<int, int>, long long> ziegler_multiplicity(
    const WeightedDigraph& wg) {
  const Digraph& g = wg.graph();
  const auto& vs = g.vertices();
  std::map<std::pair<int, int>, long long> mult;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      mult[{vs[a], vs[b]}] = wg.weight(vs[a]) + wg.weight(vs[b]) +
                             epsilon(g, vs[a], vs[b]) +
                             epsilon(g, vs[b], vs[a]) + 1;
  return mult;
}

}  // namespace arrangeo
