#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "arrangeo/catalogue.hpp"
#include "arrangeo/digraph.hpp"
#include "arrangeo/order_search.hpp"
#include "arrangeo/signed_graph.hpp"
#include "doctest.h"

using namespace arrangeo;

namespace {

// Straight-from-the-definition triple check, minimum-first sequence. Kept
// free of bitmask tricks so it can serve as an oracle for the library code.
bool a1a2_naive(const Digraph& g, const std::vector<int>& seq) {
  for (std::size_t kp = 0; kp < seq.size(); ++kp)
    for (std::size_t ip = 0; ip < kp; ++ip)
      for (std::size_t jp = 0; jp < kp; ++jp) {
        if (ip == jp) continue;
        const int i = seq[ip], j = seq[jp], k = seq[kp];
        if (g.has_edge(i, j) && !g.has_edge(i, k) && !g.has_edge(k, j))
          return false;
        if (g.has_edge(i, k) && g.has_edge(k, j) && !g.has_edge(i, j))
          return false;
      }
  return true;
}

bool se_naive(const SignedGraph& s, const std::vector<int>& seq) {
  for (std::size_t kp = 0; kp < seq.size(); ++kp)
    for (std::size_t ip = 0; ip < kp; ++ip)
      for (std::size_t jp = 0; jp < kp; ++jp) {
        if (ip == jp) continue;
        const int i = seq[ip], j = seq[jp], k = seq[kp];
        const int ski = s.sign(k, i), sij = s.sign(i, j), skj = s.sign(k, j);
        if (ski != 0 && sij != 0 && sij != ski && skj != sij) return false;
        if (ski != 0 && skj == ski && sij != ski) return false;
      }
  return true;
}

bool exists_order_naive(const Digraph& g) {
  std::vector<int> seq = g.vertices();
  std::sort(seq.begin(), seq.end());
  do {
    if (a1a2_naive(g, seq)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

bool eliminable_naive(const SignedGraph& s) {
  std::vector<int> seq = s.vertices();
  std::sort(seq.begin(), seq.end());
  do {
    if (se_naive(s, seq)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v + 1;
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b && coin(rng)) edges.emplace_back(a, b);
  return Digraph(std::move(verts), std::move(edges));
}

// All digraphs on {1,2,3}, indexed by the 6 ordered-pair bits.
Digraph three_vertex_digraph(unsigned bits) {
  static const std::pair<int, int> pairs[6] = {{1, 2}, {2, 1}, {1, 3},
                                               {3, 1}, {2, 3}, {3, 2}};
  std::vector<std::pair<int, int>> edges;
  for (unsigned k = 0; k < 6; ++k)
    if (bits >> k & 1) edges.push_back(pairs[k]);
  return Digraph({1, 2, 3}, std::move(edges));
}

}  // namespace

TEST_CASE("digraph normalizes input and validates it") {
  const Digraph g({3, 1, 2}, {{2, 1}, {2, 1}, {1, 3}});
  CHECK(g.vertices() == std::vector<int>{1, 2, 3});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.has_vertex(3));
  CHECK(!g.has_vertex(4));

  CHECK_THROWS_AS(Digraph({1, 1, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(g.index_of(9), std::invalid_argument);
}

TEST_CASE("epsilon is the edge indicator on distinct vertices") {
  const Digraph g({1, 2, 3}, {{2, 1}});
  CHECK(epsilon(g, 2, 1) == 1);
  CHECK(epsilon(g, 1, 2) == 0);
  CHECK(epsilon(g, 1, 3) == 0);
  CHECK_THROWS_AS(epsilon(g, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(g, 1, 7), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
  const Digraph g({1, 2, 3, 4}, {{2, 1}, {3, 1}, {4, 2}, {3, 4}});
  const Digraph h = induced_subgraph(g, {4, 2, 1});
  CHECK(h.vertices() == std::vector<int>{1, 2, 4});
  CHECK(h.edges() == std::vector<std::pair<int, int>>{{2, 1}, {4, 2}});
  CHECK_THROWS_AS(induced_subgraph(g, {1, 5}), std::invalid_argument);
}

TEST_CASE("relabel renames vertices and preserves structure") {
  const Digraph g({1, 2, 3}, {{2, 1}, {1, 3}});
  const Digraph h = relabel(g, {{1, 10}, {2, 30}, {3, 20}});
  CHECK(h.vertices() == std::vector<int>{10, 20, 30});
  CHECK(h.has_edge(30, 10));
  CHECK(h.has_edge(10, 20));
  CHECK(h.edge_count() == 2);
  CHECK_THROWS_AS(relabel(g, {{1, 5}, {2, 5}, {3, 6}}), std::invalid_argument);
  CHECK_THROWS_AS(relabel(g, std::map<int, int>{{1, 5}}), std::invalid_argument);
}

TEST_CASE("find_isomorphism reports a correct bijection or nothing") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph a = random_digraph(rng, 5, 0.4);
    std::vector<int> image = {11, 7, 29, 3, 17};
    std::shuffle(image.begin(), image.end(), rng);
    std::map<int, int> perm;
    for (int v = 1; v <= 5; ++v)
      perm[v] = image[static_cast<std::size_t>(v - 1)];
    const Digraph b = relabel(a, perm);
    const auto iso = find_isomorphism(a, b);
    REQUIRE(iso.has_value());
    for (int x : a.vertices())
      for (int y : a.vertices())
        if (x != y) CHECK(a.has_edge(x, y) == b.has_edge(iso->at(x), iso->at(y)));
  }
  // Same vertex and edge counts, different structure: in-star vs path.
  CHECK(!find_isomorphism(catalogue_graph(3), catalogue_graph(4)).has_value());
  CHECK(!find_isomorphism(Digraph({1, 2}, {}), Digraph({1, 2, 3}, {})).has_value());
}

TEST_CASE("total order positions, minimum, and validation") {
  const TotalOrder o({3, 1, 2});
  CHECK(o.minimum() == 3);
  CHECK(o.position(3) == 0);
  CHECK(o.ord(3) == 1);
  CHECK(o.ord(2) == 3);
  CHECK(o.is_over({1, 2, 3}));
  CHECK(!o.is_over({1, 2, 4}));
  CHECK(!o.is_over({1, 2}));
  CHECK_THROWS_AS(o.position(9), std::invalid_argument);
  CHECK_THROWS_AS(TotalOrder({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("triple conditions quantify over distinct pairs only") {
  // A bidirected pair with a third isolated vertex satisfies the
  // conditions; reading the second condition at i == j would forbid it.
  const Digraph both = catalogue_graph(6);
  CHECK(satisfies_a1a2(both, TotalOrder({1, 2, 3})));
  CHECK(find_admissible_order(both).has_value());
}

TEST_CASE("satisfies_a1a2 validates the order and matches the naive check") {
  const Digraph g({1, 2, 3}, {{2, 1}});
  CHECK_THROWS_AS(satisfies_a1a2(g, TotalOrder({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(satisfies_a1a2(g, TotalOrder({1, 2, 4})), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Digraph h = random_digraph(rng, n, 0.35);
    std::vector<int> seq = h.vertices();
    std::shuffle(seq.begin(), seq.end(), rng);
    CHECK(satisfies_a1a2(h, TotalOrder(seq)) == a1a2_naive(h, seq));
  }
}

TEST_CASE("order search agrees with exhaustive enumeration") {
  // Every 3-vertex digraph, then random 4- and 5-vertex ones.
  for (unsigned bits = 0; bits < 64; ++bits) {
    const Digraph g = three_vertex_digraph(bits);
    const auto found = find_admissible_order(g);
    CHECK(found.has_value() == exists_order_naive(g));
    if (found) CHECK(a1a2_naive(g, found->sequence()));
  }
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph g = random_digraph(rng, 4 + static_cast<int>(rng() % 2), 0.4);
    const auto found = find_admissible_order(g);
    CHECK(found.has_value() == exists_order_naive(g));
    if (found) CHECK(a1a2_naive(g, found->sequence()));
  }
}

TEST_CASE("order search is deterministic: maximum first, low labels first") {
  CHECK(find_admissible_order(catalogue_graph(1))->sequence() ==
        std::vector<int>{3, 2, 1});
  // All-pairs digraph on {1,2,3}: every order works, same first pick.
  CHECK(find_admissible_order(catalogue_graph(16))->sequence() ==
        std::vector<int>{3, 2, 1});
}

TEST_CASE("companion signed graph signs pairs by direction count") {
  const Digraph g({1, 2, 3}, {{2, 3}, {3, 2}, {2, 1}});
  const SignedGraph s = signed_graph(g);
  CHECK(s.sign(2, 3) == 1);
  CHECK(s.sign(3, 2) == 1);
  CHECK(s.sign(1, 2) == 0);
  CHECK(s.sign(1, 3) == -1);
  CHECK(s.plus_edges() == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(s.minus_edges() == std::vector<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("signed graph rejects malformed input") {
  CHECK_THROWS_AS(SignedGraph({1, 2}, {{1, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph({1, 2}, {{1, 3}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph({1, 2}, {{1, 2}}, {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph({1, 1}, {}, {}), std::invalid_argument);
}

TEST_CASE("signed eliminability agrees with the naive check and search") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const SignedGraph s = signed_graph(random_digraph(rng, n, 0.4));
    std::vector<int> seq = s.vertices();
    std::shuffle(seq.begin(), seq.end(), rng);
    CHECK(signed_eliminability_holds(s, TotalOrder(seq)) == se_naive(s, seq));
    const auto found = is_signed_eliminable(s);
    CHECK(found.has_value() == eliminable_naive(s));
    if (found) CHECK(se_naive(s, found->sequence()));
  }
  const SignedGraph s = signed_graph(catalogue_graph(1));
  CHECK_THROWS_AS(signed_eliminability_holds(s, TotalOrder({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("catalogue lists all sixteen classes exactly once") {
  const auto& cat = three_vertex_catalogue();
  REQUIRE(cat.size() == 16);
  const std::size_t expected_edge_count[16] = {0, 1, 2, 2, 2, 2, 3, 3,
                                               3, 3, 4, 4, 4, 4, 5, 6};
  for (std::size_t k = 0; k < 16; ++k) {
    CHECK(cat[k].id == static_cast<int>(k) + 1);
    CHECK(cat[k].graph.vertices() == std::vector<int>{1, 2, 3});
    CHECK(cat[k].graph.edge_count() == expected_edge_count[k]);
  }
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = a + 1; b < 16; ++b)
      CHECK(!find_isomorphism(cat[a].graph, cat[b].graph).has_value());
  // Completeness: every digraph on three labels is isomorphic to exactly
  // one representative.
  for (unsigned bits = 0; bits < 64; ++bits) {
    const Digraph g = three_vertex_digraph(bits);
    int matches = 0;
    for (const auto& entry : cat)
      if (find_isomorphism(g, entry.graph)) ++matches;
    CHECK(matches == 1);
  }
  CHECK_THROWS_AS(catalogue_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(catalogue_graph(17), std::invalid_argument);
}

TEST_CASE("forbidden patterns are exactly the order-less classes") {
  for (const auto& entry : three_vertex_catalogue()) {
    const bool orderless = !find_admissible_order(entry.graph).has_value();
    CHECK(orderless == (entry.id == 3 || entry.id == 10 || entry.id == 13));
    const auto hit = contains_forbidden(entry.graph);
    CHECK(hit.has_value() == orderless);
    if (hit) {
      CHECK(hit->catalogue_id == entry.id);
      CHECK(hit->vertices == std::array<int, 3>{1, 2, 3});
    }
  }
}

TEST_CASE("forbidden search scans triples ascending and reports locations") {
  // Plant a directed path 5 -> 2 -> 7 among isolated vertices.
  const Digraph g({1, 2, 5, 7, 9}, {{5, 2}, {2, 7}});
  const auto hit = contains_forbidden(g);
  REQUIRE(hit.has_value());
  CHECK(hit->catalogue_id == 3);
  CHECK(hit->vertices == std::array<int, 3>{2, 5, 7});
  CHECK(!contains_forbidden(catalogue_graph(16)).has_value());
  CHECK(!contains_forbidden(Digraph({1, 2}, {{1, 2}})).has_value());
}

TEST_CASE("order existence equals eliminability plus no forbidden triple") {
  std::mt19937_64 rng(14);
  for (unsigned bits = 0; bits < 64; ++bits) {
    const Digraph g = three_vertex_digraph(bits);
    const bool lhs = find_admissible_order(g).has_value();
    const bool rhs = is_signed_eliminable(signed_graph(g)).has_value() &&
                     !contains_forbidden(g).has_value();
    CHECK(lhs == rhs);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = random_digraph(rng, 5, 0.45);
    const bool lhs = find_admissible_order(g).has_value();
    const bool rhs = is_signed_eliminable(signed_graph(g)).has_value() &&
                     !contains_forbidden(g).has_value();
    CHECK(lhs == rhs);
  }
}
