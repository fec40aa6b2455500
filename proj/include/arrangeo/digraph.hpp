#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace arrangeo {

// Directed graph on distinct small integer labels. No loops, no parallel
// edges, every edge endpoint must be a declared vertex. Vertices and edges
// are kept sorted so structurally equal graphs compare equal.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges);

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(int v) const;
  std::size_t index_of(int v) const;  // throws std::invalid_argument
  bool edge_at(std::size_t from_idx, std::size_t to_idx) const;
  bool has_edge(int from, int to) const;  // labels must exist

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<int> verts_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;  // adj_[a] bit b set iff edge verts_[a] -> verts_[b]
};

// 1 if (i,j) is an edge of g, 0 otherwise; i and j must be distinct vertices.
int epsilon(const Digraph& g, int i, int j);

// Subgraph induced on `keep`, which must be a subset of the vertex set.
Digraph induced_subgraph(const Digraph& g, const std::vector<int>& keep);

// Copy of g with vertices renamed through `map` (must be injective and
// defined on every vertex).
Digraph relabel(const Digraph& g, const std::map<int, int>& map);

// Digraph isomorphism by exhaustive matching; intended for small graphs
// (|V| <= 8). Returns the first vertex bijection a->b found, if any.
std::optional<std::map<int, int>> find_isomorphism(const Digraph& a,
                                                   const Digraph& b);

// Total order on a vertex set; sequence()[0] is the minimum.
class TotalOrder {
 public:
  TotalOrder() = default;
  explicit TotalOrder(std::vector<int> minimum_first);

  const std::vector<int>& sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  int position(int v) const;  // 0-based, throws on unknown label
  int ord(int v) const { return position(v) + 1; }
  int minimum() const;
  bool is_over(const std::vector<int>& sorted_vertices) const;

  bool operator==(const TotalOrder&) const = default;

 private:
  std::vector<int> seq_;
};

}  // namespace arrangeo
