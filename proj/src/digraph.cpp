#include "arrangeo/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arrangeo {

namespace {

[[noreturn]] void bad_arg(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

Digraph::Digraph(std::vector<int> vertices,
                 std::vector<std::pair<int, int>> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    bad_arg("digraph: duplicate vertex label");
  if (verts_.size() > 64) bad_arg("digraph: more than 64 vertices unsupported");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(verts_.size(), 0);
  for (const auto& [a, b] : edges_) {
    if (a == b) bad_arg("digraph: loop edge (" + std::to_string(a) + ")");
    if (!has_vertex(a) || !has_vertex(b))
      bad_arg("digraph: edge (" + std::to_string(a) + "," + std::to_string(b) +
              ") uses an undeclared vertex");
    adj_[index_of(a)] |= std::uint64_t{1} << index_of(b);
  }
}

bool Digraph::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

std::size_t Digraph::index_of(int v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v)
    bad_arg("digraph: unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - verts_.begin());
}

bool Digraph::edge_at(std::size_t from_idx, std::size_t to_idx) const {
  return (adj_[from_idx] >> to_idx) & 1;
}

bool Digraph::has_edge(int from, int to) const {
  return edge_at(index_of(from), index_of(to));
}

int epsilon(const Digraph& g, int i, int j) {
  if (i == j) bad_arg("epsilon: arguments must be distinct");
  return g.has_edge(i, j) ? 1 : 0;
}

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& keep) {
  std::vector<int> verts = keep;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (!g.has_vertex(v))
      bad_arg("induced_subgraph: vertex " + std::to_string(v) +
              " not in graph");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges())
    if (std::binary_search(verts.begin(), verts.end(), e.first) &&
        std::binary_search(verts.begin(), verts.end(), e.second))
      edges.push_back(e);
  return Digraph(std::move(verts), std::move(edges));
}

Digraph relabel(const Digraph& g, const std::map<int, int>& map) {
  std::vector<int> verts;
  verts.reserve(g.vertex_count());
  for (int v : g.vertices()) {
    auto it = map.find(v);
    if (it == map.end())
      bad_arg("relabel: no image for vertex " + std::to_string(v));
    verts.push_back(it->second);
  }
  {
    std::vector<int> images = verts;
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      bad_arg("relabel: map is not injective");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges())
    edges.emplace_back(map.at(a), map.at(b));
  return Digraph(std::move(verts), std::move(edges));
}

std::optional<std::map<int, int>> find_isomorphism(const Digraph& a,
                                                   const Digraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  if (n > 8) bad_arg("find_isomorphism: graphs too large");
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if (x != y && a.edge_at(x, y) != b.edge_at(perm[x], perm[y]))
          ok = false;
    if (ok) {
      std::map<int, int> result;
      for (std::size_t k = 0; k < n; ++k)
        result[a.vertices()[k]] = b.vertices()[perm[k]];
      return result;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

TotalOrder::TotalOrder(std::vector<int> minimum_first)
    : seq_(std::move(minimum_first)) {
  std::vector<int> sorted = seq_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    bad_arg("total order: repeated label");
}

int TotalOrder::position(int v) const {
  for (std::size_t k = 0; k < seq_.size(); ++k)
    if (seq_[k] == v) return static_cast<int>(k);
  bad_arg("total order: unknown label " + std::to_string(v));
}

int TotalOrder::minimum() const {
  if (seq_.empty()) bad_arg("total order: empty");
  return seq_.front();
}

bool TotalOrder::is_over(const std::vector<int>& sorted_vertices) const {
  std::vector<int> sorted = seq_;
  std::sort(sorted.begin(), sorted.end());
  return sorted == sorted_vertices;
}

}  // namespace arrangeo
