#include "arrangeo/catalogue.hpp"

#include <stdexcept>

namespace arrangeo {

namespace {

std::vector<CatalogueEntry> make_catalogue() {
  using E = std::vector<std::pair<int, int>>;
  const std::vector<int> v{1, 2, 3};
  std::vector<CatalogueEntry> cat;
  auto add = [&](int id, E edges) {
    cat.push_back({id, Digraph(v, std::move(edges))});
  };
  add(1, {});
  add(2, {{2, 1}});
  add(3, {{2, 1}, {1, 3}});
  add(4, {{2, 1}, {3, 1}});
  add(5, {{2, 1}, {2, 3}});
  add(6, {{3, 2}, {2, 3}});
  add(7, {{2, 1}, {3, 2}, {2, 3}});
  add(8, {{1, 2}, {3, 2}, {2, 3}});
  add(9, {{2, 1}, {1, 3}, {2, 3}});
  add(10, {{2, 1}, {1, 3}, {3, 2}});
  add(11, {{1, 2}, {1, 3}, {3, 2}, {2, 3}});
  add(12, {{2, 1}, {3, 1}, {3, 2}, {2, 3}});
  add(13, {{2, 1}, {1, 3}, {3, 2}, {2, 3}});
  add(14, {{2, 1}, {1, 2}, {3, 2}, {2, 3}});
  add(15, {{2, 1}, {1, 2}, {3, 2}, {2, 3}, {1, 3}});
  add(16, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
  return cat;
}

}  // namespace

const std::vector<CatalogueEntry>& three_vertex_catalogue() {
  static const std::vector<CatalogueEntry> cat = make_catalogue();
  return cat;
}

const Digraph& catalogue_graph(int id) {
  const auto& cat = three_vertex_catalogue();
  if (id < 1 || id > static_cast<int>(cat.size()))
    throw std::invalid_argument("catalogue_graph: id out of range");
  return cat[static_cast<std::size_t>(id - 1)].graph;
}

std::optional<ForbiddenMatch> contains_forbidden(const Digraph& g) {
  static const int pattern_ids[] = {3, 10, 13};
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const Digraph sub = induced_subgraph(g, {vs[a], vs[b], vs[c]});
        for (int id : pattern_ids)
          if (find_isomorphism(sub, catalogue_graph(id)))
            return ForbiddenMatch{id, {vs[a], vs[b], vs[c]}};
      }
  return std::nullopt;
}

}  // namespace arrangeo
