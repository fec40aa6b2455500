#pragma once

#include <array>
#include <optional>
#include <vector>

#include "arrangeo/digraph.hpp"

namespace arrangeo {

// All 16 isomorphism classes of digraphs on three vertices, with fixed
// representatives on {1,2,3} numbered G1..G16 in order of edge count. This
// numbering is referenced throughout the test suite and the CLI tables.
struct CatalogueEntry {
  int id;  // 1..16
  Digraph graph;
};

const std::vector<CatalogueEntry>& three_vertex_catalogue();
const Digraph& catalogue_graph(int id);

// An induced subgraph isomorphic to one of the three obstruction patterns
// (catalogue entries G3, G10, G13); `vertices` are in ascending label order.
struct ForbiddenMatch {
  int catalogue_id = 0;
  std::array<int, 3> vertices{};
  bool operator==(const ForbiddenMatch&) const = default;
};

// First obstruction found, scanning vertex triples in ascending order and
// patterns in the order G3, G10, G13.
std::optional<ForbiddenMatch> contains_forbidden(const Digraph& g);

}  // namespace arrangeo
