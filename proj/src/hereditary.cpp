#include "arrangeo/hereditary.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "arrangeo/canonical.hpp"
#include "arrangeo/freeness.hpp"

namespace arrangeo {

namespace {

bool expandable(const WeightedDigraph& node, std::size_t depth,
                const ClosureOptions& opts, bool* bounded) {
  if (node.vertex_count() < 3) return false;
  if (opts.max_depth && static_cast<int>(depth) >= *opts.max_depth) {
    *bounded = true;
    return false;
  }
  if (opts.max_weight) {
    for (int v : node.vertices())
      if (node.weight(v) > *opts.max_weight) {
        *bounded = true;
        return false;
      }
  }
  return true;
}

}  // namespace

std::vector<ClosureNode> contraction_closure(const WeightedDigraph& wg,
                                             const ClosureOptions& opts) {
  std::vector<ClosureNode> out;
  std::map<std::vector<long long>, std::size_t> seen;
  std::deque<std::size_t> queue;
  bool bounded = false;

  out.push_back({canonical_form(wg), {}});
  seen.emplace(canonical_key(wg), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    // Copy, not reference: out grows while we expand.
    const ClosureNode cur = out[at];
    if (!expandable(cur.node, cur.chain.size(), opts, &bounded)) continue;
    for (const WallChoice& h : admissible_walls(cur.node)) {
      WeightedDigraph child = canonical_form(contract(cur.node, h));
      auto key = canonical_key(child);
      if (seen.contains(key)) continue;
      seen.emplace(std::move(key), out.size());
      std::vector<WallChoice> chain = cur.chain;
      chain.push_back(h);
      queue.push_back(out.size());
      out.push_back({std::move(child), std::move(chain)});
    }
  }
  (void)bounded;
  return out;
}

WeightedDigraph replay_chain(const WeightedDigraph& wg,
                             const std::vector<WallChoice>& chain) {
  WeightedDigraph node = canonical_form(wg);
  for (const WallChoice& h : chain) node = canonical_form(contract(node, h));
  return node;
}

namespace {

struct Verdict {
  bool hereditarily_free = false;
  std::optional<WallChoice> failing_wall;  // absent when the node itself is non-free
};

struct HereditaryEngine {
  const ClosureOptions& opts;
  std::map<std::vector<long long>, Verdict> memo;
  bool bounded = false;

  bool visit(const WeightedDigraph& node, std::size_t depth) {
    auto key = canonical_key(node);
    if (auto it = memo.find(key); it != memo.end())
      return it->second.hereditarily_free;
    Verdict v;
    if (!is_free(node).free) {
      v.hereditarily_free = false;
    } else if (!expandable(node, depth, opts, &bounded)) {
      v.hereditarily_free = true;
    } else {
      v.hereditarily_free = true;
      for (const WallChoice& h : admissible_walls(node)) {
        if (!visit(canonical_form(contract(node, h)), depth + 1)) {
          v.hereditarily_free = false;
          v.failing_wall = h;
          break;
        }
      }
    }
    memo.emplace(std::move(key), v);
    return v.hereditarily_free;
  }
};

}  // namespace

HereditaryReport is_hereditarily_free(const WeightedDigraph& wg,
                                      const ClosureOptions& opts) {
  HereditaryEngine engine{opts, {}, false};
  WeightedDigraph root = canonical_form(wg);
  HereditaryReport report;
  report.hereditarily_free = engine.visit(root, 0);
  report.nodes_visited = engine.memo.size();
  report.search_bounded = engine.bounded;
  if (!report.hereditarily_free) {
    std::vector<WallChoice> chain;
    WeightedDigraph node = root;
    while (true) {
      const Verdict& v = engine.memo.at(canonical_key(node));
      if (!v.failing_wall) break;  // the node itself is non-free
      chain.push_back(*v.failing_wall);
      node = canonical_form(contract(node, *v.failing_wall));
    }
    report.counterexample_chain = std::move(chain);
    report.failing_node = std::move(node);
  }
  return report;
}

std::pair<std::vector<WallChoice>, WeightedDigraph> shi6_counterexample_chain(
    const std::vector<long long>& weights) {
  if (weights.size() != 6)
    throw std::invalid_argument(
        "shi6_counterexample_chain: need exactly six weights");
  std::map<int, long long> wmap;
  for (int v = 1; v <= 6; ++v) wmap[v] = weights[static_cast<std::size_t>(v - 1)];
  const WeightedDigraph base(shi_model(6, 0).graph(), wmap);

  // Merge {1,4} one unit above the top of the x_1 - x_4 interval's edge
  // range, then {3,6} likewise; the survivors 5 and 2 then meet on a wall
  // whose offset keeps the merged weight at max(n_2, n_5). The three-vertex
  // result is a directed path, which admits no compatible order.
  std::vector<WallChoice> chain;
  WeightedDigraph node = base;
  const WallChoice h1{1, 4, node.weight(4) + 1};
  chain.push_back(h1);
  node = contract(node, h1);
  const WallChoice h2{3, 6, node.weight(6) + 1};
  chain.push_back(h2);
  node = contract(node, h2);
  const WallChoice h3{5, 2, node.weight(5) >= node.weight(2) ? 0 : node.weight(2)};
  chain.push_back(h3);
  node = contract(node, h3);

  if (is_free(node).free)
    throw std::logic_error("shi6_counterexample_chain: final node is free");
  return {std::move(chain), std::move(node)};
}

bool shi_flattening_check(int l, long long m) {
  if (l <= 6)
    throw std::invalid_argument("shi_flattening_check: need l > 6");
  WeightedDigraph node = shi_model(l, m);
  int merged = 6;
  for (int j = 7; j <= l; ++j) {
    const int u = merged_label(node);
    node = contract(node, WallChoice{std::min(merged, j), std::max(merged, j), 0});
    merged = u;
  }
  return canonical_key(node) == canonical_key(shi_model(6, m));
}

}  // namespace arrangeo
