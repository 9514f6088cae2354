#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "act2dp/cost.hpp"

namespace act2dp::detail {

struct ShortestPathTree {
  std::vector<MaybeCost> dist;
  /// Arc index used to reach each vertex.
  std::vector<std::optional<std::size_t>> pred;

  /// Arc indices from the tree root to `target`.
  template <typename Arcs>
  std::vector<std::size_t> arcs_to(std::size_t target, const Arcs& arcs) const {
    std::vector<std::size_t> path;
    for (std::size_t x = target; pred[x]; x = arcs[*pred[x]].from) path.push_back(*pred[x]);
    return {path.rbegin(), path.rend()};
  }
};

/// Dijkstra over nonnegative arcs with a deterministic tie rule: vertices
/// settle in (distance, index) order, out-arcs relax in index order and a
/// predecessor changes only on strict improvement. `Arc` needs from, to and
/// weight members.
template <typename Arc>
ShortestPathTree dijkstra(std::span<const Arc> arcs, const std::vector<std::vector<std::size_t>>& out,
                          std::span<const std::size_t> sources) {
  const std::size_t n = out.size();
  ShortestPathTree tree{std::vector<MaybeCost>(n), std::vector<std::optional<std::size_t>>(n)};
  std::vector<bool> done(n, false);
  using Item = std::tuple<Cost, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t s : sources) {
    tree.dist[s] = Cost{0};
    queue.emplace(Cost{0}, s);
  }
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (done[x]) continue;
    done[x] = true;
    for (std::size_t a : out[x]) {
      const auto& arc = arcs[a];
      const Cost nd = d + arc.weight;
      if (better(nd, tree.dist[arc.to])) {
        tree.dist[arc.to] = nd;
        tree.pred[arc.to] = a;
        queue.emplace(nd, arc.to);
      }
    }
  }
  return tree;
}

}  // namespace act2dp::detail
