#include "act2dp/oracle.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace act2dp {

namespace {

/// Unit-capacity residual network; augmenting paths by BFS.
class UnitFlow {
 public:
  explicit UnitFlow(std::size_t n) : adj_(n) {}

  void add_arc(std::size_t from, std::size_t to, int cap) {
    adj_[from].push_back({to, cap, adj_[to].size()});
    adj_[to].push_back({from, 0, adj_[from].size() - 1});
  }

  /// Flow value from `source` to `sink`, stopping once `limit` is reached.
  int max_flow(std::size_t source, std::size_t sink, int limit) {
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    std::size_t rev;
  };

  bool augment(std::size_t source, std::size_t sink) {
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(adj_.size());
    std::vector<bool> seen(adj_.size(), false);
    std::queue<std::size_t> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const std::size_t x = queue.front();
      queue.pop();
      for (std::size_t k = 0; k < adj_[x].size(); ++k) {
        const auto& a = adj_[x][k];
        if (a.cap <= 0 || seen[a.to]) continue;
        seen[a.to] = true;
        parent[a.to] = {x, k};
        queue.push(a.to);
      }
    }
    if (!seen[sink]) return false;
    for (std::size_t y = sink; y != source;) {
      auto [x, k] = *parent[y];
      adj_[x][k].cap -= 1;
      adj_[y][adj_[x][k].rev].cap += 1;
      y = x;
    }
    return true;
  }

  std::vector<std::vector<Arc>> adj_;
};

void check_terminals(NodeId s, NodeId t, std::size_t n_nodes) {
  if (s == t) throw InvalidInput("s equals t");
  if (s >= n_nodes || t >= n_nodes) throw InvalidInput("terminal out of range");
}

std::vector<NodePair> endpoints(const ActivationInstance& instance, std::span<const EdgeId> edge_ids) {
  std::vector<NodePair> pairs;
  for (EdgeId id : edge_ids) {
    const auto& e = instance.edge(id);
    pairs.emplace_back(e.u, e.v);
  }
  return pairs;
}

std::vector<NodePair> ham_pairs(const HamInstance& ham, std::span<const HamEdgeId> edge_ids) {
  std::vector<NodePair> pairs;
  for (PathIndex w = 0; w < ham.n(); ++w) pairs.emplace_back(w, w + 1);
  for (HamEdgeId id : edge_ids) pairs.emplace_back(ham.edge(id).x, ham.edge(id).y);
  return pairs;
}

/// Calls visit(subset) for every subset of `candidates`, in increasing mask order.
template <typename Visit>
void for_each_subset(std::span<const std::uint32_t> candidates, std::size_t max_edges, Visit&& visit) {
  if (candidates.size() > max_edges)
    throw GuardExceeded("subset enumeration over " + std::to_string(candidates.size()) +
                        " edges exceeds the guard of " + std::to_string(max_edges));
  std::vector<std::uint32_t> subset;
  const std::uint64_t count = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    subset.clear();
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (mask >> k & 1U) subset.push_back(candidates[k]);
    visit(subset);
  }
}

}  // namespace

bool two_disjoint_paths_feasible(std::span<const NodePair> edges, NodeId s, NodeId t, std::size_t n_nodes) {
  check_terminals(s, t, n_nodes);
  UnitFlow flow(2 * n_nodes);
  for (NodeId v = 0; v < n_nodes; ++v) flow.add_arc(2 * v, 2 * v + 1, v == s || v == t ? 2 : 1);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    flow.add_arc(2 * a + 1, 2 * b, 1);
    flow.add_arc(2 * b + 1, 2 * a, 1);
  }
  return flow.max_flow(2 * s + 1, 2 * t, 2) >= 2;
}

bool two_edge_disjoint_paths_feasible(std::span<const NodePair> edges, NodeId s, NodeId t, std::size_t n_nodes) {
  check_terminals(s, t, n_nodes);
  UnitFlow flow(n_nodes);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    flow.add_arc(a, b, 1);
    flow.add_arc(b, a, 1);
  }
  return flow.max_flow(s, t, 2) >= 2;
}

bool solution_feasible(const ActivationInstance& instance, std::span<const EdgeId> edge_ids) {
  const auto pairs = endpoints(instance, edge_ids);
  return two_disjoint_paths_feasible(pairs, instance.s(), instance.t(), instance.n_nodes());
}

bool augmentation_feasible(const ActivationInstance& instance, std::span<const EdgeId> edge_ids) {
  std::vector<EdgeId> all(edge_ids.begin(), edge_ids.end());
  if (instance.path()) all.insert(all.end(), instance.path()->begin(), instance.path()->end());
  return solution_feasible(instance, all);
}

bool ham_feasible(const HamInstance& ham, std::span<const HamEdgeId> edge_ids) {
  const auto pairs = ham_pairs(ham, edge_ids);
  return two_disjoint_paths_feasible(pairs, 0, ham.n(), ham.n() + 1);
}

std::optional<Solution> brute_force_augmentation(const ActivationInstance& aug_instance, std::size_t max_edges) {
  if (!aug_instance.is_augmentation()) throw InvalidInput("augmentation instance requires a designated path");
  std::vector<EdgeId> candidates;
  for (const auto& e : aug_instance.edges())
    if (!aug_instance.is_path_edge(e.id)) candidates.push_back(e.id);

  std::optional<std::vector<EdgeId>> best;
  MaybeCost best_value;
  for_each_subset(candidates, max_edges, [&](const std::vector<EdgeId>& subset) {
    const Cost value = tau(aug_instance, subset);
    if (!better(value, best_value) || !augmentation_feasible(aug_instance, subset)) return;
    best_value = value;
    best = subset;
  });
  if (!best) return std::nullopt;
  return make_solution(aug_instance, *best, true);
}

std::optional<Solution> brute_force_2dp(const ActivationInstance& instance, std::size_t max_edges) {
  std::vector<EdgeId> candidates;
  for (const auto& e : instance.edges()) candidates.push_back(e.id);

  std::optional<std::vector<EdgeId>> best;
  MaybeCost best_value;
  for_each_subset(candidates, max_edges, [&](const std::vector<EdgeId>& subset) {
    const Cost value = tau(instance, subset);
    if (!better(value, best_value) || !solution_feasible(instance, subset)) return;
    best_value = value;
    best = subset;
  });
  if (!best) return std::nullopt;
  return make_solution(instance, *best, true);
}

std::optional<HamOptimum> brute_force_ham(const HamInstance& ham, std::size_t max_edges) {
  std::vector<HamEdgeId> candidates(ham.edges().size());
  for (HamEdgeId k = 0; k < candidates.size(); ++k) candidates[k] = k;

  std::optional<HamOptimum> best;
  for_each_subset(candidates, max_edges, [&](const std::vector<HamEdgeId>& subset) {
    const Cost value = ham_tau(ham, subset);
    if ((best && value >= best->value) || !ham_feasible(ham, subset)) return;
    best = HamOptimum{value, subset};
  });
  return best;
}

namespace {

void expand_family(const HamInstance& ham, PathIndex i, PathIndex j, std::vector<HamEdgeId>& prefix,
                   std::vector<std::vector<HamEdgeId>>& out) {
  const auto& edges = ham.edges();
  for (HamEdgeId id = 0; id < edges.size(); ++id) {
    const auto& e = edges[id];
    if (e.x < i || e.x >= j) continue;
    if (e.y == ham.n()) {
      prefix.push_back(id);
      out.push_back(prefix);
      prefix.pop_back();
    } else if (e.y > j) {
      prefix.push_back(id);
      expand_family(ham, j, e.y, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<HamEdgeId>> enumerate_minimal_family(const HamInstance& ham, PathIndex i, PathIndex j) {
  if (ham.n() > kMaxFamilyN)
    throw GuardExceeded("family enumeration limited to n <= " + std::to_string(kMaxFamilyN));
  if (!(i < j && (j < ham.n() || (ham.n() == 1 && j == 1))))
    throw InvalidInput("family index pair out of range");
  std::vector<std::vector<HamEdgeId>> out;
  std::vector<HamEdgeId> prefix;
  expand_family(ham, i, j, prefix, out);
  return out;
}

std::vector<std::vector<HamEdgeId>> minimal_sets_by_subsets(const HamInstance& ham, PathIndex i, PathIndex j,
                                                            std::size_t max_edges) {
  std::vector<HamEdgeId> candidates;
  for (HamEdgeId k = 0; k < ham.edges().size(); ++k)
    if (ham.edge(k).x >= i) candidates.push_back(k);

  auto feasible = [&](std::span<const HamEdgeId> subset) {
    auto pairs = ham_pairs(ham, subset);
    return two_disjoint_paths_feasible(pairs, j - 1, ham.n(), ham.n() + 1);
  };

  std::vector<std::vector<HamEdgeId>> out;
  for_each_subset(candidates, max_edges, [&](const std::vector<HamEdgeId>& subset) {
    if (subset.empty() || !feasible(subset)) return;
    std::vector<HamEdgeId> smaller;
    for (std::size_t drop = 0; drop < subset.size(); ++drop) {
      smaller = subset;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      if (feasible(smaller)) return;
    }
    out.push_back(subset);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace act2dp
