#include "act2dp/hamreduce.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "act2dp/actpath.hpp"

namespace act2dp {

HamInstance::HamInstance(PathIndex n, std::vector<HamEdge> edges, std::vector<NodeId> node_map)
    : n_(n), edges_(std::move(edges)), node_map_(std::move(node_map)), levels_(n + 1) {
  if (node_map_.empty())
    for (PathIndex w = 0; w <= n_; ++w) node_map_.push_back(w);
  if (node_map_.size() != static_cast<std::size_t>(n_) + 1) throw InvalidInput("node map size mismatch");
  for (auto& l : levels_) l.push_back(Cost{0});
  for (const auto& e : edges_) {
    if (!(e.x < e.y) || e.y > n_) throw InvalidInput("three-cost edge must satisfy x < y <= n");
    levels_[e.x].push_back(e.cost_x);
    levels_[e.y].push_back(e.cost_y);
  }
  for (auto& l : levels_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

std::vector<Cost> ham_induced_levels(const HamInstance& ham, std::span<const HamEdgeId> edge_ids) {
  std::vector<Cost> levels(ham.n() + 1);
  for (HamEdgeId id : edge_ids) {
    const auto& e = ham.edge(id);
    levels[e.x] = std::max(levels[e.x], e.cost_x);
    levels[e.y] = std::max(levels[e.y], e.cost_y);
  }
  return levels;
}

Cost ham_tau(const HamInstance& ham, std::span<const HamEdgeId> edge_ids) {
  Cost total;
  for (Cost l : ham_induced_levels(ham, edge_ids)) total += l;
  for (HamEdgeId id : std::set<HamEdgeId>(edge_ids.begin(), edge_ids.end())) total += ham.edge(id).mid_cost;
  return total;
}

namespace {

bool dominates(const HamEdge& a, const HamEdge& b) {
  return a.cost_x <= b.cost_x && a.mid_cost <= b.mid_cost && a.cost_y <= b.cost_y;
}

/// Keeps, in order, the edges not dominated by an earlier kept edge or by any
/// strictly better edge of the same group.
std::vector<HamEdge> prune(std::vector<HamEdge> group) {
  std::vector<HamEdge> kept;
  for (std::size_t k = 0; k < group.size(); ++k) {
    bool dominated = false;
    for (std::size_t m = 0; m < group.size() && !dominated; ++m) {
      if (m == k || !dominates(group[m], group[k])) continue;
      // equal triples: the earlier one survives
      dominated = !dominates(group[k], group[m]) || m < k;
    }
    if (!dominated) kept.push_back(std::move(group[k]));
  }
  return kept;
}

}  // namespace

HamInstance reduce_to_hamiltonian(const ActivationInstance& aug_instance, const ReduceOptions& options) {
  if (!aug_instance.is_augmentation()) throw InvalidInput("augmentation instance requires a designated path");
  require_valid(aug_instance);

  const std::vector<NodeId> path = aug_instance.path_nodes();
  const auto n = static_cast<PathIndex>(path.size() - 1);

  std::vector<HamEdge> edges;
  for (PathIndex a = 0; a <= n; ++a) {
    for (PathIndex b = a + 1; b <= n; ++b) {
      const NodeId u = path[a];
      const NodeId v = path[b];
      std::vector<HamEdge> group;
      for (Cost lu : candidate_levels(aug_instance, u)) {
        for (Cost lv : candidate_levels(aug_instance, v)) {
          auto q = min_attachment_path(aug_instance, path, u, v, lu, lv);
          if (!q) continue;
          group.push_back({a, b, lu, q->internal_cost, lv, std::move(q->edges)});
        }
      }
      if (options.prune_dominated) group = prune(std::move(group));
      for (auto& e : group) edges.push_back(std::move(e));
    }
  }
  return HamInstance(n, std::move(edges), path);
}

std::vector<EdgeId> lift(const HamInstance& ham, std::span<const HamEdgeId> chosen) {
  std::vector<EdgeId> result;
  for (HamEdgeId id : chosen) {
    const auto& p = ham.edge(id).provenance;
    result.insert(result.end(), p.begin(), p.end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

void dump(std::ostream& os, const HamInstance& ham) {
  os << "ham n=" << ham.n() << " edges=" << ham.edges().size() << '\n';
  for (std::size_t k = 0; k < ham.edges().size(); ++k) {
    const auto& e = ham.edges()[k];
    os << "  e" << k << " (" << e.x << "," << e.y << ") costs " << e.cost_x << "/" << e.mid_cost << "/"
       << e.cost_y << " via";
    for (EdgeId id : e.provenance) os << ' ' << id;
    os << '\n';
  }
}

}  // namespace act2dp
