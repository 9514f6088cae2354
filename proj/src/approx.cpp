#include "act2dp/approx.hpp"

#include <algorithm>

#include "act2dp/actpath.hpp"
#include "act2dp/oracle.hpp"

namespace act2dp {

ActivationInstance make_augmentation_instance(const ActivationInstance& instance,
                                              const std::vector<EdgeId>& path_edges) {
  // order the path edges from s to t
  std::vector<EdgeId> ordered;
  std::vector<bool> used(path_edges.size(), false);
  NodeId at = instance.s();
  while (ordered.size() < path_edges.size()) {
    bool advanced = false;
    for (std::size_t k = 0; k < path_edges.size() && !advanced; ++k) {
      if (used[k] || !instance.edge(path_edges[k]).touches(at)) continue;
      used[k] = true;
      ordered.push_back(path_edges[k]);
      at = instance.edge(path_edges[k]).other(at);
      advanced = true;
    }
    if (!advanced) throw InvalidInput("path edges do not form an st-path");
  }

  std::vector<ActivationEdge> edges = instance.edges();
  for (auto& e : edges) {
    if (std::find(ordered.begin(), ordered.end(), e.id) == ordered.end()) continue;
    e.cost_u = e.cost_v = e.mid_cost = Cost{0};
  }
  return ActivationInstance(instance.n_nodes(), instance.s(), instance.t(), std::move(edges), std::move(ordered));
}

ApproxResult solve_2dp_15(const ActivationInstance& instance) {
  require_valid(instance);
  ApproxResult result;
  MaybeCost best_value;

  for (Cost ls : candidate_levels(instance, instance.s())) {
    for (Cost lt : candidate_levels(instance, instance.t())) {
      GuessTrace trace{ls, lt, std::nullopt, std::nullopt, std::nullopt, {}};
      const auto zeroed = zero_terminal_costs(instance, ls, lt);

      PathQuery query;
      query.source = instance.s();
      query.sink = instance.t();
      const auto path = min_activation_st_path(zeroed.instance, query);
      if (path) {
        trace.path_value = path->value;
        trace.path_edges = path->edge_ids;
        const auto aug = solve_augmentation_exact(make_augmentation_instance(zeroed.instance, path->edge_ids));
        if (aug) {
          trace.augmentation_value = aug->solution.value;
          std::vector<EdgeId> all = path->edge_ids;
          all.insert(all.end(), aug->solution.edge_ids.begin(), aug->solution.edge_ids.end());
          auto candidate = make_solution(instance, all, solution_feasible(instance, all));
          trace.candidate_value = candidate.value;
          if (candidate.feasible && better(candidate.value, best_value)) {
            best_value = candidate.value;
            result.solution = std::move(candidate);
            result.chosen_guess = {ls, lt};
          }
        }
      }
      result.trace.push_back(std::move(trace));
    }
  }
  return result;
}

}  // namespace act2dp
