#pragma once

#include <optional>
#include <vector>

#include "act2dp/dpaug.hpp"
#include "act2dp/model.hpp"

namespace act2dp {

/// Outcome of one terminal-level guess.
struct GuessTrace {
  Cost level_s;
  Cost level_t;
  /// Value of the optimal st-path in the zeroed instance, if one exists.
  MaybeCost path_value;
  /// Exact augmentation value for that path, if feasible.
  MaybeCost augmentation_value;
  /// tau of path + augmentation under the original costs.
  MaybeCost candidate_value;
  std::vector<EdgeId> path_edges;
};

struct ApproxResult {
  std::optional<Solution> solution;
  /// The guess that produced `solution`.
  std::optional<std::pair<Cost, Cost>> chosen_guess;
  std::vector<GuessTrace> trace;
};

/// 1.5-approximation: for every guess (l_s, l_t) of terminal levels, zero
/// the terminal costs, take an optimal activation st-path P, solve the
/// augmentation of P exactly and evaluate P + F with the original costs.
/// The cheapest candidate wins; ties keep the lexicographically first guess.
ApproxResult solve_2dp_15(const ActivationInstance& instance);

/// Augmentation instance built on `path_edges`: those edges get all three
/// costs zeroed and become the designated path.
ActivationInstance make_augmentation_instance(const ActivationInstance& instance,
                                              const std::vector<EdgeId>& path_edges);

}  // namespace act2dp
