#pragma once

#include <cstddef>
#include <cstdint>

#include "act2dp/model.hpp"

namespace act2dp {

struct GenerateParams {
  std::size_t nodes = 6;
  /// Random chords between arbitrary node pairs.
  std::size_t extra_edges = 4;
  Cost max_cost{3};
  std::uint64_t seed = 1;
  /// 0/1 thresholds, zero at the terminals, no s-t edge, Hamiltonian path.
  bool special_case_01 = false;
  /// Nodes kept off the path, each attached by two random edges.
  std::size_t off_path_nodes = 0;
  /// Random costs on every edge and no designated path.
  bool two_dp = false;
};

/// Deterministic in (params): a random st-path through the path nodes (zero
/// cost unless two_dp) plus attachment gadgets and random chords.
/// Throws InvalidInput on inconsistent parameters.
ActivationInstance generate(const GenerateParams& params);

}  // namespace act2dp
