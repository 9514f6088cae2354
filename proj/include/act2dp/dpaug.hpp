#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "act2dp/hamreduce.hpp"
#include "act2dp/model.hpp"

namespace act2dp {

/// Subproblem (i, j, l_i, l_j) of the table; levels are given by value.
struct DpKey {
  PathIndex i = 0;
  PathIndex j = 0;
  Cost level_i;
  Cost level_j;

  friend auto operator<=>(const DpKey&, const DpKey&) = default;
};

/// How a table entry was attained: a single edge (x,n), or a first edge
/// (x,y) followed by the subproblem (j, y, l_j, l_y).
struct DpChoice {
  HamEdgeId edge = 0;
  std::optional<DpKey> successor;
};

struct DpEntry {
  MaybeCost value;
  std::optional<DpChoice> choice;
};

/// Memo of f values over all keys 0 <= i < j < n (for n = 1, the single key
/// (0,1)).
class DpTable {
 public:
  explicit DpTable(const HamInstance& ham);

  /// Largest second index used by keys.
  PathIndex last_j() const { return last_j_; }
  bool computed(PathIndex i, PathIndex j) const;
  /// Entry by level values; throws InvalidInput if a level is not a candidate.
  const DpEntry& at(const DpKey& key) const;
  DpEntry& at(const DpKey& key);
  void mark_computed(PathIndex i, PathIndex j);

  /// One line per key: `f[i,j](l_i,l_j) = value ; choice`.
  void dump(std::ostream& os) const;

 private:
  std::size_t slot(const DpKey& key) const;

  std::size_t side_ = 0;
  std::vector<std::vector<Cost>> levels_;  // copied so the table outlives the instance
  PathIndex last_j_ = 0;
  std::vector<std::vector<DpEntry>> cells_;  // per (i,j) pair, row-major over level indices
  std::vector<bool> computed_;
};

/// True when every edge of `edge_ids` touching i costs <= l_i there, and
/// likewise at j.
bool within_levels(const HamInstance& ham, std::span<const HamEdgeId> edge_ids, PathIndex i, PathIndex j,
                   Cost level_i, Cost level_j);

/// (l_i,l_j)-forced cost: middle costs plus activation cost off {i,j} plus
/// l_i + l_j, or unreachable when the set does not fit under the levels.
MaybeCost forced_cost_alpha(const HamInstance& ham, std::span<const HamEdgeId> edge_ids, PathIndex i,
                            PathIndex j, Cost level_i, Cost level_j);

/// 0 when the edge starts at i, else its activation cost at its tail.
/// Requires i <= x and the edge to fit under (l_i, l_y).
Cost beta(const HamInstance& ham, HamEdgeId edge, PathIndex i, Cost level_i, Cost level_y);

/// Best single edge (x,n) with i <= x < j.
MaybeCost g_value(const HamInstance& ham, PathIndex i, PathIndex j, Cost level_i, Cost level_j);

/// Best first edge (x,y), i <= x < j < y < n, continued by f over (j,y).
/// Throws std::logic_error if a needed table row is not computed yet.
MaybeCost h_value(const HamInstance& ham, const DpTable& table, PathIndex i, PathIndex j, Cost level_i,
                  Cost level_j);

/// Computes every entry as min(g, h), rows in decreasing order of i.
DpTable fill_table(const HamInstance& ham);

/// Follows recorded choices from `key`; edges come out in chain order.
std::vector<HamEdgeId> reconstruct(const DpTable& table, const DpKey& key);

struct ExactOptions {
  ReduceOptions reduce;
  /// Receives the table dump when set.
  std::ostream* dump_table = nullptr;
};

struct AugmentationResult {
  Solution solution;
  /// min over (l_0, l_1) of f_{0,1}.
  Cost dp_value;
  HamInstance ham;
  /// Reconstructed set in the three-cost instance, chain order.
  std::vector<HamEdgeId> ham_edges;
};

/// Exact solver for the augmentation problem; nullopt when infeasible.
std::optional<AugmentationResult> solve_augmentation_exact(const ActivationInstance& aug_instance,
                                                           const ExactOptions& options = {});

/// Checks the chain-order pattern of an inclusion-minimal set of F_{i,j}:
/// tails and heads interleave as v0 < v1 < v2 <= v3 < v4 <= ... < v_last = n
/// with i <= v0 < j <= v1 (when more than one edge).
bool satisfies_chain_order(const HamInstance& ham, std::span<const HamEdgeId> edge_ids, PathIndex i = 0,
                           PathIndex j = 1);

}  // namespace act2dp
