#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "act2dp/hamreduce.hpp"
#include "act2dp/model.hpp"

namespace act2dp {

using NodePair = std::pair<NodeId, NodeId>;

/// True iff the multigraph `edges` holds two st-paths sharing no internal
/// node. Parallel st-edges count as two paths. Throws InvalidInput if s == t.
bool two_disjoint_paths_feasible(std::span<const NodePair> edges, NodeId s, NodeId t, std::size_t n_nodes);

/// Same question for edge-disjoint paths.
bool two_edge_disjoint_paths_feasible(std::span<const NodePair> edges, NodeId s, NodeId t, std::size_t n_nodes);

/// Node-disjoint check of `edge_ids` (ids of `instance`) between s and t.
bool solution_feasible(const ActivationInstance& instance, std::span<const EdgeId> edge_ids);

/// Node-disjoint check of the designated path together with `edge_ids`.
bool augmentation_feasible(const ActivationInstance& instance, std::span<const EdgeId> edge_ids);

/// Node-disjoint (0,n) check of the path 0-...-n together with `edge_ids`.
bool ham_feasible(const HamInstance& ham, std::span<const HamEdgeId> edge_ids);

inline constexpr std::size_t kDefaultMaxEdges = 20;

/// Exhaustive minimum of tau over subsets F of the non-path edges such that
/// path + F is feasible. Refuses (GuardExceeded) above `max_edges` candidates.
std::optional<Solution> brute_force_augmentation(const ActivationInstance& aug_instance,
                                                 std::size_t max_edges = kDefaultMaxEdges);

/// Exhaustive minimum of tau over feasible subsets of all edges.
std::optional<Solution> brute_force_2dp(const ActivationInstance& instance,
                                        std::size_t max_edges = kDefaultMaxEdges);

struct HamOptimum {
  Cost value;
  std::vector<HamEdgeId> edges;
};

/// Exhaustive minimum of ham_tau over feasible subsets of the three-cost edges.
std::optional<HamOptimum> brute_force_ham(const HamInstance& ham, std::size_t max_edges = kDefaultMaxEdges);

inline constexpr PathIndex kMaxFamilyN = 10;

/// The family F_{i,j} expanded by its recursive structure: singletons (x,n)
/// with i <= x < j, and {(x,y)} + F' for i <= x < j < y < n, F' in F_{j,y}.
/// Each set is listed in chain order.
std::vector<std::vector<HamEdgeId>> enumerate_minimal_family(const HamInstance& ham, PathIndex i, PathIndex j);

/// Inclusion-minimal subsets F of the three-cost edges such that the path
/// plus F holds two internally disjoint (j-1,n)-paths and every tail is >= i.
/// Found by subset enumeration; each set is sorted ascending.
std::vector<std::vector<HamEdgeId>> minimal_sets_by_subsets(const HamInstance& ham, PathIndex i, PathIndex j,
                                                            std::size_t max_edges = kDefaultMaxEdges);

}  // namespace act2dp
