#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "act2dp/model.hpp"

namespace act2dp {

/// Position along the Hamiltonian path 0-1-...-n.
using PathIndex = std::uint32_t;
/// Index into HamInstance::edges().
using HamEdgeId = std::uint32_t;

/// Three-cost edge (x,y), x < y, summarizing one attachment path.
struct HamEdge {
  PathIndex x = 0;
  PathIndex y = 0;
  Cost cost_x;
  Cost mid_cost;
  Cost cost_y;
  /// Original edges realizing this edge, ordered from x to y.
  std::vector<EdgeId> provenance;

  Cost cost_at(PathIndex w) const { return w == x ? cost_x : cost_y; }
  bool touches(PathIndex w) const { return w == x || w == y; }

  friend bool operator==(const HamEdge&, const HamEdge&) = default;
};

/// Three-cost Hamiltonian instance: path 0-1-...-n plus edges off the path.
class HamInstance {
 public:
  HamInstance() = default;
  HamInstance(PathIndex n, std::vector<HamEdge> edges, std::vector<NodeId> node_map = {});

  /// Index of the last path node.
  PathIndex n() const { return n_; }
  const std::vector<HamEdge>& edges() const { return edges_; }
  const HamEdge& edge(HamEdgeId id) const { return edges_.at(id); }
  /// Original node id of each path position.
  const std::vector<NodeId>& node_map() const { return node_map_; }
  /// Sorted distinct {0} together with every incident edge cost at `w`.
  const std::vector<Cost>& levels(PathIndex w) const { return levels_.at(w); }

 private:
  PathIndex n_ = 0;
  std::vector<HamEdge> edges_;
  std::vector<NodeId> node_map_;
  std::vector<std::vector<Cost>> levels_;
};

/// Per-node maximum incident cost of `edge_ids`.
std::vector<Cost> ham_induced_levels(const HamInstance& ham, std::span<const HamEdgeId> edge_ids);

/// Activation cost plus middle costs of a set of HamInstance edges.
Cost ham_tau(const HamInstance& ham, std::span<const HamEdgeId> edge_ids);

struct ReduceOptions {
  /// Drop an edge when another with the same endpoints is <= in all three costs.
  bool prune_dominated = true;
};

/// Attachment-path completion: for every pair of path positions u < v and
/// every level pair, the cheapest attachment path (endpoint costs bounded by
/// the levels) becomes one three-cost edge. Nodes off the path are dropped.
HamInstance reduce_to_hamiltonian(const ActivationInstance& aug_instance, const ReduceOptions& options = {});

/// Union of the provenance paths of the chosen edges, sorted and deduplicated.
std::vector<EdgeId> lift(const HamInstance& ham, std::span<const HamEdgeId> chosen);

/// Debug listing, one edge per line.
void dump(std::ostream& os, const HamInstance& ham);

}  // namespace act2dp
