#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "act2dp/cost.hpp"

namespace act2dp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected multigraph edge with activation costs at both ends and an
/// ordinary middle cost.
struct ActivationEdge {
  EdgeId id = 0;
  NodeId u = 0;
  NodeId v = 0;
  Cost cost_u;
  Cost cost_v;
  Cost mid_cost;

  /// Activation cost at endpoint `w`, which must be u or v.
  Cost cost_at(NodeId w) const { return w == u ? cost_u : cost_v; }
  NodeId other(NodeId w) const { return w == u ? v : u; }
  bool touches(NodeId w) const { return u == w || v == w; }

  friend bool operator==(const ActivationEdge&, const ActivationEdge&) = default;
};

/// Per-node levels; value is their sum.
struct LevelAssignment {
  std::vector<Cost> levels;

  Cost value() const;
  /// True when both endpoint costs of `e` are covered.
  bool activates(const ActivationEdge& e) const {
    return levels.at(e.u) >= e.cost_u && levels.at(e.v) >= e.cost_v;
  }

  friend bool operator==(const LevelAssignment&, const LevelAssignment&) = default;
};

/// An activation instance: multigraph, terminals and, for augmentation
/// instances, a designated zero-cost st-path given as ordered edge ids.
class ActivationInstance {
 public:
  ActivationInstance() = default;
  ActivationInstance(std::size_t n_nodes, NodeId s, NodeId t, std::vector<ActivationEdge> edges,
                     std::optional<std::vector<EdgeId>> path = std::nullopt);

  std::size_t n_nodes() const { return n_nodes_; }
  NodeId s() const { return s_; }
  NodeId t() const { return t_; }
  const std::vector<ActivationEdge>& edges() const { return edges_; }
  const std::optional<std::vector<EdgeId>>& path() const { return path_; }
  bool is_augmentation() const { return path_.has_value(); }

  /// Edge by id; throws InvalidInput for unknown ids.
  const ActivationEdge& edge(EdgeId id) const;
  bool has_edge(EdgeId id) const { return index_.contains(id); }
  /// Positions into edges() of the edges incident to `v`.
  const std::vector<std::size_t>& incident(NodeId v) const { return incidence_.at(v); }

  /// Nodes of the designated path from s to t. Requires a valid path.
  std::vector<NodeId> path_nodes() const;
  bool is_path_edge(EdgeId id) const;

  friend bool operator==(const ActivationInstance& a, const ActivationInstance& b) {
    return a.n_nodes_ == b.n_nodes_ && a.s_ == b.s_ && a.t_ == b.t_ && a.edges_ == b.edges_ &&
           a.path_ == b.path_;
  }

 private:
  std::size_t n_nodes_ = 0;
  NodeId s_ = 0;
  NodeId t_ = 0;
  std::vector<ActivationEdge> edges_;
  std::optional<std::vector<EdgeId>> path_;
  std::unordered_map<EdgeId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// A chosen edge set together with its induced level assignment.
struct Solution {
  std::vector<EdgeId> edge_ids;  // sorted ascending
  LevelAssignment levels;
  Cost value;
  bool feasible = false;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Minimum levels activating `edge_ids`: per node the max incident cost, 0 if none.
LevelAssignment induced_levels(const ActivationInstance& instance, std::span<const EdgeId> edge_ids);

/// Sum over nodes of the induced levels. Duplicate ids count once.
Cost activation_cost(const ActivationInstance& instance, std::span<const EdgeId> edge_ids);

/// Activation cost plus the middle costs of the (deduplicated) edge set.
Cost tau(const ActivationInstance& instance, std::span<const EdgeId> edge_ids);

/// Sorted distinct {0} together with every incident edge cost at `v`.
std::vector<Cost> candidate_levels(const ActivationInstance& instance, NodeId v);

/// Builds a Solution for `edge_ids` with induced levels and tau value.
Solution make_solution(const ActivationInstance& instance, std::vector<EdgeId> edge_ids, bool feasible);

/// Instance with terminal costs folded into guessed levels.
struct ZeroedTerminals {
  ActivationInstance instance;
  Cost level_s;
  Cost level_t;
};

/// Drops edges whose cost at s exceeds `level_s` (resp. t, `level_t`) and
/// zeroes the surviving terminal-side costs. Edge ids are preserved. The
/// designated path is kept only if all of its edges survive.
ZeroedTerminals zero_terminal_costs(const ActivationInstance& instance, Cost level_s, Cost level_t);

struct ValidationError {
  std::string message;
};

/// Checks instance invariants; an empty result means the instance is valid.
std::vector<ValidationError> validate(const ActivationInstance& instance);

/// Throws InvalidInput carrying every validation message.
void require_valid(const ActivationInstance& instance);

}  // namespace act2dp
