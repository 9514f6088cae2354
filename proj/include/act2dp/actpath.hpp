#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "act2dp/model.hpp"

namespace act2dp {

/// Parameters of one activation path search.
struct PathQuery {
  NodeId source = 0;
  NodeId sink = 0;
  /// Only levels <= cap are offered at the source / sink; nullopt means no cap.
  std::optional<Cost> cap_source;
  std::optional<Cost> cap_sink;
  std::vector<NodeId> forbidden_nodes;
  std::vector<EdgeId> forbidden_edges;
  /// When false the source and sink copies carry weight 0, so only
  /// interior nodes are paid for.
  bool charge_endpoints = true;
};

/// A (node, level) pair of the levels splitting.
struct LevelCopy {
  NodeId node = 0;
  Cost level;
};

/// Arc of the in-out split levels graph. Vertex 2k is the in-copy and 2k+1
/// the out-copy of copies()[k].
struct LevelsArc {
  std::size_t from = 0;
  std::size_t to = 0;
  Cost weight;
  /// Original edge for cross arcs, nullopt for in->out arcs.
  std::optional<EdgeId> edge;
};

class LevelsGraph {
 public:
  static constexpr std::size_t in_vertex(std::size_t copy) { return 2 * copy; }
  static constexpr std::size_t out_vertex(std::size_t copy) { return 2 * copy + 1; }
  static constexpr std::size_t copy_of(std::size_t vertex) { return vertex / 2; }

  const std::vector<LevelCopy>& copies() const { return copies_; }
  const std::vector<LevelsArc>& arcs() const { return arcs_; }
  std::size_t vertex_count() const { return 2 * copies_.size(); }
  /// Arc indices leaving `vertex`, ascending.
  const std::vector<std::size_t>& out_arcs(std::size_t vertex) const { return out_[vertex]; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return out_; }
  /// In-vertices of the source copies.
  const std::vector<std::size_t>& sources() const { return sources_; }
  /// Out-vertices of the sink copies.
  const std::vector<std::size_t>& targets() const { return targets_; }
  std::size_t cross_arc_count() const;

 private:
  friend LevelsGraph build_levels_graph(const ActivationInstance&, const PathQuery&);

  std::vector<LevelCopy> copies_;
  std::vector<LevelsArc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> sources_;
  std::vector<std::size_t> targets_;
};

/// Levels splitting followed by in-out splitting. Copy (v,l) exists for every
/// allowed node and l in candidate_levels(v) (capped at source/sink). The
/// in->out arc weighs l; a cross arc out(u,a)->in(v,b) of weight mid_cost(e)
/// exists per edge e=uv with c_e^u <= a and c_e^v <= b. Arcs entering the
/// source or leaving the sink are omitted.
LevelsGraph build_levels_graph(const ActivationInstance& instance, const PathQuery& query);

struct LevelsWalk {
  Cost weight;
  std::vector<std::size_t> arcs;
};

/// Deterministic multi-source Dijkstra from sources() to the cheapest target.
/// Ties go to the smaller vertex index; predecessors change only on strict
/// improvement.
std::optional<LevelsWalk> shortest_levels_walk(const LevelsGraph& graph);

/// Optimal activation path between query.source and query.sink; its value is
/// tau of the path (levels at the endpoints included when charged).
std::optional<Solution> min_activation_st_path(const ActivationInstance& instance, const PathQuery& query);

struct AttachmentPath {
  /// Activation cost at interior nodes plus middle costs along the path.
  Cost internal_cost;
  std::vector<EdgeId> edges;  // ordered from u to v
};

/// Cheapest u-v path with no interior node in `path_nodes`, whose first edge
/// costs <= level_u at u and last edge costs <= level_v at v. Edges of the
/// instance's designated path are never used.
std::optional<AttachmentPath> min_attachment_path(const ActivationInstance& instance,
                                                  std::span<const NodeId> path_nodes, NodeId u, NodeId v,
                                                  Cost level_u, Cost level_v);

}  // namespace act2dp
