#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "act2dp/model.hpp"

namespace act2dp {

// ---------------------------------------------------------------------------
// Ordinary edge costs over a Hamiltonian zero-cost path

struct CostEdge {
  EdgeId id = 0;
  NodeId u = 0;
  NodeId v = 0;
  Cost cost;
};

/// Hamiltonian st-path `path` (node order, cost 0) plus chords with
/// ordinary costs. Chords never coincide with path edges by id.
struct EdgeCostInstance {
  std::size_t n_nodes = 0;
  std::vector<NodeId> path;
  std::vector<CostEdge> chords;

  NodeId s() const { return path.front(); }
  NodeId t() const { return path.back(); }
};

struct EdgeCostSolution {
  std::vector<EdgeId> edges;  // sorted
  Cost cost;
};

/// Reads an augmentation instance with a Hamiltonian path as an ordinary-cost
/// instance; a chord costs cost_u + mid_cost + cost_v.
EdgeCostInstance edge_cost_instance(const ActivationInstance& instance);

/// Path directed backward (t to s) at cost 0, chords directed forward along
/// the path; the chords of a shortest st-path form F, so that path + F has
/// two edge-disjoint st-paths of minimum total cost.
std::optional<EdgeCostSolution> alg1_mincost_2edp_aug(const EdgeCostInstance& instance);

/// Same digraph followed by zero-cost in-out splitting and rewiring every
/// chord u_out->v_in to u_in->v_out; yields two internally disjoint paths.
std::optional<EdgeCostSolution> alg1_nodedisjoint_variant(const EdgeCostInstance& instance);

enum class Disjointness { edge, node };

/// Exhaustive minimum-cost chord subset achieving the given disjointness.
std::optional<EdgeCostSolution> brute_force_cost_augmentation(const EdgeCostInstance& instance,
                                                              Disjointness kind, std::size_t max_edges = 20);

// ---------------------------------------------------------------------------
// The 0/1 level-pair digraph for the special case

enum class AeArcKind { internal, backward, forward };

struct AeVertex {
  NodeId node = 0;
  int level = 0;
  bool out = false;  // out-copy, else in-copy
};

struct AeArc {
  std::size_t from = 0;
  std::size_t to = 0;
  Cost weight;
  AeArcKind kind = AeArcKind::internal;
  std::optional<EdgeId> edge;
};

struct AeDigraph {
  ActivationInstance instance;
  std::vector<AeVertex> vertices;  // [0] = s_0^out, [1] = t_0^in
  std::vector<AeArc> arcs;
  std::vector<std::vector<std::size_t>> out;  // arc indices per vertex, ascending

  static constexpr std::size_t source = 0;
  static constexpr std::size_t sink = 1;
  std::string vertex_name(std::size_t v) const;
};

/// Empty when `instance` is in the special case: designated Hamiltonian
/// zero-cost st-path, no s-t edge, all costs in {0,1}, zero costs at s and t,
/// zero middle costs. Otherwise lists the violations.
std::vector<std::string> ae_special_case_violations(const ActivationInstance& instance);

/// Builds the digraph: v_a^out->v_a^in (weight 0), v_b^in->u_a^out for path
/// edges uv (weight a), and u_a^out->v_b^in for forward chords activatable at
/// levels (a,b) (weight b). Throws InvalidInput outside the special case.
AeDigraph ae_build(const ActivationInstance& instance);

enum class TieBreak { first, best, worst };

std::optional<TieBreak> parse_tie_break(std::string_view name);

struct AeResult {
  /// Minimum weight of a source-sink path in the digraph.
  Cost weight;
  /// Decoded chord set of the selected minimum-weight path.
  Solution solution;
  /// Number of minimum-weight simple paths examined (1 for `first`).
  std::size_t paths_examined = 0;
};

inline constexpr std::size_t kMaxAeVertices = 80;
inline constexpr std::size_t kMaxAePaths = 2'000'000;

/// Cheapest path; `first` decodes the deterministic shortest path, `best` /
/// `worst` enumerate every minimum-weight simple path and keep the decoding
/// of least / greatest activation value. Nullopt when t is unreachable.
std::optional<AeResult> ae_solve(const AeDigraph& digraph, TieBreak tie_break);

// ---------------------------------------------------------------------------
// Built-in counterexample

namespace fig2 {
enum Node : NodeId { s, u, v, x, y, z, p, q, t };
enum Edge : EdgeId { su, uv, vx, xy, yz, zp, pq, qt, sx, xz, zt, sv, pt, uy, yq };
inline constexpr std::string_view kNodeNames = "suvxyzpqt";
}  // namespace fig2

/// Path s-u-v-x-y-z-p-q-t (cost 0) with chords sx, xz, zt, sv, pt of
/// threshold 0 at s,t and 1 elsewhere, and zero-cost chords uy, yq.
ActivationInstance fig2_instance();

}  // namespace act2dp
