#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "act2dp/generate.hpp"
#include "act2dp/model.hpp"
#include "act2dp/oracle.hpp"

namespace act2dp::testing {

using Triple = std::tuple<NodeId, NodeId, std::int64_t, std::int64_t>;

/// Path 0-1-...-last at zero cost (ids 0..last-1) followed by `chords`
/// given as (u, v, cost_u, cost_v).
inline ActivationInstance path_with_chords(NodeId last, std::initializer_list<Triple> chords,
                                           std::size_t n_nodes = 0) {
  std::vector<ActivationEdge> edges;
  std::vector<EdgeId> path;
  for (NodeId k = 0; k < last; ++k) {
    path.push_back(k);
    edges.push_back({k, k, k + 1, Cost{0}, Cost{0}, Cost{0}});
  }
  for (const auto& [u, v, cu, cv] : chords)
    edges.push_back({static_cast<EdgeId>(edges.size()), u, v, Cost{cu}, Cost{cv}, Cost{0}});
  return ActivationInstance(std::max<std::size_t>(n_nodes, last + 1), 0, last, std::move(edges), std::move(path));
}

inline HamEdge ham_edge(PathIndex x, PathIndex y, std::int64_t cx, std::int64_t mid, std::int64_t cy) {
  return {x, y, Cost{cx}, Cost{mid}, Cost{cy}, {}};
}

/// Augmentation corpus: n <= 8 nodes, either up to 6 chords or 1-2
/// off-path gadgets with a few chords, costs 0..3.
inline std::vector<ActivationInstance> augmentation_corpus(std::size_t count, std::uint64_t base_seed = 1000) {
  std::vector<ActivationInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    GenerateParams p;
    p.seed = base_seed + k;
    p.nodes = 3 + k % 6;
    p.max_cost = Cost{3};
    if (k % 3 == 2 && p.nodes >= 4) {
      p.off_path_nodes = 1 + (k / 3) % 2;
      if (p.off_path_nodes + 2 > p.nodes) p.off_path_nodes = 1;
      p.extra_edges = (k / 7) % 3;
    } else {
      p.extra_edges = 1 + (k / 6) % 6;
    }
    out.push_back(generate(p));
  }
  return out;
}

/// Full-problem corpus: random costs on all edges, no designated path.
inline std::vector<ActivationInstance> two_dp_corpus(std::size_t count, std::uint64_t base_seed = 5000) {
  std::vector<ActivationInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    GenerateParams p;
    p.seed = base_seed + k;
    p.nodes = 3 + k % 5;
    p.two_dp = true;
    p.max_cost = Cost{3};
    p.off_path_nodes = k % 4 == 3 ? 1 : 0;
    p.extra_edges = 2 + (k / 5) % 5;
    out.push_back(generate(p));
  }
  return out;
}

/// 0/1 special-case corpus.
inline std::vector<ActivationInstance> special_corpus(std::size_t count, std::uint64_t base_seed = 9000) {
  std::vector<ActivationInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    GenerateParams p;
    p.seed = base_seed + k;
    p.nodes = 4 + k % 4;
    p.special_case_01 = true;
    p.extra_edges = 2 + (k / 4) % 5;
    out.push_back(generate(p));
  }
  return out;
}

/// Independent feasibility: some pair of simple st-paths with disjoint
/// interiors, found by listing every simple path (small graphs only).
inline bool disjoint_pair_by_enumeration(const std::vector<NodePair>& edges, NodeId s, NodeId t, std::size_t n) {
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    adj[edges[k].first].push_back({edges[k].second, k});
    adj[edges[k].second].push_back({edges[k].first, k});
  }
  struct Found {
    std::vector<bool> interior;
    std::size_t edge;  // first edge, distinguishes parallel s-t edges
  };
  std::vector<Found> paths;
  std::vector<bool> on(n, false);
  std::vector<NodeId> stack{s};
  on[s] = true;
  std::function<void(NodeId, std::size_t)> walk = [&](NodeId v, std::size_t first) {
    for (const auto& [w, k] : adj[v]) {
      if (on[w]) continue;
      const std::size_t f = v == s ? k : first;
      if (w == t) {
        Found path{std::vector<bool>(n, false), f};
        for (NodeId x : stack)
          if (x != s) path.interior[x] = true;
        paths.push_back(std::move(path));
        continue;
      }
      on[w] = true;
      stack.push_back(w);
      walk(w, f);
      stack.pop_back();
      on[w] = false;
    }
  };
  walk(s, 0);
  for (std::size_t a = 0; a < paths.size(); ++a)
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      bool clash = false;
      for (std::size_t x = 0; x < n && !clash; ++x) clash = paths[a].interior[x] && paths[b].interior[x];
      bool both_direct = std::none_of(paths[a].interior.begin(), paths[a].interior.end(), [](bool b) { return b; }) &&
                         std::none_of(paths[b].interior.begin(), paths[b].interior.end(), [](bool b) { return b; });
      if (both_direct && paths[a].edge == paths[b].edge) clash = true;
      if (!clash) return true;
    }
  return false;
}

inline std::vector<NodePair> pairs_of(const ActivationInstance& instance, std::vector<EdgeId> ids) {
  std::vector<NodePair> out;
  for (EdgeId id : ids) out.push_back({instance.edge(id).u, instance.edge(id).v});
  return out;
}

inline std::vector<EdgeId> with_path(const ActivationInstance& instance, std::vector<EdgeId> ids) {
  if (instance.path()) ids.insert(ids.end(), instance.path()->begin(), instance.path()->end());
  return ids;
}

}  // namespace act2dp::testing
