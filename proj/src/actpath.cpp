#include "act2dp/actpath.hpp"

#include <algorithm>
#include <set>

#include "act2dp/detail/dijkstra.hpp"

namespace act2dp {

std::size_t LevelsGraph::cross_arc_count() const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [](const LevelsArc& a) { return a.edge.has_value(); }));
}

LevelsGraph build_levels_graph(const ActivationInstance& instance, const PathQuery& query) {
  if (query.source == query.sink) throw InvalidInput("source equals sink");
  const std::set<NodeId> forbidden(query.forbidden_nodes.begin(), query.forbidden_nodes.end());
  const std::set<EdgeId> forbidden_edges(query.forbidden_edges.begin(), query.forbidden_edges.end());
  if (forbidden.contains(query.source) || forbidden.contains(query.sink))
    throw InvalidInput("source or sink is forbidden");

  LevelsGraph g;
  // first copy index per node; copies of a node are contiguous, ascending level
  std::vector<std::size_t> first(instance.n_nodes() + 1, 0);
  for (NodeId v = 0; v < instance.n_nodes(); ++v) {
    first[v] = g.copies_.size();
    if (forbidden.contains(v)) continue;
    std::optional<Cost> cap;
    if (v == query.source) cap = query.cap_source;
    if (v == query.sink) cap = query.cap_sink;
    for (Cost l : candidate_levels(instance, v))
      if (!cap || l <= *cap) g.copies_.push_back({v, l});
  }
  first[instance.n_nodes()] = g.copies_.size();

  g.out_.resize(g.vertex_count());
  auto add_arc = [&g](std::size_t from, std::size_t to, Cost w, std::optional<EdgeId> e) {
    g.out_[from].push_back(g.arcs_.size());
    g.arcs_.push_back({from, to, w, e});
  };

  for (std::size_t k = 0; k < g.copies_.size(); ++k) {
    const auto& c = g.copies_[k];
    const bool endpoint = c.node == query.source || c.node == query.sink;
    add_arc(LevelsGraph::in_vertex(k), LevelsGraph::out_vertex(k),
            endpoint && !query.charge_endpoints ? Cost{0} : c.level, std::nullopt);
    if (c.node == query.source) g.sources_.push_back(LevelsGraph::in_vertex(k));
    if (c.node == query.sink) g.targets_.push_back(LevelsGraph::out_vertex(k));
  }

  for (const auto& e : instance.edges()) {
    if (forbidden_edges.contains(e.id) || e.u == e.v) continue;
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (a == query.sink || b == query.source) continue;
      for (std::size_t ka = first[a]; ka < first[a + 1]; ++ka) {
        if (g.copies_[ka].level < e.cost_at(a)) continue;
        for (std::size_t kb = first[b]; kb < first[b + 1]; ++kb) {
          if (g.copies_[kb].level < e.cost_at(b)) continue;
          add_arc(LevelsGraph::out_vertex(ka), LevelsGraph::in_vertex(kb), e.mid_cost, e.id);
        }
      }
    }
  }
  return g;
}

std::optional<LevelsWalk> shortest_levels_walk(const LevelsGraph& graph) {
  const auto tree = detail::dijkstra<LevelsArc>(graph.arcs(), graph.adjacency(), graph.sources());

  std::optional<std::size_t> best;
  for (std::size_t t : graph.targets())
    if (better(tree.dist[t], best ? tree.dist[*best] : MaybeCost{})) best = t;
  if (!best) return std::nullopt;
  return LevelsWalk{*tree.dist[*best], tree.arcs_to(*best, graph.arcs())};
}

namespace {

/// Original edges along the walk with node repetitions cut out.
std::vector<EdgeId> decode_simple_path(const LevelsGraph& graph, const LevelsWalk& walk, NodeId source) {
  std::vector<NodeId> nodes{source};
  std::vector<EdgeId> edges;
  for (std::size_t a : walk.arcs) {
    const auto& arc = graph.arcs()[a];
    if (!arc.edge) continue;
    const NodeId next = graph.copies()[LevelsGraph::copy_of(arc.to)].node;
    auto seen = std::find(nodes.begin(), nodes.end(), next);
    if (seen != nodes.end()) {
      const auto keep = static_cast<std::size_t>(seen - nodes.begin());
      nodes.resize(keep + 1);
      edges.resize(keep);
      continue;
    }
    nodes.push_back(next);
    edges.push_back(*arc.edge);
  }
  return edges;
}

}  // namespace

std::optional<Solution> min_activation_st_path(const ActivationInstance& instance, const PathQuery& query) {
  const auto graph = build_levels_graph(instance, query);
  const auto walk = shortest_levels_walk(graph);
  if (!walk) return std::nullopt;
  return make_solution(instance, decode_simple_path(graph, *walk, query.source), true);
}

std::optional<AttachmentPath> min_attachment_path(const ActivationInstance& instance,
                                                  std::span<const NodeId> path_nodes, NodeId u, NodeId v,
                                                  Cost level_u, Cost level_v) {
  PathQuery query;
  query.source = u;
  query.sink = v;
  query.cap_source = level_u;
  query.cap_sink = level_v;
  query.charge_endpoints = false;
  for (NodeId w : path_nodes)
    if (w != u && w != v) query.forbidden_nodes.push_back(w);
  if (instance.path()) query.forbidden_edges = *instance.path();

  const auto graph = build_levels_graph(instance, query);
  const auto walk = shortest_levels_walk(graph);
  if (!walk) return std::nullopt;

  AttachmentPath result;
  result.edges = decode_simple_path(graph, *walk, u);
  auto levels = induced_levels(instance, result.edges);
  for (NodeId w = 0; w < instance.n_nodes(); ++w)
    if (w != u && w != v) result.internal_cost += levels.levels[w];
  for (EdgeId id : result.edges) result.internal_cost += instance.edge(id).mid_cost;
  return result;
}

}  // namespace act2dp
