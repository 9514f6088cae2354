#include "act2dp/baselines.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "act2dp/detail/dijkstra.hpp"
#include "act2dp/oracle.hpp"

namespace act2dp {

namespace {

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  Cost weight;
  std::optional<EdgeId> chord;
};

struct Digraph {
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out;

  explicit Digraph(std::size_t n) : out(n) {}
  void add(std::size_t from, std::size_t to, Cost w, std::optional<EdgeId> chord = std::nullopt) {
    out[from].push_back(arcs.size());
    arcs.push_back({from, to, w, chord});
  }
};

std::vector<std::size_t> positions(const EdgeCostInstance& instance) {
  std::vector<std::size_t> pos(instance.n_nodes, instance.n_nodes);
  for (std::size_t k = 0; k < instance.path.size(); ++k) pos[instance.path[k]] = k;
  for (auto p : pos)
    if (p == instance.n_nodes) throw InvalidInput("path is not Hamiltonian");
  return pos;
}

std::optional<EdgeCostSolution> decode(const Digraph& g, std::size_t source, std::size_t sink,
                                       const EdgeCostInstance& instance) {
  const std::size_t sources[] = {source};
  const auto tree = detail::dijkstra<Arc>(g.arcs, g.out, sources);
  if (!tree.dist[sink]) return std::nullopt;
  EdgeCostSolution sol;
  for (std::size_t a : tree.arcs_to(sink, g.arcs))
    if (g.arcs[a].chord) sol.edges.push_back(*g.arcs[a].chord);
  std::sort(sol.edges.begin(), sol.edges.end());
  sol.edges.erase(std::unique(sol.edges.begin(), sol.edges.end()), sol.edges.end());
  for (const auto& c : instance.chords)
    if (std::binary_search(sol.edges.begin(), sol.edges.end(), c.id)) sol.cost += c.cost;
  return sol;
}

}  // namespace

EdgeCostInstance edge_cost_instance(const ActivationInstance& instance) {
  require_valid(instance);
  if (!instance.path()) throw InvalidInput("instance has no designated path");
  EdgeCostInstance result;
  result.n_nodes = instance.n_nodes();
  result.path = instance.path_nodes();
  if (result.path.size() != instance.n_nodes()) throw InvalidInput("designated path is not Hamiltonian");
  for (const auto& e : instance.edges())
    if (!instance.is_path_edge(e.id)) result.chords.push_back({e.id, e.u, e.v, e.cost_u + e.mid_cost + e.cost_v});
  return result;
}

std::optional<EdgeCostSolution> alg1_mincost_2edp_aug(const EdgeCostInstance& instance) {
  const auto pos = positions(instance);
  Digraph g(instance.n_nodes);
  for (std::size_t k = 0; k + 1 < instance.path.size(); ++k) g.add(instance.path[k + 1], instance.path[k], Cost{0});
  for (const auto& c : instance.chords) {
    auto [a, b] = pos[c.u] < pos[c.v] ? std::pair{c.u, c.v} : std::pair{c.v, c.u};
    if (a != b) g.add(a, b, c.cost, c.id);
  }
  return decode(g, instance.s(), instance.t(), instance);
}

std::optional<EdgeCostSolution> alg1_nodedisjoint_variant(const EdgeCostInstance& instance) {
  const auto pos = positions(instance);
  const NodeId s = instance.s();
  const NodeId t = instance.t();
  // v_in = 2v, v_out = 2v+1; s and t are not split
  auto in = [](NodeId v) -> std::size_t { return 2 * std::size_t{v}; };
  auto out = [&](NodeId v) -> std::size_t { return v == s || v == t ? 2 * std::size_t{v} : 2 * std::size_t{v} + 1; };

  Digraph g(2 * instance.n_nodes);
  for (NodeId v = 0; v < instance.n_nodes; ++v)
    if (v != s && v != t) g.add(in(v), out(v), Cost{0});
  for (std::size_t k = 0; k + 1 < instance.path.size(); ++k)
    g.add(out(instance.path[k + 1]), in(instance.path[k]), Cost{0});
  for (const auto& c : instance.chords) {
    auto [a, b] = pos[c.u] < pos[c.v] ? std::pair{c.u, c.v} : std::pair{c.v, c.u};
    if (a != b) g.add(in(a), out(b), c.cost, c.id);
  }
  return decode(g, in(s), in(t), instance);
}

std::optional<EdgeCostSolution> brute_force_cost_augmentation(const EdgeCostInstance& instance,
                                                              Disjointness kind, std::size_t max_edges) {
  const std::size_t m = instance.chords.size();
  if (m > max_edges) throw GuardExceeded("too many chords for subset enumeration: " + std::to_string(m));
  std::vector<NodePair> base;
  for (std::size_t k = 0; k + 1 < instance.path.size(); ++k) base.emplace_back(instance.path[k], instance.path[k + 1]);

  std::optional<EdgeCostSolution> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeCostSolution sol;
    auto pairs = base;
    for (std::size_t k = 0; k < m; ++k) {
      if (!(mask >> k & 1U)) continue;
      const auto& c = instance.chords[k];
      sol.edges.push_back(c.id);
      sol.cost += c.cost;
      pairs.emplace_back(c.u, c.v);
    }
    if (best && sol.cost >= best->cost) continue;
    const bool ok = kind == Disjointness::edge
                        ? two_edge_disjoint_paths_feasible(pairs, instance.s(), instance.t(), instance.n_nodes)
                        : two_disjoint_paths_feasible(pairs, instance.s(), instance.t(), instance.n_nodes);
    if (!ok) continue;
    std::sort(sol.edges.begin(), sol.edges.end());
    best = std::move(sol);
  }
  return best;
}

std::string AeDigraph::vertex_name(std::size_t v) const {
  if (v == source) return "s_0^out";
  if (v == sink) return "t_0^in";
  const auto& x = vertices[v];
  return std::to_string(x.node) + "_" + std::to_string(x.level) + (x.out ? "^out" : "^in");
}

std::vector<std::string> ae_special_case_violations(const ActivationInstance& instance) {
  std::vector<std::string> problems;
  for (const auto& e : validate(instance)) problems.push_back(e.message);
  if (!problems.empty()) return problems;
  if (!instance.path()) return {"no designated path"};
  if (instance.path_nodes().size() != instance.n_nodes()) problems.push_back("designated path is not Hamiltonian");
  const NodeId s = instance.s();
  const NodeId t = instance.t();
  const Cost one{1};
  for (const auto& e : instance.edges()) {
    const std::string label = "edge " + std::to_string(e.id);
    if (e.touches(s) && e.touches(t)) problems.push_back(label + ": s-t edge");
    if (e.cost_u > one || e.cost_v > one) problems.push_back(label + ": cost outside {0,1}");
    if (e.mid_cost != Cost{0}) problems.push_back(label + ": nonzero middle cost");
    for (NodeId w : {s, t})
      if (e.touches(w) && e.cost_at(w) != Cost{0}) problems.push_back(label + ": nonzero cost at a terminal");
  }
  return problems;
}

AeDigraph ae_build(const ActivationInstance& instance) {
  const auto problems = ae_special_case_violations(instance);
  if (!problems.empty()) {
    std::string msg = "instance outside the 0/1 special case:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InvalidInput(msg);
  }

  AeDigraph d;
  d.instance = instance;
  const auto path = instance.path_nodes();
  const NodeId s = instance.s();
  const NodeId t = instance.t();
  d.vertices.push_back({s, 0, true});
  d.vertices.push_back({t, 0, false});

  // vertex index per (node, level, out)
  std::vector<std::array<std::array<std::size_t, 2>, 2>> index(instance.n_nodes());
  index[s][0][1] = AeDigraph::source;
  index[t][0][0] = AeDigraph::sink;
  for (NodeId v : path) {
    if (v == s || v == t) continue;
    for (int a = 0; a < 2; ++a) {
      for (int o = 0; o < 2; ++o) {
        index[v][a][o] = d.vertices.size();
        d.vertices.push_back({v, a, o == 1});
      }
    }
  }
  d.out.resize(d.vertices.size());
  auto add = [&d](std::size_t from, std::size_t to, Cost w, AeArcKind kind, std::optional<EdgeId> e) {
    d.out[from].push_back(d.arcs.size());
    d.arcs.push_back({from, to, w, kind, e});
  };
  auto levels = [&](NodeId v) { return v == s || v == t ? std::vector<int>{0} : std::vector<int>{0, 1}; };

  for (NodeId v : path)
    if (v != s && v != t)
      for (int a = 0; a < 2; ++a) add(index[v][a][1], index[v][a][0], Cost{0}, AeArcKind::internal, std::nullopt);

  std::vector<std::size_t> pos(instance.n_nodes());
  for (std::size_t k = 0; k < path.size(); ++k) pos[path[k]] = k;

  for (EdgeId id : *instance.path()) {
    const auto& e = instance.edge(id);
    const auto [u, v] = pos[e.u] < pos[e.v] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    for (int a : levels(u))
      for (int b : levels(v)) add(index[v][b][0], index[u][a][1], Cost{a}, AeArcKind::backward, id);
  }
  for (const auto& e : instance.edges()) {
    if (instance.is_path_edge(e.id)) continue;
    const auto [u, v] = pos[e.u] < pos[e.v] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    for (int a : levels(u))
      for (int b : levels(v))
        if (e.cost_at(u) <= Cost{a} && e.cost_at(v) <= Cost{b})
          add(index[u][a][1], index[v][b][0], Cost{b}, AeArcKind::forward, e.id);
  }
  return d;
}

std::optional<TieBreak> parse_tie_break(std::string_view name) {
  if (name == "first") return TieBreak::first;
  if (name == "best") return TieBreak::best;
  if (name == "worst") return TieBreak::worst;
  return std::nullopt;
}

namespace {

Solution decode_ae(const AeDigraph& d, const std::vector<std::size_t>& arc_path) {
  std::vector<EdgeId> edges;
  for (std::size_t a : arc_path)
    if (d.arcs[a].kind == AeArcKind::forward) edges.push_back(*d.arcs[a].edge);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const bool feasible = augmentation_feasible(d.instance, edges);
  auto sol = make_solution(d.instance, std::move(edges), feasible);
  return sol;
}

}  // namespace

std::optional<AeResult> ae_solve(const AeDigraph& d, TieBreak tie_break) {
  const std::size_t sources[] = {AeDigraph::source};
  const auto tree = detail::dijkstra<AeArc>(d.arcs, d.out, sources);
  if (!tree.dist[AeDigraph::sink]) return std::nullopt;
  const Cost weight = *tree.dist[AeDigraph::sink];

  if (tie_break == TieBreak::first)
    return AeResult{weight, decode_ae(d, tree.arcs_to(AeDigraph::sink, d.arcs)), 1};

  if (d.vertices.size() > kMaxAeVertices)
    throw GuardExceeded("tie enumeration limited to " + std::to_string(kMaxAeVertices) + " digraph vertices");

  // distance to the sink, for pruning partial paths
  std::vector<std::vector<std::size_t>> reverse_out(d.vertices.size());
  std::vector<AeArc> reversed;
  for (const auto& a : d.arcs) {
    reverse_out[a.to].push_back(reversed.size());
    reversed.push_back({a.to, a.from, a.weight, a.kind, a.edge});
  }
  const std::size_t sinks[] = {AeDigraph::sink};
  const auto to_sink = detail::dijkstra<AeArc>(reversed, reverse_out, sinks).dist;

  std::optional<Solution> chosen;
  std::size_t examined = 0;
  std::vector<std::size_t> stack;
  std::vector<bool> on_path(d.vertices.size(), false);
  std::function<void(std::size_t, Cost)> walk = [&](std::size_t x, Cost so_far) {
    if (x == AeDigraph::sink) {
      if (++examined > kMaxAePaths) throw GuardExceeded("too many minimum-weight paths to enumerate");
      auto sol = decode_ae(d, stack);
      const bool take = !chosen || (tie_break == TieBreak::best ? sol.value < chosen->value
                                                                  : sol.value > chosen->value);
      if (take) chosen = std::move(sol);
      return;
    }
    on_path[x] = true;
    for (std::size_t a : d.out[x]) {
      const auto& arc = d.arcs[a];
      if (on_path[arc.to] || !to_sink[arc.to]) continue;
      const Cost reach = so_far + arc.weight;
      if (reach + *to_sink[arc.to] > weight) continue;
      stack.push_back(a);
      walk(arc.to, reach);
      stack.pop_back();
    }
    on_path[x] = false;
  };
  walk(AeDigraph::source, Cost{0});
  return AeResult{weight, std::move(*chosen), examined};
}

ActivationInstance fig2_instance() {
  using namespace fig2;
  const Cost o{0};
  const Cost l{1};
  std::vector<ActivationEdge> edges = {
      {su, s, u, o, o, o}, {uv, u, v, o, o, o}, {vx, v, x, o, o, o}, {xy, x, y, o, o, o},
      {yz, y, z, o, o, o}, {zp, z, p, o, o, o}, {pq, p, q, o, o, o}, {qt, q, t, o, o, o},
      {sx, s, x, o, l, o}, {xz, x, z, l, l, o}, {zt, z, t, l, o, o}, {sv, s, v, o, l, o},
      {pt, p, t, l, o, o}, {uy, u, y, o, o, o}, {yq, y, q, o, o, o},
  };
  return ActivationInstance(9, s, t, std::move(edges), std::vector<EdgeId>{su, uv, vx, xy, yz, zp, pq, qt});
}

}  // namespace act2dp
