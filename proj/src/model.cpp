#include "act2dp/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace act2dp {

Cost LevelAssignment::value() const {
  Cost total;
  for (Cost l : levels) total += l;
  return total;
}

ActivationInstance::ActivationInstance(std::size_t n_nodes, NodeId s, NodeId t,
                                       std::vector<ActivationEdge> edges,
                                       std::optional<std::vector<EdgeId>> path)
    : n_nodes_(n_nodes), s_(s), t_(t), edges_(std::move(edges)), path_(std::move(path)),
      incidence_(n_nodes) {
  // Out-of-range endpoints and duplicate ids are left for validate() to report.
  for (std::size_t pos = 0; pos < edges_.size(); ++pos) {
    const auto& e = edges_[pos];
    index_.try_emplace(e.id, pos);
    if (e.u < n_nodes_) incidence_[e.u].push_back(pos);
    if (e.v < n_nodes_ && e.v != e.u) incidence_[e.v].push_back(pos);
  }
}

const ActivationEdge& ActivationInstance::edge(EdgeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidInput("unknown edge id " + std::to_string(id));
  return edges_[it->second];
}

bool ActivationInstance::is_path_edge(EdgeId id) const {
  return path_ && std::find(path_->begin(), path_->end(), id) != path_->end();
}

std::vector<NodeId> ActivationInstance::path_nodes() const {
  if (!path_) throw InvalidInput("instance has no designated path");
  std::vector<NodeId> nodes{s_};
  for (EdgeId id : *path_) {
    const auto& e = edge(id);
    if (!e.touches(nodes.back())) throw InvalidInput("designated path is not contiguous");
    nodes.push_back(e.other(nodes.back()));
  }
  return nodes;
}

LevelAssignment induced_levels(const ActivationInstance& instance, std::span<const EdgeId> edge_ids) {
  LevelAssignment result{std::vector<Cost>(instance.n_nodes())};
  for (EdgeId id : edge_ids) {
    const auto& e = instance.edge(id);
    result.levels[e.u] = std::max(result.levels[e.u], e.cost_u);
    result.levels[e.v] = std::max(result.levels[e.v], e.cost_v);
  }
  return result;
}

Cost activation_cost(const ActivationInstance& instance, std::span<const EdgeId> edge_ids) {
  return induced_levels(instance, edge_ids).value();
}

Cost tau(const ActivationInstance& instance, std::span<const EdgeId> edge_ids) {
  Cost total = activation_cost(instance, edge_ids);
  std::set<EdgeId> distinct(edge_ids.begin(), edge_ids.end());
  for (EdgeId id : distinct) total += instance.edge(id).mid_cost;
  return total;
}

std::vector<Cost> candidate_levels(const ActivationInstance& instance, NodeId v) {
  std::vector<Cost> levels{Cost{0}};
  for (std::size_t pos : instance.incident(v)) levels.push_back(instance.edges()[pos].cost_at(v));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

Solution make_solution(const ActivationInstance& instance, std::vector<EdgeId> edge_ids, bool feasible) {
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  Solution sol;
  sol.levels = induced_levels(instance, edge_ids);
  sol.value = tau(instance, edge_ids);
  sol.edge_ids = std::move(edge_ids);
  sol.feasible = feasible;
  return sol;
}

ZeroedTerminals zero_terminal_costs(const ActivationInstance& instance, Cost level_s, Cost level_t) {
  const NodeId s = instance.s();
  const NodeId t = instance.t();
  std::vector<ActivationEdge> kept;
  std::set<EdgeId> dropped;
  for (auto e : instance.edges()) {
    if ((e.touches(s) && e.cost_at(s) > level_s) || (e.touches(t) && e.cost_at(t) > level_t)) {
      dropped.insert(e.id);
      continue;
    }
    if (e.u == s || e.u == t) e.cost_u = Cost{0};
    if (e.v == s || e.v == t) e.cost_v = Cost{0};
    kept.push_back(e);
  }
  auto path = instance.path();
  if (path && std::any_of(path->begin(), path->end(), [&](EdgeId id) { return dropped.contains(id); }))
    path.reset();
  return {ActivationInstance(instance.n_nodes(), s, t, std::move(kept), std::move(path)), level_s, level_t};
}

namespace {

std::string edge_label(const ActivationEdge& e) {
  std::ostringstream os;
  os << "edge " << e.id << " (" << e.u << "," << e.v << ")";
  return os.str();
}

void validate_path(const ActivationInstance& instance, std::vector<ValidationError>& errors) {
  const auto& path = *instance.path();
  if (path.empty()) {
    errors.push_back({"path endpoint: designated path is empty"});
    return;
  }
  std::vector<bool> seen(instance.n_nodes(), false);
  NodeId at = instance.s();
  seen[at] = true;
  for (EdgeId id : path) {
    if (!instance.has_edge(id)) {
      errors.push_back({"path references unknown edge " + std::to_string(id)});
      return;
    }
    const auto& e = instance.edge(id);
    if (e.cost_u != Cost{0} || e.cost_v != Cost{0} || e.mid_cost != Cost{0})
      errors.push_back({"path " + edge_label(e) + " has nonzero cost"});
    if (!e.touches(at)) {
      errors.push_back({"path not contiguous at " + edge_label(e)});
      return;
    }
    at = e.other(at);
    if (at >= instance.n_nodes()) return;
    if (seen[at]) {
      errors.push_back({"path not simple: node " + std::to_string(at) + " repeated"});
      return;
    }
    seen[at] = true;
  }
  if (at != instance.t())
    errors.push_back({"path endpoint: designated path ends at " + std::to_string(at) + " instead of t"});
}

}  // namespace

std::vector<ValidationError> validate(const ActivationInstance& instance) {
  std::vector<ValidationError> errors;
  const auto n = instance.n_nodes();
  if (instance.s() >= n) errors.push_back({"s out of range: " + std::to_string(instance.s())});
  if (instance.t() >= n) errors.push_back({"t out of range: " + std::to_string(instance.t())});
  if (instance.s() == instance.t()) errors.push_back({"s equals t"});

  std::set<EdgeId> ids;
  bool nodes_ok = true;
  for (const auto& e : instance.edges()) {
    if (!ids.insert(e.id).second) errors.push_back({"duplicate edge id " + std::to_string(e.id)});
    if (e.u >= n || e.v >= n) {
      errors.push_back({edge_label(e) + ": node out of range"});
      nodes_ok = false;
    }
    if (e.u == e.v) errors.push_back({edge_label(e) + ": self-loop"});
  }
  if (instance.path() && nodes_ok && instance.s() < n && instance.t() < n) validate_path(instance, errors);
  return errors;
}

void require_valid(const ActivationInstance& instance) {
  auto errors = validate(instance);
  if (errors.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& e : errors) msg += "\n  " + e.message;
  throw InvalidInput(msg);
}

}  // namespace act2dp
