#include "act2dp/dpaug.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "act2dp/oracle.hpp"

namespace act2dp {

namespace {

std::size_t level_index(const std::vector<Cost>& levels, Cost l, PathIndex w) {
  auto it = std::lower_bound(levels.begin(), levels.end(), l);
  if (it == levels.end() || *it != l)
    throw InvalidInput("level " + std::to_string(l.value()) + " is not a candidate at node " + std::to_string(w));
  return static_cast<std::size_t>(it - levels.begin());
}

struct Candidate {
  MaybeCost value;
  std::optional<DpChoice> choice;
};

bool edge_fits(const HamEdge& e, PathIndex i, PathIndex j, Cost level_i, Cost level_j) {
  if (e.touches(i) && e.cost_at(i) > level_i) return false;
  if (e.touches(j) && e.cost_at(j) > level_j) return false;
  return true;
}

Candidate best_g(const HamInstance& ham, PathIndex i, PathIndex j, Cost level_i, Cost level_j) {
  Candidate best;
  const auto& edges = ham.edges();
  for (HamEdgeId id = 0; id < edges.size(); ++id) {
    const auto& e = edges[id];
    if (e.y != ham.n() || e.x < i || e.x >= j) continue;
    const HamEdgeId single[] = {id};
    const MaybeCost value = forced_cost_alpha(ham, single, i, j, level_i, level_j);
    if (better(value, best.value)) best = {value, DpChoice{id, std::nullopt}};
  }
  return best;
}

Candidate best_h(const HamInstance& ham, const DpTable& table, PathIndex i, PathIndex j, Cost level_i,
                 Cost level_j) {
  Candidate best;
  const auto& edges = ham.edges();
  for (HamEdgeId id = 0; id < edges.size(); ++id) {
    const auto& e = edges[id];
    if (e.x < i || e.x >= j || e.y <= j || e.y >= ham.n()) continue;
    if (!table.computed(j, e.y))
      throw std::logic_error("table row (" + std::to_string(j) + "," + std::to_string(e.y) + ") not computed");
    for (Cost level_y : ham.levels(e.y)) {
      if (!edge_fits(e, i, e.y, level_i, level_y)) continue;
      const DpKey successor{j, e.y, level_j, level_y};
      const MaybeCost rest = table.at(successor).value;
      if (!rest) continue;
      const Cost value = e.mid_cost + level_i + beta(ham, id, i, level_i, level_y) + *rest;
      if (better(value, best.value)) best = {value, DpChoice{id, successor}};
    }
  }
  return best;
}

}  // namespace

DpTable::DpTable(const HamInstance& ham)
    : side_(static_cast<std::size_t>(ham.n()) + 1), last_j_(std::max<PathIndex>(ham.n() - 1, 1)) {
  for (PathIndex w = 0; w <= ham.n(); ++w) levels_.push_back(ham.levels(w));
  cells_.resize(side_ * side_);
  computed_.assign(side_ * side_, false);
  for (PathIndex i = 0; i < last_j_; ++i)
    for (PathIndex j = i + 1; j <= last_j_; ++j) cells_[i * side_ + j].resize(levels_[i].size() * levels_[j].size());
}

bool DpTable::computed(PathIndex i, PathIndex j) const {
  return i < j && j <= last_j_ && computed_[i * side_ + j];
}

void DpTable::mark_computed(PathIndex i, PathIndex j) { computed_.at(i * side_ + j) = true; }

std::size_t DpTable::slot(const DpKey& key) const {
  if (!(key.i < key.j && key.j <= last_j_))
    throw InvalidInput("key (" + std::to_string(key.i) + "," + std::to_string(key.j) + ") out of range");
  return level_index(levels_.at(key.i), key.level_i, key.i) * levels_.at(key.j).size() +
         level_index(levels_.at(key.j), key.level_j, key.j);
}

const DpEntry& DpTable::at(const DpKey& key) const {
  return cells_[key.i * side_ + key.j][slot(key)];
}

DpEntry& DpTable::at(const DpKey& key) { return cells_[key.i * side_ + key.j][slot(key)]; }

void DpTable::dump(std::ostream& os) const {
  for (PathIndex i = 0; i < last_j_; ++i) {
    for (PathIndex j = i + 1; j <= last_j_; ++j) {
      for (Cost li : levels_.at(i)) {
        for (Cost lj : levels_.at(j)) {
          const auto& entry = at({i, j, li, lj});
          os << "f[" << i << ',' << j << "](" << li << ',' << lj << ") = ";
          if (entry.value)
            os << *entry.value;
          else
            os << "inf";
          if (entry.choice) {
            const auto& c = *entry.choice;
            os << " ; e" << c.edge;
            if (c.successor)
              os << " then f[" << c.successor->i << ',' << c.successor->j << "](" << c.successor->level_i << ','
                 << c.successor->level_j << ')';
          }
          os << '\n';
        }
      }
    }
  }
}

bool within_levels(const HamInstance& ham, std::span<const HamEdgeId> edge_ids, PathIndex i, PathIndex j,
                   Cost level_i, Cost level_j) {
  return std::all_of(edge_ids.begin(), edge_ids.end(),
                     [&](HamEdgeId id) { return edge_fits(ham.edge(id), i, j, level_i, level_j); });
}

MaybeCost forced_cost_alpha(const HamInstance& ham, std::span<const HamEdgeId> edge_ids, PathIndex i,
                            PathIndex j, Cost level_i, Cost level_j) {
  if (!within_levels(ham, edge_ids, i, j, level_i, level_j)) return std::nullopt;
  const auto levels = ham_induced_levels(ham, edge_ids);
  Cost total = level_i + level_j;
  for (PathIndex w = 0; w <= ham.n(); ++w)
    if (w != i && w != j) total += levels[w];
  std::vector<HamEdgeId> distinct(edge_ids.begin(), edge_ids.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (HamEdgeId id : distinct) total += ham.edge(id).mid_cost;
  return total;
}

Cost beta(const HamInstance& ham, HamEdgeId edge, PathIndex i, Cost level_i, Cost level_y) {
  const auto& e = ham.edge(edge);
  if (e.x < i || !edge_fits(e, i, e.y, level_i, level_y))
    throw InvalidInput("beta: edge " + std::to_string(edge) + " violates its precondition");
  return e.x == i ? Cost{0} : e.cost_x;
}

MaybeCost g_value(const HamInstance& ham, PathIndex i, PathIndex j, Cost level_i, Cost level_j) {
  return best_g(ham, i, j, level_i, level_j).value;
}

MaybeCost h_value(const HamInstance& ham, const DpTable& table, PathIndex i, PathIndex j, Cost level_i,
                  Cost level_j) {
  return best_h(ham, table, i, j, level_i, level_j).value;
}

DpTable fill_table(const HamInstance& ham) {
  DpTable table(ham);
  for (PathIndex i = table.last_j(); i-- > 0;) {
    for (PathIndex j = i + 1; j <= table.last_j(); ++j) {
      for (Cost li : ham.levels(i)) {
        for (Cost lj : ham.levels(j)) {
          Candidate g = best_g(ham, i, j, li, lj);
          Candidate h = best_h(ham, table, i, j, li, lj);
          auto& entry = table.at({i, j, li, lj});
          // ties keep the single-edge case
          const Candidate& pick = better(h.value, g.value) ? h : g;
          entry.value = pick.value;
          entry.choice = pick.choice;
        }
      }
      table.mark_computed(i, j);
    }
  }
  return table;
}

std::vector<HamEdgeId> reconstruct(const DpTable& table, const DpKey& key) {
  std::vector<HamEdgeId> edges;
  std::optional<DpKey> at = key;
  while (at) {
    const auto& entry = table.at(*at);
    if (!entry.value || !entry.choice) throw InvalidInput("cannot reconstruct an unreachable entry");
    edges.push_back(entry.choice->edge);
    at = entry.choice->successor;
  }
  return edges;
}

std::optional<AugmentationResult> solve_augmentation_exact(const ActivationInstance& aug_instance,
                                                           const ExactOptions& options) {
  HamInstance ham = reduce_to_hamiltonian(aug_instance, options.reduce);
  const DpTable table = fill_table(ham);
  if (options.dump_table) table.dump(*options.dump_table);

  std::optional<DpKey> best;
  MaybeCost best_value;
  for (Cost l0 : ham.levels(0)) {
    for (Cost l1 : ham.levels(1)) {
      const DpKey key{0, 1, l0, l1};
      if (better(table.at(key).value, best_value)) {
        best_value = table.at(key).value;
        best = key;
      }
    }
  }
  if (!best) return std::nullopt;

  AugmentationResult result;
  result.ham_edges = reconstruct(table, *best);
  result.dp_value = *best_value;
  const auto lifted = lift(ham, result.ham_edges);
  result.solution = make_solution(aug_instance, lifted, augmentation_feasible(aug_instance, lifted));
  result.ham = std::move(ham);
  return result;
}

bool satisfies_chain_order(const HamInstance& ham, std::span<const HamEdgeId> edge_ids, PathIndex i,
                           PathIndex j) {
  if (edge_ids.empty()) return false;
  std::vector<const HamEdge*> chain;
  for (HamEdgeId id : edge_ids) chain.push_back(&ham.edge(id));
  std::sort(chain.begin(), chain.end(), [](const HamEdge* a, const HamEdge* b) { return a->x < b->x; });

  // v0 = a0, v_{2k-1} = a_k, v_{2k} = b_{k-1}, v_{2q+1} = b_q
  const std::size_t q = chain.size() - 1;
  std::vector<PathIndex> v{chain[0]->x};
  for (std::size_t k = 1; k <= q; ++k) {
    v.push_back(chain[k]->x);
    v.push_back(chain[k - 1]->y);
  }
  v.push_back(chain[q]->y);

  if (v.front() < i || v.front() >= j || v.back() != ham.n()) return false;
  if (q >= 1 && v[1] < j) return false;
  for (std::size_t p = 0; p + 1 < v.size(); ++p) {
    const bool weak = p >= 2 && p % 2 == 0 && p + 1 < v.size() - 1;
    if (weak ? v[p] > v[p + 1] : v[p] >= v[p + 1]) return false;
  }
  return true;
}

}  // namespace act2dp
