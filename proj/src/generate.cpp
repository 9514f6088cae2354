#include "act2dp/generate.hpp"

#include <random>
#include <utility>

namespace act2dp {

namespace {

/// Platform-independent bounded draw (std distributions are not portable).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Cost cost(Cost max) { return Cost{static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max.value()) + 1))}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

ActivationInstance generate(const GenerateParams& params) {
  if (params.nodes < 3) throw InvalidInput("generator needs at least 3 nodes");
  if (params.off_path_nodes + 2 > params.nodes) throw InvalidInput("too many off-path nodes");
  if (params.special_case_01 && (params.off_path_nodes != 0 || params.two_dp))
    throw InvalidInput("the 0/1 special case needs a Hamiltonian designated path");

  Draw draw(params.seed);
  const std::size_t n = params.nodes;
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  for (std::size_t k = n - 1; k > 0; --k) std::swap(order[k], order[draw.below(k + 1)]);

  const std::size_t on_path = n - params.off_path_nodes;
  const NodeId s = order.front();
  const NodeId t = order[on_path - 1];

  std::vector<ActivationEdge> edges;
  std::vector<EdgeId> path;
  auto add = [&edges](NodeId u, NodeId v, Cost cu, Cost cv) {
    edges.push_back({static_cast<EdgeId>(edges.size()), u, v, cu, cv, Cost{0}});
    return edges.back().id;
  };
  auto random_cost = [&](NodeId at) {
    if (params.special_case_01) return at == s || at == t ? Cost{0} : Cost{draw.below(3) == 0 ? 0 : 1};
    return draw.cost(params.max_cost);
  };

  for (std::size_t k = 0; k + 1 < on_path; ++k) {
    Cost cu{0};
    Cost cv{0};
    if (params.two_dp) {
      cu = draw.cost(params.max_cost);
      cv = draw.cost(params.max_cost);
    }
    path.push_back(add(order[k], order[k + 1], cu, cv));
  }

  // each off-path node hangs off two distinct earlier nodes
  for (std::size_t k = on_path; k < n; ++k) {
    const NodeId g = order[k];
    const auto a = static_cast<std::size_t>(draw.below(k));
    auto b = static_cast<std::size_t>(draw.below(k - 1));
    if (b >= a) ++b;
    for (std::size_t other : {a, b}) {
      const Cost cu = random_cost(order[other]);
      const Cost cv = random_cost(g);
      add(order[other], g, cu, cv);
    }
  }

  for (std::size_t k = 0; k < params.extra_edges; ++k) {
    const std::size_t pool = params.special_case_01 ? on_path : n;
    NodeId u = 0;
    NodeId v = 0;
    do {
      u = order[draw.below(pool)];
      v = order[draw.below(pool)];
    } while (u == v || (params.special_case_01 && ((u == s && v == t) || (u == t && v == s))));
    const Cost cu = random_cost(u);
    const Cost cv = random_cost(v);
    add(u, v, cu, cv);
  }

  std::optional<std::vector<EdgeId>> designated;
  if (!params.two_dp) designated = std::move(path);
  return ActivationInstance(n, s, t, std::move(edges), std::move(designated));
}

}  // namespace act2dp
