#pragma once

// Corpus-wide checks shared by the unit tests and the acceptance runner.
// Each returns a Report; an empty failure list means the property held on
// every case.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "act2dp/approx.hpp"
#include "act2dp/baselines.hpp"
#include "act2dp/cli.hpp"
#include "act2dp/dpaug.hpp"
#include "act2dp/io.hpp"
#include "act2dp/oracle.hpp"
#include "support.hpp"

namespace act2dp::testing {

struct Report {
  std::size_t cases = 0;
  /// Cases with a feasible optimum, where the comparison is non-trivial.
  std::size_t feasible = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
    else if (failures.size() == 20) failures.push_back("...");
  }
};

inline std::string show(MaybeCost c) { return c ? std::to_string(c->value()) : std::string("inf"); }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline ActivationInstance without_path(const ActivationInstance& inst) {
  return ActivationInstance(inst.n_nodes(), inst.s(), inst.t(), inst.edges());
}

// ---------------------------------------------------------------------------

inline Report check_fig2_counterexample() {
  Stopwatch clock;
  Report r;
  namespace f2 = fig2;
  const auto inst = fig2_instance();
  r.cases = 1;

  const auto exact = solve_augmentation_exact(inst);
  if (!exact) {
    r.fail("exact DP reported infeasible");
    return r;
  }
  const std::vector<EdgeId> optimal{f2::sx, f2::xz, f2::zt, f2::uy, f2::yq};
  if (exact->solution.value != Cost{2}) r.fail("exact value " + std::to_string(exact->solution.value.value()));
  if (exact->solution.edge_ids != optimal) r.fail("exact edge set differs from {sx,xz,zt,uy,yq}");

  const auto digraph = ae_build(inst);
  const auto best = ae_solve(digraph, TieBreak::best);
  const auto worst = ae_solve(digraph, TieBreak::worst);
  if (!best || !worst) {
    r.fail("AE digraph has no source-sink path");
    return r;
  }
  if (best->weight != Cost{4} || worst->weight != Cost{4})
    r.fail("AE minimum weight " + std::to_string(best->weight.value()));
  if (best->solution.value != Cost{2}) r.fail("AE best value " + std::to_string(best->solution.value.value()));
  if (worst->solution.value != Cost{4}) r.fail("AE worst value " + std::to_string(worst->solution.value.value()));
  // worst / opt == 2 exactly
  if (worst->solution.value.value() != 2 * exact->solution.value.value()) r.fail("worst/opt ratio is not 2");

  r.seconds = clock.seconds();
  if (r.seconds >= 1.0) r.fail("took " + std::to_string(r.seconds) + " s");
  return r;
}

inline Report check_exact_vs_oracle(const std::vector<ActivationInstance>& corpus) {
  Stopwatch clock;
  Report r;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& inst = corpus[k];
    const auto exact = solve_augmentation_exact(inst);
    const auto brute = brute_force_augmentation(inst);
    ++r.cases;
    const std::string tag = "instance " + std::to_string(k) + ": ";
    if (exact.has_value() != brute.has_value()) {
      r.fail(tag + "feasibility differs");
      continue;
    }
    if (!exact) continue;
    ++r.feasible;
    if (exact->solution.value != brute->value)
      r.fail(tag + "dp " + std::to_string(exact->solution.value.value()) + " vs oracle " +
             std::to_string(brute->value.value()));
    if (exact->dp_value != exact->solution.value) r.fail(tag + "dp value differs from lifted tau");
    if (!augmentation_feasible(inst, exact->solution.edge_ids)) r.fail(tag + "returned set infeasible");
    if (tau(inst, exact->solution.edge_ids) != exact->solution.value) r.fail(tag + "value is not tau of the set");
  }
  r.seconds = clock.seconds();
  if (r.seconds >= 30.0) r.fail("took " + std::to_string(r.seconds) + " s");
  return r;
}

inline Report check_reduction_equivalence(const std::vector<ActivationInstance>& corpus) {
  Stopwatch clock;
  Report r;
  ReduceOptions unpruned;
  unpruned.prune_dominated = false;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& inst = corpus[k];
    const auto original = brute_force_augmentation(inst);
    const std::string tag = "instance " + std::to_string(k) + ": ";
    for (const auto& options : {ReduceOptions{}, unpruned}) {
      const auto ham = reduce_to_hamiltonian(inst, options);
      const auto reduced = brute_force_ham(ham, 24);
      ++r.cases;
      if (original.has_value() != reduced.has_value()) {
        r.fail(tag + "feasibility differs");
        continue;
      }
      if (original) ++r.feasible;
      if (original && original->value != reduced->value)
        r.fail(tag + "original " + std::to_string(original->value.value()) + " vs reduced " +
               std::to_string(reduced->value.value()));
    }
  }
  r.seconds = clock.seconds();
  return r;
}

inline Report check_approximation(const std::vector<ActivationInstance>& corpus, std::size_t* feasible_count) {
  Stopwatch clock;
  Report r;
  std::size_t feasible = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& inst = corpus[k];
    const auto opt = brute_force_2dp(inst);
    const auto approx = solve_2dp_15(inst);
    ++r.cases;
    const std::string tag = "instance " + std::to_string(k) + ": ";
    if (opt.has_value() != approx.solution.has_value()) {
      r.fail(tag + "feasibility differs");
      continue;
    }
    if (!opt) continue;
    ++feasible;
    const auto& sol = *approx.solution;
    const auto v = sol.value.value();
    const auto o = opt->value.value();
    if (v < o) r.fail(tag + "value " + std::to_string(v) + " below optimum " + std::to_string(o));
    if (2 * v > 3 * o) r.fail(tag + "value " + std::to_string(v) + " exceeds 1.5 x " + std::to_string(o));
    if (!solution_feasible(inst, sol.edge_ids)) r.fail(tag + "output infeasible");
    for (EdgeId id : sol.edge_ids)
      if (!sol.levels.activates(inst.edge(id))) r.fail(tag + "levels do not activate edge " + std::to_string(id));
    if (tau(inst, sol.edge_ids) != sol.value) r.fail(tag + "value is not tau of the set");
  }

  const auto fig2_full = solve_2dp_15(without_path(fig2_instance()));
  ++r.cases;
  if (!fig2_full.solution || fig2_full.solution->value != Cost{2})
    r.fail("fig2 full problem: " + show(fig2_full.solution ? MaybeCost(fig2_full.solution->value) : std::nullopt));
  r.feasible = feasible;
  if (feasible_count) *feasible_count = feasible;
  r.seconds = clock.seconds();
  return r;
}

// Keys (i, j) of the table for an instance with last index n.
inline std::vector<std::pair<PathIndex, PathIndex>> table_keys(const HamInstance& ham) {
  std::vector<std::pair<PathIndex, PathIndex>> out;
  if (ham.n() == 1) return {{0, 1}};
  for (PathIndex i = 0; i + 1 < ham.n(); ++i)
    for (PathIndex j = i + 1; j < ham.n(); ++j) out.push_back({i, j});
  return out;
}

inline Report check_forced_cost_algebra(const std::vector<ActivationInstance>& corpus) {
  Stopwatch clock;
  Report r;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto ham = reduce_to_hamiltonian(corpus[k]);
    if (ham.n() > 7) continue;
    const auto table = fill_table(ham);
    const std::string tag = "instance " + std::to_string(k);
    for (const auto& [i, j] : table_keys(ham)) {
      const auto family = enumerate_minimal_family(ham, i, j);
      for (Cost li : ham.levels(i))
        for (Cost lj : ham.levels(j)) {
          const std::string key = tag + " f[" + std::to_string(i) + "," + std::to_string(j) + "](" +
                                  std::to_string(li.value()) + "," + std::to_string(lj.value()) + ")";
          MaybeCost family_min;
          for (const auto& f : family) {
            ++r.cases;
            const auto alpha = forced_cost_alpha(ham, f, i, j, li, lj);
            if (better(alpha, family_min)) family_min = alpha;

            // alpha >= tau, with equality iff the induced levels at i and j match
            const auto induced = ham_induced_levels(ham, f);
            const Cost t = ham_tau(ham, f);
            const bool matches = induced[i] == li && induced[j] == lj;
            if (alpha && *alpha < t) r.fail(key + ": alpha below tau");
            if (matches != (alpha && *alpha == t)) r.fail(key + ": equality condition fails");

            // decomposition along the first edge
            if (f.size() >= 2) {
              const auto& e = ham.edge(f.front());
              const Cost ly = induced[e.y];
              const std::vector<HamEdgeId> rest(f.begin() + 1, f.end());
              const auto tail = forced_cost_alpha(ham, rest, j, e.y, lj, ly);
              const bool head_fits = e.x != i || e.cost_x <= li;
              MaybeCost rhs;
              if (head_fits && tail) rhs = e.mid_cost + li + beta(ham, f.front(), i, li, ly) + *tail;
              if (rhs != alpha) r.fail(key + ": decomposition " + show(alpha) + " vs " + show(rhs));
            }
          }
          const auto& entry = table.at(DpKey{i, j, li, lj});
          if (entry.value != family_min)
            r.fail(key + ": table " + show(entry.value) + " vs family minimum " + show(family_min));
          if (j + 1 == ham.n() || (ham.n() == 1 && j == 1)) {
            ++r.cases;
            const auto g = g_value(ham, i, j, li, lj);
            if (entry.value != g) r.fail(key + ": base case f " + show(entry.value) + " vs g " + show(g));
          }
        }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

inline Report check_family_equivalence(const std::vector<ActivationInstance>& corpus) {
  Report r;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto ham = reduce_to_hamiltonian(corpus[k]);
    if (ham.n() > 7) continue;
    for (const auto& [i, j] : table_keys(ham)) {
      ++r.cases;
      std::set<std::vector<HamEdgeId>> recursive;
      for (auto f : enumerate_minimal_family(ham, i, j)) {
        std::sort(f.begin(), f.end());
        recursive.insert(f);
      }
      const auto by_subsets = minimal_sets_by_subsets(ham, i, j, 24);
      const std::set<std::vector<HamEdgeId>> subsets(by_subsets.begin(), by_subsets.end());
      if (recursive != subsets)
        r.fail("instance " + std::to_string(k) + " (" + std::to_string(i) + "," + std::to_string(j) + "): " +
               std::to_string(recursive.size()) + " recursive vs " + std::to_string(subsets.size()) + " minimal");
    }
  }
  return r;
}

inline Report check_chain_order(const std::vector<ActivationInstance>& corpus) {
  Stopwatch clock;
  Report r;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const std::string tag = "instance " + std::to_string(k);
    const auto exact = solve_augmentation_exact(corpus[k]);
    if (exact) {
      ++r.cases;
      if (!satisfies_chain_order(exact->ham, exact->ham_edges)) r.fail(tag + ": solution breaks chain order");
    }
    const auto ham = reduce_to_hamiltonian(corpus[k]);
    const auto table = fill_table(ham);
    for (const auto& [i, j] : table_keys(ham)) {
      for (Cost li : ham.levels(i))
        for (Cost lj : ham.levels(j)) {
          const DpKey key{i, j, li, lj};
          if (!table.at(key).value) continue;
          ++r.cases;
          if (!satisfies_chain_order(ham, reconstruct(table, key), i, j))
            r.fail(tag + ": reconstruction at (" + std::to_string(i) + "," + std::to_string(j) + ") breaks order");
        }
      if (ham.n() > 7) continue;
      for (const auto& f : enumerate_minimal_family(ham, i, j)) {
        ++r.cases;
        if (!satisfies_chain_order(ham, f, i, j)) r.fail(tag + ": enumerated set breaks chain order");
      }
      for (const auto& f : minimal_sets_by_subsets(ham, i, j, 24)) {
        ++r.cases;
        if (!satisfies_chain_order(ham, f, i, j)) r.fail(tag + ": minimal set breaks chain order");
      }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

/// Hamiltonian augmentation instances read with ordinary edge costs.
inline std::vector<EdgeCostInstance> edge_cost_corpus(std::size_t count, std::uint64_t base_seed = 12000) {
  std::vector<EdgeCostInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    GenerateParams p;
    p.seed = base_seed + k;
    p.nodes = 3 + k % 5;
    p.extra_edges = 1 + (k / 5) % 6;
    p.max_cost = Cost{3};
    out.push_back(edge_cost_instance(generate(p)));
  }
  return out;
}

inline Report check_baselines(const std::vector<EdgeCostInstance>& corpus) {
  Stopwatch clock;
  Report r;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& inst = corpus[k];
    const std::string tag = "instance " + std::to_string(k) + ": ";
    const std::pair<std::optional<EdgeCostSolution>, Disjointness> runs[] = {
        {alg1_mincost_2edp_aug(inst), Disjointness::edge},
        {alg1_nodedisjoint_variant(inst), Disjointness::node},
    };
    for (const auto& [got, kind] : runs) {
      ++r.cases;
      const auto brute = brute_force_cost_augmentation(inst, kind);
      const std::string which = kind == Disjointness::edge ? "edge: " : "node: ";
      if (got.has_value() != brute.has_value()) {
        r.fail(tag + which + "feasibility differs");
        continue;
      }
      if (got) ++r.feasible;
      if (got && got->cost != brute->cost)
        r.fail(tag + which + std::to_string(got->cost.value()) + " vs oracle " +
               std::to_string(brute->cost.value()));
    }
  }
  r.seconds = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Determinism of the command line, in process.

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  bool operator==(const CliRun&) const = default;
};

inline CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

inline Report check_cli_determinism(const std::filesystem::path& dir) {
  Report r;
  std::filesystem::create_directories(dir);
  const auto fig2_path = (dir / "fig2.json").string();
  const auto fig2_full = (dir / "fig2_full.json").string();
  const auto sol_path = (dir / "fig2_sol.json").string();
  write_file(fig2_path, emit_instance(fig2_instance()));
  write_file(fig2_full, emit_instance(without_path(fig2_instance())));
  write_file(sol_path, run_cli({"solve", "aug", fig2_path}).out);

  std::vector<std::string> aug_files{fig2_path};
  std::vector<std::string> full_files{fig2_full};
  const auto aug = augmentation_corpus(6, 31);
  const auto full = two_dp_corpus(6, 37);
  for (std::size_t k = 0; k < aug.size(); ++k) {
    aug_files.push_back((dir / ("aug" + std::to_string(k) + ".json")).string());
    write_file(aug_files.back(), emit_instance(aug[k]));
    full_files.push_back((dir / ("full" + std::to_string(k) + ".json")).string());
    write_file(full_files.back(), emit_instance(full[k]));
  }

  std::vector<std::vector<std::string>> commands{
      {"demo", "fig2"},
      {"gen", "--nodes", "7", "--extra-edges", "5", "--seed", "3"},
      {"gen", "--nodes", "6", "--extra-edges", "4", "--seed", "9", "--special-01"},
      {"gen", "--nodes", "7", "--extra-edges", "3", "--off-path", "2", "--max-cost", "2", "--seed", "4"},
      {"gen", "--nodes", "5", "--extra-edges", "4", "--two-dp", "--seed", "8"},
      {"verify", fig2_path, sol_path},
  };
  for (std::size_t k = 0; k < aug_files.size(); ++k) {
    const auto& f = aug_files[k];
    commands.push_back({"solve", "aug", f});
    commands.push_back({"solve", "aug", f, "--no-prune", "--dump-table"});
    commands.push_back({"oracle", "aug", f});
    // the edge-cost baselines need a Hamiltonian path
    const bool hamiltonian = k == 0 || aug[k - 1].path()->size() + 1 == aug[k - 1].n_nodes();
    if (!hamiltonian) continue;
    commands.push_back({"baseline", "edp-aug", f});
    commands.push_back({"baseline", "dp-aug", f});
  }
  for (const auto& f : full_files) {
    commands.push_back({"solve", "2dp", f, "-v"});
    commands.push_back({"oracle", "2dp", f, "--max-edges", "20"});
  }
  for (const char* tb : {"first", "best", "worst"}) commands.push_back({"baseline", "ae", fig2_path, "--tie-break", tb});

  for (const auto& args : commands) {
    ++r.cases;
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    std::string line;
    for (const auto& a : args) line += a + " ";
    if (!(first == second)) r.fail("differs: " + line);
    if (first.code == cli::kInvalid) r.fail("rejected: " + line + first.err);
  }
  return r;
}

}  // namespace act2dp::testing
