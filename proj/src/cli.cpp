#include "act2dp/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "act2dp/approx.hpp"
#include "act2dp/baselines.hpp"
#include "act2dp/dpaug.hpp"
#include "act2dp/generate.hpp"
#include "act2dp/io.hpp"
#include "act2dp/oracle.hpp"

namespace act2dp::cli {

VerifyReport verify(const ActivationInstance& instance, const Solution& solution) {
  VerifyReport report;
  auto problem = [&report](std::string text) {
    report.ok = false;
    report.problems.push_back(std::move(text));
  };

  std::vector<EdgeId> known;
  for (EdgeId id : solution.edge_ids) {
    if (instance.has_edge(id))
      known.push_back(id);
    else
      problem("unknown edge id " + std::to_string(id));
  }
  std::sort(known.begin(), known.end());
  known.erase(std::unique(known.begin(), known.end()), known.end());

  const auto& levels = solution.levels.levels;
  const bool levels_sized = levels.size() == instance.n_nodes();
  if (!levels_sized)
    problem("levels has " + std::to_string(levels.size()) + " entries, expected " +
            std::to_string(instance.n_nodes()));

  if (levels_sized) {
    for (EdgeId id : known)
      if (!solution.levels.activates(instance.edge(id)))
        problem("level does not activate edge " + std::to_string(id));
    report.value = solution.levels.value();
  }
  for (EdgeId id : known) report.value += instance.edge(id).mid_cost;
  report.induced_value = tau(instance, known);

  report.feasible = instance.is_augmentation() ? augmentation_feasible(instance, known)
                                               : solution_feasible(instance, known);
  if (!report.feasible) problem("not two internally disjoint paths");
  if (solution.feasible != report.feasible) problem("feasible flag mismatch");
  if (levels_sized && solution.value != report.value)
    problem("value mismatch: claimed " + std::to_string(solution.value.value()) + ", recomputed " +
            std::to_string(report.value.value()));
  return report;
}

namespace {

ActivationInstance load_instance(const std::string& path) {
  auto instance = parse_instance(read_text_file(path));
  require_valid(instance);
  return instance;
}

Solution edge_cost_solution(const ActivationInstance& instance, const EdgeCostSolution& sol) {
  Solution out;
  out.edge_ids = sol.edges;
  out.levels.levels.assign(instance.n_nodes(), Cost{0});
  out.value = sol.cost;
  out.feasible = true;
  return out;
}

void print_trace(std::ostream& err, const ApproxResult& result) {
  auto show = [&err](MaybeCost c) -> std::ostream& { return c ? err << *c : err << "inf"; };
  for (const auto& g : result.trace) {
    err << "guess l_s=" << g.level_s << " l_t=" << g.level_t << " path=";
    show(g.path_value) << " aug=";
    show(g.augmentation_value) << " candidate=";
    show(g.candidate_value) << '\n';
  }
}

int emit(std::ostream& out, std::ostream& err, const std::optional<Solution>& solution) {
  if (!solution) {
    err << "infeasible\n";
    return kInfeasible;
  }
  out << emit_solution(*solution);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Activation 2 disjoint st-paths solvers"};
  app.require_subcommand(1);

  std::string problem;
  std::string instance_path;
  std::string solution_path;
  std::string tie_break_name = "first";
  std::string baseline_kind;
  std::string demo_name;
  std::size_t max_edges = kDefaultMaxEdges;
  bool no_prune = false;
  bool dump_table = false;
  bool verbose = false;
  GenerateParams gen;
  std::int64_t gen_max_cost = 3;

  auto* solve = app.add_subcommand("solve", "Exact augmentation DP or the 1.5-approximation");
  solve->add_option("problem", problem, "aug | 2dp")->required()->check(CLI::IsMember({"aug", "2dp"}));
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_flag("--no-prune", no_prune, "Keep dominated three-cost edges");
  solve->add_flag("--dump-table", dump_table, "Write the DP table to standard error");
  solve->add_flag("-v,--verbose", verbose, "Per-guess trace on standard error");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive subset search");
  oracle->add_option("problem", problem, "aug | 2dp")->required()->check(CLI::IsMember({"aug", "2dp"}));
  oracle->add_option("instance", instance_path, "Instance file")->required();
  oracle->add_option("--max-edges", max_edges, "Largest candidate edge count enumerated");

  auto* baseline = app.add_subcommand("baseline", "Reference algorithms over a Hamiltonian path");
  baseline->add_option("kind", baseline_kind, "ae | edp-aug | dp-aug")
      ->required()
      ->check(CLI::IsMember({"ae", "edp-aug", "dp-aug"}));
  baseline->add_option("instance", instance_path, "Instance file")->required();
  baseline->add_option("--tie-break", tie_break_name, "first | best | worst")
      ->check(CLI::IsMember({"first", "best", "worst"}));

  auto* generate_cmd = app.add_subcommand("gen", "Deterministic random instance");
  generate_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
  generate_cmd->add_option("--extra-edges", gen.extra_edges, "Random chords");
  generate_cmd->add_option("--max-cost", gen_max_cost, "Largest cost")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--seed", gen.seed, "Random seed");
  generate_cmd->add_option("--off-path", gen.off_path_nodes, "Nodes attached off the path");
  generate_cmd->add_flag("--special-01", gen.special_case_01, "0/1 special case");
  generate_cmd->add_flag("--two-dp", gen.two_dp, "Random costs everywhere, no designated path");

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", instance_path, "Instance file")->required();
  verify_cmd->add_option("solution", solution_path, "Solution file")->required();

  auto* demo = app.add_subcommand("demo", "Built-in instances");
  demo->add_option("name", demo_name, "fig2")->required()->check(CLI::IsMember({"fig2"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*solve) {
      const auto instance = load_instance(instance_path);
      if (problem == "aug") {
        ExactOptions options;
        options.reduce.prune_dominated = !no_prune;
        if (dump_table) options.dump_table = &err;
        const auto result = solve_augmentation_exact(instance, options);
        return emit(out, err, result ? std::optional<Solution>(result->solution) : std::nullopt);
      }
      const auto result = solve_2dp_15(instance);
      if (verbose) print_trace(err, result);
      return emit(out, err, result.solution);
    }
    if (*oracle) {
      const auto instance = load_instance(instance_path);
      return emit(out, err,
                  problem == "aug" ? brute_force_augmentation(instance, max_edges)
                                   : brute_force_2dp(instance, max_edges));
    }
    if (*baseline) {
      const auto instance = load_instance(instance_path);
      if (baseline_kind == "ae") {
        const auto result = ae_solve(ae_build(instance), *parse_tie_break(tie_break_name));
        if (!result) return emit(out, err, std::nullopt);
        err << "minimum path weight " << result->weight << ", " << result->paths_examined
            << " minimum-weight paths examined\n";
        return emit(out, err, result->solution);
      }
      const auto costs = edge_cost_instance(instance);
      const auto result =
          baseline_kind == "edp-aug" ? alg1_mincost_2edp_aug(costs) : alg1_nodedisjoint_variant(costs);
      return emit(out, err, result ? std::optional<Solution>(edge_cost_solution(instance, *result)) : std::nullopt);
    }
    if (*generate_cmd) {
      gen.max_cost = Cost{gen_max_cost};
      out << emit_instance(generate(gen));
      return kOk;
    }
    if (*verify_cmd) {
      const auto instance = load_instance(instance_path);
      const auto solution = parse_solution(read_text_file(solution_path));
      const auto report = verify(instance, solution);
      nlohmann::ordered_json doc;
      doc["ok"] = report.ok;
      doc["feasible"] = report.feasible;
      doc["value"] = report.value.value();
      doc["induced_value"] = report.induced_value.value();
      doc["problems"] = report.problems;
      out << doc.dump(2) << '\n';
      for (const auto& p : report.problems) err << p << '\n';
      return report.ok ? kOk : kInfeasible;
    }
    if (*demo) {
      out << emit_instance(fig2_instance());
      return kOk;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  }
  return kInvalid;
}

}  // namespace act2dp::cli
