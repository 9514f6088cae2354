// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "properties.hpp"

using namespace act2dp;
using namespace act2dp::testing;

namespace {

int failed = 0;

void report(int number, const std::string& title, const Report& r) {
  std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << number << ". " << title << " (" << r.cases << " cases";
  if (r.seconds > 0) std::cout << ", " << std::to_string(r.seconds).substr(0, 5) << " s";
  if (r.feasible > 0) std::cout << ", " << r.feasible << " feasible";
  std::cout << ")\n";
  for (const auto& f : r.failures) std::cout << "      " << f << '\n';
  if (!r.ok()) ++failed;
}

}  // namespace

int main() {
  report(1, "counterexample: DP 2, AE weight 4, best 2, worst 4, ratio 2", check_fig2_counterexample());

  // about 40% of random augmentation instances are feasible; require 200 of those
  const auto aug = augmentation_corpus(500);
  auto exact = check_exact_vs_oracle(aug);
  if (exact.feasible < 200) exact.fail("only " + std::to_string(exact.feasible) + " feasible instances");
  report(2, "exact DP equals brute force on random augmentation instances", exact);
  report(3, "reduced instance optimum equals original optimum", check_reduction_equivalence(aug));

  std::size_t feasible = 0;
  auto approx = check_approximation(two_dp_corpus(260), &feasible);
  if (feasible < 100) approx.fail("only " + std::to_string(feasible) + " feasible instances");
  report(4, "opt <= 1.5-approximation <= 1.5 opt, fig2 full problem gives 2", approx);

  auto algebra = check_forced_cost_algebra(aug);
  const auto families = check_family_equivalence(aug);
  algebra.cases += families.cases;
  for (const auto& f : families.failures) algebra.fail("family: " + f);
  report(5, "forced-cost bound, decomposition identity, base case f = g", algebra);

  report(6, "backward-path baseline and node-disjoint variant equal brute force", check_baselines(edge_cost_corpus(150)));
  report(7, "chain order of reconstructed and minimal sets", check_chain_order(aug));

  const auto dir = std::filesystem::temp_directory_path() / "act2dp_acceptance";
  report(8, "every subcommand is byte-for-byte deterministic", check_cli_determinism(dir));
  std::filesystem::remove_all(dir);

  return failed == 0 ? 0 : 1;
}
