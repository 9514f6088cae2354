#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "act2dp/model.hpp"

namespace act2dp::cli {

enum ExitCode : int { kOk = 0, kInfeasible = 1, kInvalid = 2, kGuard = 3 };

struct VerifyReport {
  bool ok = true;
  bool feasible = false;
  /// Levels given in the solution plus middle costs of its edges.
  Cost value;
  /// tau of the edge set with its induced levels.
  Cost induced_value;
  std::vector<std::string> problems;
};

/// Recomputes feasibility and value of `solution` for `instance`. For
/// augmentation instances the designated path is added before checking.
VerifyReport verify(const ActivationInstance& instance, const Solution& solution);

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace act2dp::cli
