// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdiscord::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2 };

struct RunConfig {
  std::string model;  // tfim | xxz | lmg | xstate
  std::optional<double> g;
  std::optional<double> delta;
  std::optional<double> lambda;
  std::optional<int> sites;
  std::string mode = "same";  // lmg: same | different
  double c[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
  std::optional<double> from;
  std::optional<double> to;
  std::optional<int> steps;
  std::vector<int> sizes;
  std::string out;
  std::optional<int> threads;
  // scaling
  std::string quantity = "dC";
  std::optional<int> degree;
  std::string input;
  // crossing
  std::string columns;
  bool refine = true;
  std::optional<double> tolerance;
};

/// Runs one invocation; `args` excludes the program name. Output goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdiscord::cli
