// Copyright 2026 The parabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parabraid/commands.hpp"

#include "CLI11.hpp"

#include <clocale>
#include <iostream>

namespace {

int finish(const parabraid::CommandResult& r) {
  if (!r.output.empty()) std::cout << r.output << '\n';
  if (!r.error.empty()) std::cerr << "error: " << r.error << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"Z3-parafermion braid, Yang-Baxter and Jones-representation checks"};
  app.require_subcommand(1);

  double tol = parabraid::kDefaultVerifyTolerance;
  std::uint64_t seed = parabraid::kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "run every identity check, JSON report");
  verify->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for random theta samples");
  bool no_timestamp = false;
  verify->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the report");

  double scan_min = 0.0;
  double scan_max = 0.0;
  int steps = 0;
  std::string out_path;
  bool base3 = false;
  auto* scan = app.add_subcommand("scan", "sweep theta, write CSV, print extrema JSON");
  scan->add_option("--min", scan_min, "lower theta (radians)")->required();
  scan->add_option("--max", scan_max, "upper theta (radians)")->required();
  scan->add_option("--steps", steps, "number of samples, endpoints included")->required();
  scan->add_option("--out", out_path, "CSV output path")->required();
  scan->add_flag("--base3", base3, "append entropy / ln 3 column");

  double theta1 = 0.0;
  double theta3 = 0.0;
  auto* ybe = app.add_subcommand("ybe-check", "Yang-Baxter residuals for constrained theta2");
  ybe->add_option("--theta1", theta1)->required();
  ybe->add_option("--theta3", theta3)->required();

  std::string op;
  double theta = 0.0;
  bool exact = false;
  auto* sectors = app.add_subcommand("sectors", "parity-sector blocks of a 9x9 operator");
  sectors->add_option("--op", op)->required()->check(
      CLI::IsMember({"R12", "R23", "B12", "B23", "T"}));
  sectors->add_option("--theta", theta, "spectral parameter for R12/R23");
  sectors->add_flag("--exact", exact, "print exact constants symbolically");

  auto* jones = app.add_subcommand("jones", "project T'_i and B'_i onto the topological basis");
  jones->add_flag("--exact", exact, "print exact constants symbolically");

  auto* state = app.add_subcommand("state", "amplitudes, l1-norm and entropy of |Psi(theta)>");
  state->add_option("--theta", theta)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : parabraid::kExitUsageError;
  }

  try {
    if (*verify) {
      const parabraid::VerifyReport report = parabraid::cmd_verify(tol, seed);
      std::cout << report.to_json(!no_timestamp).dump(2) << '\n';
      return report.overall_pass ? parabraid::kExitPass : parabraid::kExitVerificationFailure;
    }
    if (*scan) return finish(parabraid::cmd_scan(scan_min, scan_max, steps, out_path, base3));
    if (*ybe) return finish(parabraid::cmd_ybe_check(theta1, theta3));
    if (*sectors) return finish(parabraid::cmd_sectors(op, theta, exact));
    if (*jones) return finish(parabraid::cmd_jones(exact));
    if (*state) return finish(parabraid::cmd_state(theta));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parabraid::kExitVerificationFailure;
  }
  return parabraid::kExitUsageError;
}
