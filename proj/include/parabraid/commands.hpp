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

#pragma once

#include "parabraid/report.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace parabraid {

using Json = nlohmann::ordered_json;

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitUsageError = 2,
};

struct CommandResult {
  int exit_code = kExitPass;
  std::string output;  // JSON document for stdout
  std::string error;   // message for stderr, empty on success
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool overall_pass = true;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::string versions;
  std::string timestamp;  // UTC ISO-8601; the only non-deterministic field

  Json to_json(bool include_timestamp = true) const;
};

inline constexpr double kDefaultVerifyTolerance = 1e-10;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Runs every identity check in a fixed order. Tolerance applies to all
/// residual checks; negative controls keep their fixed 1e-3 floor.
VerifyReport cmd_verify(double tolerance = kDefaultVerifyTolerance,
                        std::uint64_t seed = kDefaultSeed);

/// Writes the theta sweep CSV to out_path and returns the refined extrema
/// summary.
CommandResult cmd_scan(double min, double max, int steps, const std::string& out_path,
                       bool base3_column = false);

CommandResult cmd_ybe_check(double theta1, double theta3);

/// op is one of R12, R23, B12, B23, T (the localized stencil T').
CommandResult cmd_sectors(const std::string& op, double theta, bool exact);

CommandResult cmd_jones(bool exact);

CommandResult cmd_state(double theta);

/// 12 significant digits, C locale.
std::string format_number(double value);

/// JSON number carrying exactly the 12-significant-digit value; non-finite
/// values become null.
Json json_number(double value);

/// Symbolic rendering of z when it is, within 1e-12, a phase e^{i k pi/6}
/// times one of the magnitudes {1, 2, 1/3, 2/3, sqrt2, sqrt3, 1/sqrt3,
/// 2/sqrt3, sqrt2/sqrt3}; otherwise the numeric rendering. Display only.
std::string exact_string(std::complex<double> z);

}  // namespace parabraid
