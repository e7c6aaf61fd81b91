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

#include <string>
#include <vector>

namespace parabraid {

struct Check {
  enum class Mode {
    below,  // pass iff residual < tolerance
    above,  // negative control: pass iff residual > tolerance
  };

  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Mode mode = Mode::below;
};

/// Named residuals of an identity suite. pass is the AND over checks;
/// notes carry informational measurements that do not gate pass.
struct AlgebraReport {
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool pass = true;

  const Check& add(std::string name, double residual, double tolerance,
                   Check::Mode mode = Check::Mode::below);
  void note(std::string text) { notes.push_back(std::move(text)); }
  void append(const AlgebraReport& other);
  double max_residual() const;
};

}  // namespace parabraid
