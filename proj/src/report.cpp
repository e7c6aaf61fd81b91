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

#include "parabraid/report.hpp"

#include <algorithm>
#include <cmath>

namespace parabraid {

const Check& AlgebraReport::add(std::string name, double residual, double tolerance,
                                Check::Mode mode) {
  // NaN never passes either mode.
  const bool ok = mode == Check::Mode::below ? residual < tolerance : residual > tolerance;
  checks.push_back({std::move(name), residual, tolerance, ok, mode});
  pass = pass && ok;
  return checks.back();
}

void AlgebraReport::append(const AlgebraReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  pass = pass && other.pass;
}

double AlgebraReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) {
    if (c.mode == Check::Mode::below) m = std::max(m, c.residual);
  }
  return m;
}

}  // namespace parabraid
