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

#include "parabraid/yang_baxter.hpp"

#include <sstream>

namespace parabraid {

namespace {

constexpr double kSingularTol = 1e-12;

double checked_tan(double theta, const char* label) {
  if (!std::isfinite(theta) || std::abs(std::cos(theta)) < kSingularTol) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "degenerate constraint: tan(" << label << ") undefined at " << label << " = "
        << theta << " (theta = pi/2 mod pi)";
    throw DegenerateConstraint(msg.str());
  }
  return std::tan(theta);
}

}  // namespace

double theta2_of(double theta1, double theta3) {
  const double t1 = checked_tan(theta1, "theta1");
  const double t3 = checked_tan(theta3, "theta3");
  const double denominator = 1.0 + t1 * t3 / 3.0;
  if (std::abs(denominator) < kSingularTol) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "degenerate constraint: singular denominator 1 + tan(theta1) tan(theta3)/3 = "
        << denominator;
    throw DegenerateConstraint(msg.str());
  }
  return std::atan((t1 + t3) / denominator);
}

YbeTriple constrained_triple(double theta1, double theta3) {
  return {theta1, theta2_of(theta1, theta3), theta3};
}

double rapidity(double theta) { return std::tan(theta) / std::numbers::sqrt3; }

double ybe_residual(const ComplexMatrix& b1, const ComplexMatrix& b2, const YbeTriple& triple) {
  detail::require_same_shape(b1, b2, "ybe_residual");
  const ComplexMatrix lhs =
      r_matrix(b1, triple.theta1) * r_matrix(b2, triple.theta2) * r_matrix(b1, triple.theta3);
  const ComplexMatrix rhs =
      r_matrix(b2, triple.theta3) * r_matrix(b1, triple.theta2) * r_matrix(b2, triple.theta1);
  return frobenius_distance(lhs, rhs);
}

}  // namespace parabraid
