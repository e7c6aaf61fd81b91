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

#include "parabraid/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace parabraid {

/// Spectral parameters of one Yang-Baxter instance
///   R_i(t1) R_{i+1}(t2) R_i(t3) = R_{i+1}(t3) R_i(t2) R_{i+1}(t1).
struct YbeTriple {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

/// Raised by theta2_of where the additivity law has no finite value.
class DegenerateConstraint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// R(theta) = (2/sqrt3)(cos(theta + pi/6) I + sin(theta) B).
///
/// R(pi/3) = B and R(0) = I; R(theta + pi) = -R(theta).
template <typename Derived>
[[nodiscard]] auto r_matrix(const Eigen::MatrixBase<Derived>& b,
                            typename Eigen::NumTraits<typename Derived::Scalar>::Real theta)
    -> Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Result = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Real scale = Real(2) * std::numbers::inv_sqrt3_v<Real>;
  const Real a = scale * std::cos(theta + std::numbers::pi_v<Real> / Real(6));
  const Real s = scale * std::sin(theta);
  Result r = s * b;
  r.diagonal().array() += a;
  return r;
}

/// theta2 from tan t2 = (tan t1 + tan t3) / (1 + tan t1 tan t3 / 3), principal
/// branch (-pi/2, pi/2). Throws DegenerateConstraint when a tangent is
/// undefined or the denominator vanishes.
double theta2_of(double theta1, double theta3);

/// {theta1, theta2_of(theta1, theta3), theta3}.
YbeTriple constrained_triple(double theta1, double theta3);

/// u = tan(theta) / sqrt3, the velocity-like parameter that composes as
/// u2 = (u1 + u3) / (1 + u1 u3).
double rapidity(double theta);

/// ||R1(t1) R2(t2) R1(t3) - R2(t3) R1(t2) R2(t1)||_F with both sides formed
/// explicitly from r_matrix.
double ybe_residual(const ComplexMatrix& b1, const ComplexMatrix& b2, const YbeTriple& triple);

}  // namespace parabraid
